//! The `pairinglab` command line.
//!
//! Exit codes: 0 success, 1 verification violations, 2 parse error,
//! 3 validation failure, 4 not a canonical pairing state, 5 infeasible
//! parameters or unknown suite.

pub mod statefile;
pub mod verify;

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::constructions::{
    appendix_a_chain, cnot_embed, make_mc_state, make_qubit_qudit_pairing, named_counterexample, MCSpec, NamedState,
    DEFAULT_CHAIN_CAP,
};
use crate::error::Error;
use crate::linalg::{hermitian_eig, BipartiteState, DensityMatrix, Matrix, C64, DEFAULT_VALIDATION_TOL};
use crate::measures::{bipartite_report, c_l1, measure_report, negativity, MeasureReport};
use crate::pairing::{
    detect_canonical_pairing, distill_witness, distillable_lower_bound, pairing_measures, qubit_qudit_decompose,
    PairingCertificate, QubitQuditBlock, DEFAULT_PAIRING_TOL,
};
pub use statefile::{read_state_file, write_state_file, LoadedState, StateFile};
pub use verify::{run_suite, VerifyReport, SUITES};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATIONS: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_VALIDATION: i32 = 3;
pub const EXIT_NOT_PAIRING: i32 = 4;
pub const EXIT_INFEASIBLE: i32 = 5;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("validation failed: {0}")]
    Validation(String),
    #[error("not a canonical pairing state: {0}")]
    NotPairing(String),
    #[error("infeasible parameters: {0}")]
    Infeasible(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => EXIT_PARSE,
            CliError::Validation(_) => EXIT_VALIDATION,
            CliError::NotPairing(_) => EXIT_NOT_PAIRING,
            CliError::Infeasible(_) | CliError::Io(_) => EXIT_INFEASIBLE,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::NotHermitian { .. }
            | Error::InvalidState(_)
            | Error::NegativeEigenvalue(_)
            | Error::NonFinite { .. }
            | Error::NoConvergence { .. } => CliError::Validation(e.to_string()),
            Error::NotCanonicalPairing => CliError::NotPairing(e.to_string()),
            _ => CliError::Infeasible(e.to_string()),
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "pairinglab", version, about = "Coherence, negativity and pairing-state toolkit")]
pub struct Cli {
    /// Relative zero tolerance for counting and structure detection.
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Coherence and entanglement measures of a state file.
    Measure { path: PathBuf },
    /// Certify a canonical pairing state.
    Detect {
        path: PathBuf,
        /// For d_A = 2, also print the block decomposition and closed-form measures.
        #[arg(long)]
        decompose: bool,
    },
    /// Build a state and write it with a `.report.json` sidecar.
    Construct(ConstructArgs),
    /// Run seeded property suites.
    Verify(VerifyArgs),
    /// Distillation witnesses for each transposition of a pairing state.
    Witness {
        path: PathBuf,
        /// Only this transposition (0-based).
        #[arg(long)]
        which: Option<usize>,
        /// A-label pairs for the distillable-entanglement lower bound, e.g. `0,1,2,3`.
        #[arg(long, value_delimiter = ',')]
        pairs: Option<Vec<usize>>,
    },
}

#[derive(Args, Debug)]
pub struct ConstructArgs {
    /// mc | qubit-qudit | cnot-embed | appendix-a | counterexample
    pub kind: String,
    #[arg(long)]
    pub out: PathBuf,
    /// Input state file (cnot-embed, appendix-a, mc) or block spec (qubit-qudit).
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Coefficient matrix for mc as JSON, real entries or `[re, im]` pairs.
    #[arg(long)]
    pub coeffs: Option<String>,
    #[arg(long, value_delimiter = ',')]
    pub a_labels: Option<Vec<usize>>,
    #[arg(long, value_delimiter = ',')]
    pub b_labels: Option<Vec<usize>>,
    #[arg(long, num_args = 2, value_names = ["DA", "DB"])]
    pub dims: Option<Vec<usize>>,
    /// Phases of the input are L-th roots of unity (appendix-a).
    #[arg(long = "L", default_value_t = 1)]
    pub l: usize,
    #[arg(long, default_value_t = DEFAULT_CHAIN_CAP)]
    pub cap: usize,
    /// tau-remark | appendix-f | isotropic
    #[arg(long)]
    pub name: Option<String>,
    /// Mixing weight for isotropic.
    #[arg(long)]
    pub p: Option<f64>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// One of the suite names, or `all`.
    #[arg(long, default_value = "all")]
    pub suite: String,
    #[arg(long, default_value_t = 100)]
    pub trials: usize,
    #[arg(long, env = "PAIRINGLAB_SEED", default_value_t = 0)]
    pub seed: u64,
    #[arg(long, num_args = 2, value_names = ["DA", "DB"])]
    pub dims: Option<Vec<usize>>,
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
        }
    };
    match dispatch(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(cli: &Cli) -> Result<i32, CliError> {
    let out = Output { json: cli.json };
    match &cli.command {
        Command::Measure { path } => cmd_measure(path, cli.tol, out),
        Command::Detect { path, decompose } => cmd_detect(path, cli.tol, *decompose, out),
        Command::Construct(args) => cmd_construct(args, cli.tol, out),
        Command::Verify(args) => cmd_verify(args, out),
        Command::Witness { path, which, pairs } => cmd_witness(path, cli.tol, *which, pairs.as_deref(), out),
    }
}

/// Rounds to 12 significant digits for display.
pub fn fmt_sig(x: f64) -> String {
    if !x.is_finite() || x == 0.0 {
        return format!("{}", if x == 0.0 { 0.0 } else { x });
    }
    let rounded: f64 = format!("{x:.11e}").parse().unwrap_or(x);
    if (1e-4..1e12).contains(&rounded.abs()) {
        format!("{rounded}")
    } else {
        format!("{rounded:e}")
    }
}

#[derive(Clone, Copy)]
struct Output {
    json: bool,
}

impl Output {
    fn emit(&self, value: &Value, text: impl FnOnce() -> String) {
        if self.json {
            println!("{}", serde_json::to_string_pretty(value).expect("report serializes"));
        } else {
            print!("{}", text());
        }
    }
}

fn load(path: &Path) -> Result<(StateFile, LoadedState), CliError> {
    let file = read_state_file(path)?;
    let state = file.load(DEFAULT_VALIDATION_TOL)?;
    Ok((file, state))
}

fn load_bipartite(path: &Path) -> Result<BipartiteState, CliError> {
    match load(path)?.1 {
        LoadedState::Bipartite(bs) => Ok(bs),
        LoadedState::Single(_) => Err(CliError::Validation("expected a bipartite state (dims [d_A, d_B])".into())),
    }
}

fn report_text(report: &MeasureReport) -> String {
    let mut s = String::new();
    for (name, entry) in &report.entries {
        s += &format!("{:<5} = {}    [{}]\n", name.as_str(), fmt_sig(entry.value), entry.formula);
    }
    for w in &report.warnings {
        s += &format!("warning: {w}\n");
    }
    s
}

fn cmd_measure(path: &Path, tol: Option<f64>, out: Output) -> Result<i32, CliError> {
    let (file, state) = load(path)?;
    let report = match &state {
        LoadedState::Single(rho) => measure_report(rho)?,
        LoadedState::Bipartite(bs) => bipartite_report(bs, tol)?,
    };
    let value = json!({ "dims": file.dims, "label": file.label, "report": report });
    out.emit(&value, || report_text(&report));
    Ok(EXIT_OK)
}

fn label(l: (usize, usize)) -> String {
    format!("|{}{}⟩", l.0, l.1)
}

fn certificate_text(cert: &PairingCertificate) -> String {
    let mut s = format!("pairing number: {}\n", cert.pairing_number);
    for (a, b) in &cert.transpositions {
        s += &format!("transposition: {} <-> {}\n", label(*a), label(*b));
    }
    let fixed: Vec<String> = cert.fixed_points.iter().map(|&l| label(l)).collect();
    s += &format!("fixed points: {}\n", fixed.join(" "));
    s
}

fn detect(bs: &BipartiteState, tol: Option<f64>) -> Result<PairingCertificate, CliError> {
    detect_canonical_pairing(bs, tol.unwrap_or(DEFAULT_PAIRING_TOL))?
        .ok_or_else(|| CliError::NotPairing("partial transpose is not a disjoint-transposition monomial".into()))
}

fn cmd_detect(path: &Path, tol: Option<f64>, decompose: bool, out: Output) -> Result<i32, CliError> {
    let bs = load_bipartite(path)?;
    let cert = detect(&bs, tol)?;
    let mut value = json!({ "certificate": cert });
    let mut text = certificate_text(&cert);
    if decompose {
        if bs.d_a() == 2 {
            let dec = qubit_qudit_decompose(&bs)?;
            let m = pairing_measures(&dec)?;
            text += &format!("diagonal weight p0: {}\n", fmt_sig(dec.p0));
            let mut blocks = Vec::new();
            for b in &dec.blocks {
                let c = b.coeffs.matrix();
                text += &format!(
                    "block: weight {}, columns ({}, {}), coherence {}\n",
                    fmt_sig(b.weight),
                    b.columns.0,
                    b.columns.1,
                    fmt_sig(c[(0, 1)].norm())
                );
                blocks.push(json!({
                    "weight": b.weight,
                    "columns": [b.columns.0, b.columns.1],
                    "coeffs": matrix_json(c),
                }));
            }
            text += &format!(
                "E_D = C_D = {}\nE_C = C_C = {}\nE_PPT = {}\n",
                fmt_sig(m.e_d),
                fmt_sig(m.e_c),
                fmt_sig(m.e_ppt)
            );
            value["decomposition"] = json!({ "p0": dec.p0, "blocks": blocks, "measures": m });
        } else {
            text += &format!("decomposition skipped: d_A = {} (needs 2)\n", bs.d_a());
            value["decomposition"] = Value::Null;
        }
    }
    out.emit(&value, || text);
    Ok(EXIT_OK)
}

fn cmd_witness(
    path: &Path,
    tol: Option<f64>,
    which: Option<usize>,
    pairs: Option<&[usize]>,
    out: Output,
) -> Result<i32, CliError> {
    let bs = load_bipartite(path)?;
    let cert = detect(&bs, tol)?;
    if cert.pairing_number == 0 {
        return Err(CliError::NotPairing("certificate has no transposition; the state is separable".into()));
    }
    let indices: Vec<usize> = match which {
        Some(i) => vec![i],
        None => (0..cert.pairing_number).collect(),
    };
    let mut text = String::new();
    let mut witnesses = Vec::new();
    for i in indices {
        let w = distill_witness(&bs, &cert, i)?;
        let (a, b) = cert.transpositions[i];
        text += &format!(
            "transposition {i} ({} <-> {}): weight {}, block negativity {}\n",
            label(a),
            label(b),
            fmt_sig(w.weight),
            fmt_sig(w.block_negativity)
        );
        witnesses.push(json!({
            "index": i,
            "transposition": [a, b],
            "weight": w.weight,
            "block_negativity": w.block_negativity,
            "qubit_block": matrix_json(w.qubit_block.matrix()),
        }));
    }
    let mut value = json!({ "witnesses": witnesses });

    let a_pairs: Option<Vec<[usize; 2]>> = match pairs {
        Some(p) if p.len() % 2 != 0 => return Err(CliError::Infeasible("--pairs needs an even number of labels".into())),
        Some(p) => Some(p.chunks(2).map(|c| [c[0], c[1]]).collect()),
        None if bs.d_a() == 2 => Some(vec![[0, 1]]),
        None => None,
    };
    if let Some(a_pairs) = a_pairs {
        let bound = distillable_lower_bound(&bs, &cert, &a_pairs, 1e-12)?;
        let n_l = negativity(&bs)?.log;
        text += &format!("E_D lower bound: {}\nN_L upper bound: {}\n", fmt_sig(bound), fmt_sig(n_l));
        value["lower_bound"] = json!({ "pairs": a_pairs, "value": bound, "log_negativity": n_l });
    }
    out.emit(&value, || text);
    Ok(EXIT_OK)
}

fn matrix_json(m: &Matrix) -> Value {
    StateFile::from_matrix(m, vec![m.rows()], None).matrix.into()
}

/// A JSON matrix entry: a real number or an `[re, im]` pair.
#[derive(Deserialize, Clone, Copy)]
#[serde(untagged)]
enum Entry {
    Real(f64),
    Complex([f64; 2]),
}

fn parse_matrix(rows: &[Vec<Entry>], what: &str) -> Result<Matrix, CliError> {
    let n = rows.len();
    let mut data = Vec::with_capacity(n * n);
    for (r, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(CliError::Parse(format!("{what}[{r}]: {} entries, expected {n}", row.len())));
        }
        data.extend(row.iter().map(|e| match *e {
            Entry::Real(x) => C64::new(x, 0.0),
            Entry::Complex([re, im]) => C64::new(re, im),
        }));
    }
    Matrix::new(n, n, data).map_err(|e| CliError::Parse(format!("{what}: {e}")))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct BlockSpec {
    weight: f64,
    coeffs: Vec<Vec<Entry>>,
    columns: [usize; 2],
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct QubitQuditSpec {
    d_b: usize,
    #[serde(default)]
    p0: f64,
    #[serde(default)]
    diag: Vec<f64>,
    #[serde(default)]
    blocks: Vec<BlockSpec>,
}

fn require<'a, T>(opt: &'a Option<T>, flag: &str, kind: &str) -> Result<&'a T, CliError> {
    opt.as_ref().ok_or_else(|| CliError::Infeasible(format!("{kind} needs --{flag}")))
}

fn write_outputs(out_path: &Path, file: &StateFile, report: &Value) -> Result<PathBuf, CliError> {
    write_state_file(out_path, file)?;
    let sidecar = PathBuf::from(format!("{}.report.json", out_path.display()));
    let text = serde_json::to_string_pretty(report).map_err(|e| CliError::Io(e.to_string()))?;
    fs::write(&sidecar, text + "\n").map_err(|e| CliError::Io(format!("{}: {e}", sidecar.display())))?;
    Ok(sidecar)
}

fn pairing_summary(bs: &BipartiteState) -> Result<Value, CliError> {
    let n = negativity(bs)?.value;
    let l1 = c_l1(bs.state());
    let cert = detect_canonical_pairing(bs, DEFAULT_PAIRING_TOL)?;
    Ok(json!({
        "negativity": n,
        "c_l1": l1,
        "gap": l1 - n,
        "pairing_number": cert.map(|c| c.pairing_number),
    }))
}

fn cmd_construct(args: &ConstructArgs, tol: Option<f64>, out: Output) -> Result<i32, CliError> {
    let kind = args.kind.as_str();
    let (file, mut report) = match kind {
        "mc" => construct_mc(args)?,
        "qubit-qudit" => {
            let path = require(&args.input, "input", kind)?;
            let text = fs::read_to_string(path).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
            let spec: QubitQuditSpec =
                serde_json::from_str(&text).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
            let mut blocks = Vec::new();
            for (i, b) in spec.blocks.iter().enumerate() {
                let coeffs = DensityMatrix::new(parse_matrix(&b.coeffs, &format!("blocks[{i}].coeffs"))?)
                    .map_err(|e| CliError::Infeasible(format!("blocks[{i}].coeffs: {e}")))?;
                blocks.push(QubitQuditBlock { weight: b.weight, coeffs, columns: (b.columns[0], b.columns[1]) });
            }
            let bs = make_qubit_qudit_pairing(spec.p0, &spec.diag, &blocks, spec.d_b)?;
            (StateFile::from_bipartite(&bs, Some("qubit-qudit".into())), pairing_summary(&bs)?)
        }
        "cnot-embed" => {
            let (_, state) = load(require(&args.input, "input", kind)?)?;
            let rho = state.density();
            let bs = cnot_embed(rho);
            let mut report = pairing_summary(&bs)?;
            report["input_c_l1"] = json!(c_l1(rho));
            (StateFile::from_bipartite(&bs, Some("cnot-embed".into())), report)
        }
        "appendix-a" => {
            let (_, state) = load(require(&args.input, "input", kind)?)?;
            let chain = appendix_a_chain(state.density(), args.l, args.cap)?;
            let rho4 = DensityMatrix::new(chain.rho4.to_dense())?;
            let report = json!({
                "K": chain.k,
                "L": chain.l,
                "d": chain.d,
                "dims": { "rho2": chain.rho2.dim(), "rho3": chain.rho3.dim(), "rho4": chain.rho4.dim() },
                "m_multiplicities": chain.m_multiplicities,
                "m_weights": chain.m_weights,
                "checks": chain.checks,
                "all_pass": chain.checks.all_pass(),
            });
            (StateFile::from_density(&rho4, Some("appendix-a rho4".into())), report)
        }
        "counterexample" => {
            let name = require(&args.name, "name", kind)?;
            let params: Vec<f64> = args.p.into_iter().collect();
            match named_counterexample(name, &params)? {
                NamedState::WithModulus { rho, tau } => {
                    let tau_eigs = hermitian_eig(&tau)?.eigenvalues;
                    let report = json!({
                        "name": name,
                        "rho_eigenvalues": rho.eigenvalues()?,
                        "tau_eigenvalues": tau_eigs,
                        "tau_min_eigenvalue": tau_eigs.last(),
                        "tau_is_state": tau_eigs.last().is_some_and(|&x| x >= -1e-12),
                    });
                    (StateFile::from_density(&rho, Some(name.clone())), report)
                }
                NamedState::Bipartite(bs) => {
                    let mut report = pairing_summary(&bs)?;
                    report["name"] = json!(name);
                    report["qubit_qudit_decompose"] = match qubit_qudit_decompose(&bs) {
                        Ok(dec) => json!({ "blocks": dec.blocks.len(), "p0": dec.p0 }),
                        Err(e) => json!({ "refused": e.to_string() }),
                    };
                    (StateFile::from_bipartite(&bs, Some(name.clone())), report)
                }
            }
        }
        other => {
            return Err(CliError::Infeasible(format!(
                "unknown kind {other}; expected mc, qubit-qudit, cnot-embed, appendix-a or counterexample"
            )))
        }
    };
    if let Some(t) = tol {
        report["tol"] = json!(t);
    }
    let sidecar = write_outputs(&args.out, &file, &report)?;
    out.emit(&report, || {
        format!("wrote {} and {}\n{}\n", args.out.display(), sidecar.display(), flat_text(&report, ""))
    });
    Ok(EXIT_OK)
}

fn construct_mc(args: &ConstructArgs) -> Result<(StateFile, Value), CliError> {
    let coeffs = match (&args.coeffs, &args.input) {
        (Some(text), _) => {
            let rows: Vec<Vec<Entry>> =
                serde_json::from_str(text).map_err(|e| CliError::Parse(format!("--coeffs: {e}")))?;
            parse_matrix(&rows, "coeffs")?
        }
        (None, Some(path)) => read_state_file(path)?.to_matrix()?,
        (None, None) => return Err(CliError::Infeasible("mc needs --coeffs or --input".into())),
    };
    let n = coeffs.rows();
    let a = args.a_labels.clone().unwrap_or_else(|| (0..n).collect());
    let b = args.b_labels.clone().unwrap_or_else(|| (0..n).collect());
    let (d_a, d_b) = match args.dims.as_deref() {
        Some(&[d_a, d_b]) => (d_a, d_b),
        _ => (a.iter().max().map_or(1, |m| m + 1), b.iter().max().map_or(1, |m| m + 1)),
    };
    let spec = MCSpec::new(coeffs, a, b)?;
    let bs = make_mc_state(&spec, d_a, d_b)?;
    Ok((StateFile::from_bipartite(&bs, Some("mc".into())), pairing_summary(&bs)?))
}

/// `key: value` lines for a JSON object, numbers at 12 significant digits.
fn flat_text(value: &Value, prefix: &str) -> String {
    match value {
        Value::Object(map) => map
            .iter()
            .map(|(k, v)| {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flat_text(v, &key)
            })
            .collect::<Vec<_>>()
            .join("\n"),
        Value::Number(n) if n.is_f64() => format!("{prefix}: {}", fmt_sig(n.as_f64().unwrap_or(f64::NAN))),
        Value::Array(items) if items.iter().all(|v| v.is_number()) => {
            let parts: Vec<String> = items.iter().map(|v| fmt_sig(v.as_f64().unwrap_or(f64::NAN))).collect();
            format!("{prefix}: [{}]", parts.join(", "))
        }
        other => format!("{prefix}: {other}"),
    }
}

fn cmd_verify(args: &VerifyArgs, out: Output) -> Result<i32, CliError> {
    let dims = match args.dims.as_deref() {
        Some(&[a, b]) => Some([a, b]),
        _ => None,
    };
    let suites: Vec<&str> = if args.suite == "all" {
        SUITES.to_vec()
    } else if SUITES.contains(&args.suite.as_str()) {
        vec![args.suite.as_str()]
    } else {
        return Err(CliError::Infeasible(format!("unknown suite {}; expected one of {} or all", args.suite, SUITES.join(", "))));
    };
    let mut reports = Vec::new();
    for suite in suites {
        reports.push(run_suite(suite, args.trials, args.seed, dims)?);
    }
    let failed = reports.iter().any(|r| !r.passed());
    let value = if reports.len() == 1 { json!(reports[0]) } else { json!(reports) };
    out.emit(&value, || reports.iter().map(verify_text).collect());
    Ok(if failed { EXIT_VIOLATIONS } else { EXIT_OK })
}

fn verify_text(r: &VerifyReport) -> String {
    let mut s = format!(
        "{}: {} trials, seed {}, {} violations, {:.0} ms\n",
        r.suite,
        r.trials,
        r.seed,
        r.violations.len(),
        r.elapsed_ms
    );
    for (q, g) in &r.worst_gap {
        s += &format!("  worst gap [{q}]: {}\n", fmt_sig(*g));
    }
    for v in r.violations.iter().take(20) {
        s += &format!(
            "  trial {}: {} (lhs {}, rhs {}, gap {})\n",
            v.trial,
            v.quantity,
            fmt_sig(v.lhs),
            fmt_sig(v.rhs),
            fmt_sig(v.gap)
        );
    }
    if r.violations.len() > 20 {
        s += &format!("  ... {} more\n", r.violations.len() - 20);
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sig_digits() {
        assert_eq!(fmt_sig(0.27807190511263774), "0.278071905113");
        assert_eq!(fmt_sig(1.0), "1");
        assert_eq!(fmt_sig(0.0), "0");
        assert_eq!(fmt_sig(-1.5e-20), "-1.5e-20");
    }

    #[test]
    fn error_codes() {
        assert_eq!(CliError::from(Error::NotCanonicalPairing).exit_code(), EXIT_NOT_PAIRING);
        assert_eq!(CliError::from(Error::InvalidState("x".into())).exit_code(), EXIT_VALIDATION);
        assert_eq!(CliError::from(Error::UnknownName("x".into())).exit_code(), EXIT_INFEASIBLE);
    }
}
