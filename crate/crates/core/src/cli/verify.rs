//! Seeded property suites behind `pairinglab verify`.
//!
//! Trial `t` of a suite draws from stream `t` of the seed, so results do not
//! depend on how trials are scheduled across threads.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{bipartite_tensor, Matrix};
use crate::majorization::{trace_vs_l1, uvw_triple};
use crate::measures::{c_l0_count, c_l1, c_log, n0_count, negativity};
use crate::pairing::{
    detect_canonical_pairing, distill_witness, distillable_by_blocks, distillable_lower_bound, pairing_measures,
    qubit_qudit_decompose, DEFAULT_PAIRING_TOL,
};
use crate::randgen::{
    pairing_capacity, random_bipartite_state, random_canonical_pairing, random_canonical_pairing_with,
    random_complex_matrix, random_monomial_unitary, RngState, ALGORITHM,
};

pub const SUITES: [&str; 7] =
    ["negativity-bound", "l0-bound", "additivity", "pairing-roundtrip", "witness", "majorization", "lowerbound"];

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Violation {
    pub trial: usize,
    pub quantity: String,
    pub lhs: f64,
    pub rhs: f64,
    pub gap: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub trials: usize,
    pub seed: u64,
    pub dims: Option<[usize; 2]>,
    pub algorithm: &'static str,
    /// Sorted by trial index.
    pub violations: Vec<Violation>,
    /// Largest gap seen per checked quantity; for inequalities `lhs − rhs`,
    /// for equalities `|lhs − rhs|`.
    pub worst_gap: BTreeMap<String, f64>,
    pub elapsed_ms: f64,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

struct Check {
    quantity: &'static str,
    lhs: f64,
    rhs: f64,
    gap: f64,
    ok: bool,
}

/// `lhs ≤ rhs + tol`
fn le(quantity: &'static str, lhs: f64, rhs: f64, tol: f64) -> Check {
    Check { quantity, lhs, rhs, gap: lhs - rhs, ok: lhs <= rhs + tol }
}

/// `|lhs − rhs| ≤ tol`
fn eq(quantity: &'static str, lhs: f64, rhs: f64, tol: f64) -> Check {
    let gap = (lhs - rhs).abs();
    Check { quantity, lhs, rhs, gap, ok: gap <= tol }
}

/// `lhs > rhs`
fn gt(quantity: &'static str, lhs: f64, rhs: f64) -> Check {
    Check { quantity, lhs, rhs, gap: rhs - lhs, ok: lhs > rhs }
}

fn holds(quantity: &'static str, ok: bool) -> Check {
    let v = if ok { 1.0 } else { 0.0 };
    Check { quantity, lhs: v, rhs: 1.0, gap: 1.0 - v, ok }
}

fn pick(rng: &mut RngState, lo: usize, hi: usize) -> usize {
    rng.range(lo, hi)
}

fn dims_or(dims: Option<[usize; 2]>, rng: &mut RngState, a: (usize, usize), b: (usize, usize)) -> (usize, usize) {
    match dims {
        Some([d_a, d_b]) => (d_a, d_b),
        None => (pick(rng, a.0, a.1), pick(rng, b.0, b.1)),
    }
}

fn negativity_bound(rng: &mut RngState, dims: Option<[usize; 2]>) -> Result<Vec<Check>> {
    let (d_a, d_b) = dims_or(dims, rng, (2, 4), (2, 4));
    let bs = random_bipartite_state(d_a, d_b, rng);
    Ok(vec![le("N <= C_l1", negativity(&bs)?.value, c_l1(bs.state()), 1e-9)])
}

fn l0_bound(rng: &mut RngState, dims: Option<[usize; 2]>) -> Result<Vec<Check>> {
    let (d_a, d_b) = dims_or(dims, rng, (2, 4), (2, 4));
    let bs = random_bipartite_state(d_a, d_b, rng);
    let n0 = n0_count(&bs, None)?;
    let l0 = c_l0_count(bs.state(), None);
    Ok(vec![le("2 N0 <= C_l0", (2 * n0) as f64, l0 as f64, 0.0)])
}

fn additivity(rng: &mut RngState, dims: Option<[usize; 2]>) -> Result<Vec<Check>> {
    let (d_a, d_b) = dims_or(dims, rng, (2, 3), (2, 3));
    let rho = if rng.uniform() < 0.5 {
        random_bipartite_state(d_a, d_b, rng)
    } else {
        let n = pick(rng, 0, pairing_capacity(d_a, d_b));
        random_canonical_pairing(d_a, d_b, n, rng)?
    };
    let sigma = random_canonical_pairing(2, 2, pick(rng, 0, 1), rng)?;
    let prod = bipartite_tensor(&rho, &sigma);
    let (nr, ns, np) = (negativity(&rho)?, negativity(&sigma)?, negativity(&prod)?);
    Ok(vec![
        eq("N_L additive", np.log, nr.log + ns.log, 1e-8),
        eq("C_L additive", c_log(prod.state()), c_log(rho.state()) + c_log(sigma.state()), 1e-9),
    ])
}

fn pairing_trial(rng: &mut RngState, dims: Option<[usize; 2]>, min_pairs: usize) -> Result<(crate::BipartiteState, usize)> {
    let (d_a, d_b) = dims_or(dims, rng, (2, 4), (2, 6));
    let cap = pairing_capacity(d_a, d_b);
    let n = pick(rng, min_pairs.min(cap), cap);
    Ok((random_canonical_pairing(d_a, d_b, n, rng)?, n))
}

fn pairing_roundtrip(rng: &mut RngState, dims: Option<[usize; 2]>) -> Result<Vec<Check>> {
    let (bs, n) = pairing_trial(rng, dims, 0)?;
    let mut checks = Vec::new();
    let neg = negativity(&bs)?.value;
    checks.push(eq("N = C_l1", neg, c_l1(bs.state()), 1e-8));
    let Some(cert) = detect_canonical_pairing(&bs, DEFAULT_PAIRING_TOL)? else {
        checks.push(holds("certified", false));
        return Ok(checks);
    };
    checks.push(holds("certificate well formed", cert.is_well_formed()));
    checks.push(eq("pairing number", cert.pairing_number as f64, n as f64, 0.0));
    checks.push(eq("N0 = pairing number", n0_count(&bs, None)? as f64, n as f64, 0.0));
    if bs.d_a() == 2 {
        let dec = qubit_qudit_decompose(&bs)?;
        checks.push(le("reassembly error", dec.reassemble()?.matrix().max_abs_diff(bs.matrix()), 0.0, 1e-9));
        checks.push(eq("E_D by blocks", pairing_measures(&dec)?.e_d, distillable_by_blocks(&dec)?, 1e-8));
    }
    Ok(checks)
}

fn witness(rng: &mut RngState, dims: Option<[usize; 2]>) -> Result<Vec<Check>> {
    let (bs, _) = pairing_trial(rng, dims, 1)?;
    let Some(cert) = detect_canonical_pairing(&bs, DEFAULT_PAIRING_TOL)? else {
        return Ok(vec![holds("certified", false)]);
    };
    let mut checks = Vec::new();
    for i in 0..cert.pairing_number {
        let w = distill_witness(&bs, &cert, i)?;
        checks.push(gt("witness block negativity > 1e-6", w.block_negativity, 1e-6));
    }
    Ok(checks)
}

fn majorization(rng: &mut RngState, dims: Option<[usize; 2]>, trial: usize) -> Result<Vec<Check>> {
    let x = if trial % 2 == 1 {
        let d = dims.map_or_else(|| pick(rng, 1, 8), |[a, _]| a);
        let u = random_monomial_unitary(d, rng);
        Matrix::from_fn(d, d, |r, c| u[(r, c)] * (0.1 + rng.uniform()))
    } else {
        let (m, n) = dims_or(dims, rng, (1, 8), (1, 8));
        random_complex_matrix(m, n, rng)
    };
    let cmp = trace_vs_l1(&x, 1e-12)?;
    let mut checks = vec![
        le("trace norm <= l1 norm", cmp.trace_norm, cmp.l1_norm, 1e-9),
        holds("u < v < w", uvw_triple(&x)?.holds()),
    ];
    if cmp.is_monomial {
        checks.push(le("monomial gap", cmp.gap, 0.0, 1e-9));
    }
    let crowded_row = (0..x.rows()).any(|r| (0..x.cols()).filter(|&c| x[(r, c)].norm() > 0.1).count() >= 2);
    if crowded_row {
        checks.push(gt("non-monomial gap > 1e-7", cmp.gap, 1e-7));
    }
    Ok(checks)
}

fn lowerbound(rng: &mut RngState, dims: Option<[usize; 2]>, trial: usize) -> Result<Vec<Check>> {
    let d_b = dims.map_or_else(|| pick(rng, 2, 6), |[_, b]| b);
    let n = pick(rng, 1, pairing_capacity(2, d_b));
    let with_diagonal = trial % 2 == 1;
    let bs = random_canonical_pairing_with(2, d_b, n, with_diagonal, rng)?;
    let cert = detect_canonical_pairing(&bs, DEFAULT_PAIRING_TOL)?.ok_or(Error::NotCanonicalPairing)?;
    let bound = distillable_lower_bound(&bs, &cert, &[[0, 1]], 1e-12)?;
    let measures = pairing_measures(&qubit_qudit_decompose(&bs)?)?;
    let mut checks = vec![le("bound <= N_L", bound, measures.e_ppt, 1e-9)];
    if !with_diagonal {
        checks.push(eq("bound = E_D", bound, measures.e_d, 1e-8));
    }
    Ok(checks)
}

fn run_trial(suite: &str, trial: usize, rng: &mut RngState, dims: Option<[usize; 2]>) -> Result<Vec<Check>> {
    match suite {
        "negativity-bound" => negativity_bound(rng, dims),
        "l0-bound" => l0_bound(rng, dims),
        "additivity" => additivity(rng, dims),
        "pairing-roundtrip" => pairing_roundtrip(rng, dims),
        "witness" => witness(rng, dims),
        "majorization" => majorization(rng, dims, trial),
        "lowerbound" => lowerbound(rng, dims, trial),
        other => Err(Error::UnknownName(other.to_string())),
    }
}

/// Rejects suite/dimension combinations that cannot produce a trial.
pub fn check_feasible(suite: &str, dims: Option<[usize; 2]>) -> Result<()> {
    if !SUITES.contains(&suite) {
        return Err(Error::UnknownName(suite.to_string()));
    }
    let Some([d_a, d_b]) = dims else { return Ok(()) };
    if d_a == 0 || d_b == 0 {
        return Err(Error::Infeasible("dimensions must be positive".into()));
    }
    if d_a * d_b > 144 {
        return Err(Error::Infeasible(format!("{d_a}x{d_b} exceeds the 144-dimensional limit for verify")));
    }
    match suite {
        "witness" | "lowerbound" if pairing_capacity(d_a, d_b) == 0 => {
            Err(Error::Infeasible(format!("no transposition fits in {d_a}x{d_b}")))
        }
        "lowerbound" if d_a != 2 => Err(Error::Infeasible("lowerbound needs d_A = 2".into())),
        _ => Ok(()),
    }
}

pub fn run_suite(suite: &str, trials: usize, seed: u64, dims: Option<[usize; 2]>) -> Result<VerifyReport> {
    check_feasible(suite, dims)?;
    let start = Instant::now();
    let base = RngState::new(seed);
    let outcomes: Vec<(usize, Result<Vec<Check>>)> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = base.split(t as u64);
            (t, run_trial(suite, t, &mut rng, dims))
        })
        .collect();

    let mut violations = Vec::new();
    let mut worst_gap: BTreeMap<String, f64> = BTreeMap::new();
    for (trial, outcome) in outcomes {
        match outcome {
            Ok(checks) => {
                for c in checks {
                    let w = worst_gap.entry(c.quantity.to_string()).or_insert(f64::NEG_INFINITY);
                    *w = w.max(c.gap);
                    if !c.ok {
                        violations.push(Violation { trial, quantity: c.quantity.to_string(), lhs: c.lhs, rhs: c.rhs, gap: c.gap });
                    }
                }
            }
            Err(e) => violations.push(Violation {
                trial,
                quantity: format!("error: {e}"),
                lhs: f64::NAN,
                rhs: f64::NAN,
                gap: f64::NAN,
            }),
        }
    }
    violations.sort_by_key(|v| v.trial);
    Ok(VerifyReport {
        suite: suite.to_string(),
        trials,
        seed,
        dims,
        algorithm: ALGORITHM,
        violations,
        worst_gap,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}
