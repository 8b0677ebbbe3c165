//! Closed-form coherence and entanglement quantities.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{
    dephase, hermitian_eig, partial_transpose, singular_values, trace_norm,
    von_neumann_entropy, BipartiteState, DensityMatrix, Matrix, C64,
};

/// Default threshold for "nonzero" in the integer counters:
/// `1e-10 · max(1, largest entry modulus)`.
pub fn default_zero_tol(m: &Matrix) -> f64 {
    1e-10 * m.max_abs().max(1.0)
}

/// l1-norm of coherence, `Σ_{j≠k} |ρ_jk|`.
pub fn c_l1(rho: &DensityMatrix) -> f64 {
    l1_coherence(rho.matrix())
}

/// [`c_l1`] on a raw matrix.
pub fn l1_coherence(m: &Matrix) -> f64 {
    let mut s = 0.0;
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            if r != c {
                s += m[(r, c)].norm();
            }
        }
    }
    s
}

/// Logarithmic l1-norm of coherence, `log₂(1 + C_l1)`.
pub fn c_log(rho: &DensityMatrix) -> f64 {
    (1.0 + c_l1(rho)).log2()
}

/// Relative entropy of coherence, `S(ρ_diag) − S(ρ)`.
pub fn c_rel_entropy(rho: &DensityMatrix) -> Result<f64> {
    Ok(von_neumann_entropy(&dephase(rho))? - von_neumann_entropy(rho)?)
}

/// Negativity and logarithmic negativity.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Negativity {
    /// `‖ρ^{T_A}‖₁ − 1`
    pub value: f64,
    /// `log₂(1 + N)`
    pub log: f64,
}

pub fn negativity(bs: &BipartiteState) -> Result<Negativity> {
    let value = trace_norm(&partial_transpose(bs))? - 1.0;
    Ok(Negativity { value, log: (1.0 + value).log2() })
}

/// Squared Schmidt coefficients of a pure state, descending, summing to one.
#[derive(Clone, Debug, PartialEq)]
pub struct SchmidtVector {
    lambdas: Vec<f64>,
}

impl SchmidtVector {
    pub fn new(mut lambdas: Vec<f64>) -> Result<Self> {
        if lambdas.is_empty() || lambdas.iter().any(|&l| !l.is_finite() || l < -1e-12) {
            return Err(Error::InvalidState("Schmidt coefficients must be nonnegative".into()));
        }
        let total: f64 = lambdas.iter().sum();
        if (total - 1.0).abs() > 1e-9 {
            return Err(Error::InvalidState(format!("Schmidt coefficients sum to {total}")));
        }
        for l in lambdas.iter_mut() {
            *l = l.max(0.0);
        }
        lambdas.sort_by(|a, b| b.partial_cmp(a).unwrap());
        Ok(Self { lambdas })
    }

    /// Schmidt spectrum of `|ψ⟩ ∈ C^{d_A} ⊗ C^{d_B}` from the singular values
    /// of its `d_A × d_B` coefficient matrix.
    pub fn from_pure(psi: &[C64], d_a: usize, d_b: usize) -> Result<Self> {
        if psi.len() != d_a * d_b {
            return Err(Error::DimensionMismatch(format!("vector of length {} for {d_a}x{d_b}", psi.len())));
        }
        let norm2: f64 = psi.iter().map(|z| z.norm_sqr()).sum();
        let coeffs = Matrix::from_fn(d_a, d_b, |j, k| psi[j * d_b + k] / norm2.sqrt());
        let sv = singular_values(&coeffs)?;
        Self::new(sv.iter().map(|s| s * s).collect())
    }

    pub fn lambdas(&self) -> &[f64] {
        &self.lambdas
    }
}

/// Pure-state negativity `(Σ√λ)² − 1`.
pub fn schmidt_negativity(sv: &SchmidtVector) -> f64 {
    let s: f64 = sv.lambdas.iter().map(|l| l.sqrt()).sum();
    s * s - 1.0
}

/// Number of negative eigenvalues of `ρ^{T_A}` below `−zero_tol`.
pub fn n0_count(bs: &BipartiteState, zero_tol: Option<f64>) -> Result<usize> {
    let pt = partial_transpose(bs);
    let tol = zero_tol.unwrap_or_else(|| default_zero_tol(&pt));
    let eig = hermitian_eig(&pt)?;
    let tol = tol.max(crate::linalg::eigen_zero_threshold(&eig.eigenvalues));
    Ok(eig.eigenvalues.iter().filter(|&&l| l < -tol).count())
}

/// Number of off-diagonal entries with modulus above `zero_tol`.
pub fn c_l0_count(rho: &DensityMatrix, zero_tol: Option<f64>) -> usize {
    let m = rho.matrix();
    let tol = zero_tol.unwrap_or_else(|| default_zero_tol(m));
    let mut count = 0;
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            if r != c && m[(r, c)].norm() > tol {
                count += 1;
            }
        }
    }
    count
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum MeasureName {
    #[serde(rename = "C_l1")]
    CL1,
    #[serde(rename = "C_L")]
    CLog,
    #[serde(rename = "C_r")]
    CRel,
    #[serde(rename = "N")]
    Negativity,
    #[serde(rename = "N_L")]
    LogNegativity,
    #[serde(rename = "N0")]
    N0,
    #[serde(rename = "C_l0")]
    CL0,
}

impl MeasureName {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::CL1 => "C_l1",
            Self::CLog => "C_L",
            Self::CRel => "C_r",
            Self::Negativity => "N",
            Self::LogNegativity => "N_L",
            Self::N0 => "N0",
            Self::CL0 => "C_l0",
        }
    }

    /// Identifier of the formula that produces the value.
    pub fn formula(self) -> &'static str {
        match self {
            Self::CL1 => "sum_{j!=k} |rho_jk|",
            Self::CLog => "log2(1 + C_l1)",
            Self::CRel => "S(diag(rho)) - S(rho)",
            Self::Negativity => "||rho^T_A||_1 - 1",
            Self::LogNegativity => "log2(1 + N)",
            Self::N0 => "#{eig(rho^T_A) < -zero_tol}",
            Self::CL0 => "#{j!=k : |rho_jk| > zero_tol}",
        }
    }
}

impl fmt::Display for MeasureName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct MeasureEntry {
    pub value: f64,
    pub formula: &'static str,
}

/// Named scalar results with the formula behind each.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct MeasureReport {
    pub entries: BTreeMap<MeasureName, MeasureEntry>,
    pub warnings: Vec<String>,
}

impl MeasureReport {
    fn insert(&mut self, name: MeasureName, value: f64) {
        self.entries.insert(name, MeasureEntry { value, formula: name.formula() });
    }

    pub fn get(&self, name: MeasureName) -> Option<f64> {
        self.entries.get(&name).map(|e| e.value)
    }

    /// Checks the internal relations between entries.
    pub fn check(&self) -> bool {
        let log_ok = |a: MeasureName, b: MeasureName| match (self.get(a), self.get(b)) {
            (Some(x), Some(y)) => (y - (1.0 + x).log2()).abs() <= 1e-12,
            _ => true,
        };
        log_ok(MeasureName::CL1, MeasureName::CLog)
            && log_ok(MeasureName::Negativity, MeasureName::LogNegativity)
            && self.entries.values().all(|e| e.value >= -1e-9)
    }
}

/// Coherence measures of a single-system state.
pub fn measure_report(rho: &DensityMatrix) -> Result<MeasureReport> {
    let mut report = MeasureReport::default();
    let l1 = c_l1(rho);
    report.insert(MeasureName::CL1, l1);
    report.insert(MeasureName::CLog, (1.0 + l1).log2());
    report.insert(MeasureName::CRel, c_rel_entropy(rho)?);
    let bound = (rho.dim() - 1) as f64;
    if l1 > bound + 1e-9 {
        report.warnings.push(format!("C_l1 = {l1} exceeds d - 1 = {bound}"));
    }
    Ok(report)
}

/// Coherence plus entanglement measures of a bipartite state.
pub fn bipartite_report(bs: &BipartiteState, zero_tol: Option<f64>) -> Result<MeasureReport> {
    let mut report = measure_report(bs.state())?;
    let n = negativity(bs)?;
    report.insert(MeasureName::Negativity, n.value);
    report.insert(MeasureName::LogNegativity, n.log);
    report.insert(MeasureName::N0, n0_count(bs, zero_tol)? as f64);
    report.insert(MeasureName::CL0, c_l0_count(bs.state(), zero_tol) as f64);
    Ok(report)
}
