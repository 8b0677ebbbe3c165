//! Majorization and the comparison `‖X‖₁ ≤ ‖X‖_{l1}`.
//!
//! With `u = (|X_jk|²)`, `v = diag(X†X)` and `w = eig(X†X)` one has
//! `u ≺ v ≺ w`; Schur concavity of `Σ√·` then gives the norm inequality,
//! with equality exactly for monomial `X`.

use serde::Serialize;

use crate::error::Result;
use crate::linalg::{entrywise_l1_norm, hermitian_eig, trace_norm, Matrix};

/// Absolute tolerance for partial-sum comparisons.
pub const MAJORIZATION_TOL: f64 = 1e-9;

fn descending_padded(x: &[f64], len: usize) -> Vec<f64> {
    let mut v = x.to_vec();
    v.resize(len, 0.0);
    v.sort_by(|a, b| b.partial_cmp(a).unwrap_or(std::cmp::Ordering::Equal));
    v
}

/// `x ≺ y`: every descending partial sum of `x` is at most that of `y`, and
/// the totals agree. The shorter vector is padded with zeros.
pub fn majorizes(y: &[f64], x: &[f64]) -> bool {
    let len = x.len().max(y.len());
    let xs = descending_padded(x, len);
    let ys = descending_padded(y, len);
    let (mut sx, mut sy) = (0.0, 0.0);
    for (a, b) in xs.iter().zip(&ys) {
        sx += a;
        sy += b;
        if sx > sy + MAJORIZATION_TOL {
            return false;
        }
    }
    (sx - sy).abs() <= MAJORIZATION_TOL
}

/// Both `x ≺ y` and `y ≺ x`: same nonzero components up to order.
pub fn majorization_equivalent(x: &[f64], y: &[f64]) -> bool {
    majorizes(x, y) && majorizes(y, x)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MajorizationTriple {
    /// `|X_jk|²`, row-major.
    pub u: Vec<f64>,
    /// Diagonal of `X†X`.
    pub v: Vec<f64>,
    /// Eigenvalues of `X†X`, descending.
    pub w: Vec<f64>,
}

impl MajorizationTriple {
    /// `Σu = Σv = Σw` within tolerance and `u ≺ v ≺ w`.
    pub fn holds(&self) -> bool {
        let su: f64 = self.u.iter().sum();
        let sv: f64 = self.v.iter().sum();
        let sw: f64 = self.w.iter().sum();
        (su - sv).abs() <= MAJORIZATION_TOL
            && (sv - sw).abs() <= MAJORIZATION_TOL
            && majorizes(&self.v, &self.u)
            && majorizes(&self.w, &self.v)
    }
}

pub fn uvw_triple(x: &Matrix) -> Result<MajorizationTriple> {
    let u = x.as_slice().iter().map(|z| z.norm_sqr()).collect();
    let gram = &x.adjoint() * x;
    let v = gram.diagonal().iter().map(|z| z.re).collect();
    let w = hermitian_eig(&gram)?.eigenvalues;
    Ok(MajorizationTriple { u, v, w })
}

/// Entries with modulus above `zero_tol · max(1, max |X_jk|)` count as nonzero.
pub fn is_monomial(x: &Matrix, zero_tol: f64) -> bool {
    let thr = zero_tol * x.max_abs().max(1.0);
    let rows_ok = (0..x.rows()).all(|r| (0..x.cols()).filter(|&c| x[(r, c)].norm() > thr).count() <= 1);
    let cols_ok = (0..x.cols()).all(|c| (0..x.rows()).filter(|&r| x[(r, c)].norm() > thr).count() <= 1);
    rows_ok && cols_ok
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct TraceL1Comparison {
    pub trace_norm: f64,
    pub l1_norm: f64,
    pub is_monomial: bool,
    /// `l1_norm − trace_norm`
    pub gap: f64,
}

impl TraceL1Comparison {
    /// `gap ≥ −1e-9`, and `gap ≤ 1e-9` exactly when monomial.
    pub fn consistent(&self) -> bool {
        self.gap >= -1e-9 && (self.is_monomial == (self.gap <= 1e-9))
    }
}

pub fn trace_vs_l1(x: &Matrix, zero_tol: f64) -> Result<TraceL1Comparison> {
    let tn = trace_norm(x)?;
    let l1 = entrywise_l1_norm(x);
    Ok(TraceL1Comparison { trace_norm: tn, l1_norm: l1, is_monomial: is_monomial(x, zero_tol), gap: l1 - tn })
}
