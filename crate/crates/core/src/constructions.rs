//! Explicit states and transformations.
//!
//! - [`make_mc_state`]: canonical maximally correlated states.
//! - [`make_qubit_qudit_pairing`]: `2 × d_B` pairing states from a diagonal
//!   part and 2×2 maximally correlated blocks on disjoint B-columns.
//! - [`cnot_embed`]: `ρ ↦ Σ ρ_jk |jj⟩⟨kk|`, turning coherence into negativity.
//! - [`appendix_a_chain`]: the twirl/rebuild chain `ρ → ρ₂ → ρ₃ → ρ₄` showing
//!   that a coherence measure depends only on the off-diagonal moduli.
//! - [`named_counterexample`]: fixed states that delimit the theory.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eig, BipartiteState, DensityMatrix, Matrix, C64, ZERO};
use crate::pairing::QubitQuditBlock;

/// Coefficients `c_rs` and labels `j_r`, `k_r` of
/// `ρ = Σ c_rs |j_r k_r⟩⟨j_s k_s|`.
#[derive(Clone, Debug, PartialEq)]
pub struct MCSpec {
    coeffs: DensityMatrix,
    a_labels: Vec<usize>,
    b_labels: Vec<usize>,
}

fn check_distinct(labels: &[usize], side: &str) -> Result<()> {
    for (i, a) in labels.iter().enumerate() {
        if labels[..i].contains(a) {
            return Err(Error::LabelCollision(format!("{side} label {a} repeated")));
        }
    }
    Ok(())
}

impl MCSpec {
    pub fn new(coeffs: Matrix, a_labels: Vec<usize>, b_labels: Vec<usize>) -> Result<Self> {
        if coeffs.rows() != a_labels.len() || coeffs.cols() != b_labels.len() {
            return Err(Error::InvalidCoeffs(format!(
                "{}x{} coefficients for {} A-labels and {} B-labels",
                coeffs.rows(),
                coeffs.cols(),
                a_labels.len(),
                b_labels.len()
            )));
        }
        check_distinct(&a_labels, "A")?;
        check_distinct(&b_labels, "B")?;
        let coeffs = DensityMatrix::new(coeffs).map_err(|e| Error::InvalidCoeffs(e.to_string()))?;
        Ok(Self { coeffs, a_labels, b_labels })
    }

    pub fn coeffs(&self) -> &DensityMatrix {
        &self.coeffs
    }

    pub fn a_labels(&self) -> &[usize] {
        &self.a_labels
    }

    pub fn b_labels(&self) -> &[usize] {
        &self.b_labels
    }
}

pub fn make_mc_state(spec: &MCSpec, d_a: usize, d_b: usize) -> Result<BipartiteState> {
    let out_of_range = |side: &str, l: usize, d: usize| Error::DimensionMismatch(format!("{side} label {l} >= d_{side} = {d}"));
    if let Some(&j) = spec.a_labels.iter().find(|&&j| j >= d_a) {
        return Err(out_of_range("A", j, d_a));
    }
    if let Some(&k) = spec.b_labels.iter().find(|&&k| k >= d_b) {
        return Err(out_of_range("B", k, d_b));
    }
    let idx: Vec<usize> = spec.a_labels.iter().zip(&spec.b_labels).map(|(&j, &k)| j * d_b + k).collect();
    let c = spec.coeffs.matrix();
    let mut m = Matrix::zeros(d_a * d_b, d_a * d_b);
    for (r, &ir) in idx.iter().enumerate() {
        for (s, &is) in idx.iter().enumerate() {
            m[(ir, is)] = c[(r, s)];
        }
    }
    BipartiteState::from_matrix(m, d_a, d_b)
}

/// Assembles `p₀ ρ₀ + Σ_j p_j ρ_j` on `2 × d_B`. `diag` is the normalized
/// diagonal of `ρ₀` over all `2·d_B` product labels and is ignored when
/// `p0 = 0`. Each block occupies B-columns `b0 ≠ b1`; no column may be shared
/// by two blocks or carry diagonal weight.
pub fn make_qubit_qudit_pairing(p0: f64, diag: &[f64], blocks: &[QubitQuditBlock], d_b: usize) -> Result<BipartiteState> {
    let total = p0 + blocks.iter().map(|b| b.weight).sum::<f64>();
    if (total - 1.0).abs() > 1e-9 || p0 < 0.0 || blocks.iter().any(|b| b.weight < 0.0) {
        return Err(Error::WeightMismatch(total));
    }
    let n = 2 * d_b;
    let mut used = vec![false; d_b];
    for b in blocks {
        let (b0, b1) = b.columns;
        if b0 >= d_b || b1 >= d_b {
            return Err(Error::DimensionMismatch(format!("block columns ({b0}, {b1}) with d_B = {d_b}")));
        }
        if b.coeffs.dim() != 2 {
            return Err(Error::InvalidCoeffs(format!("block coefficients are {0}x{0}, expected 2x2", b.coeffs.dim())));
        }
        if b0 == b1 {
            return Err(Error::SupportOverlap(format!("block uses column {b0} twice")));
        }
        for c in [b0, b1] {
            if used[c] {
                return Err(Error::SupportOverlap(format!("column {c} used by two blocks")));
            }
            used[c] = true;
        }
    }
    let mut m = Matrix::zeros(n, n);
    if p0 > 0.0 {
        if diag.len() != n {
            return Err(Error::DimensionMismatch(format!("diagonal has {} entries, expected {n}", diag.len())));
        }
        for (i, &p) in diag.iter().enumerate() {
            if p != 0.0 && used[i % d_b] {
                return Err(Error::SupportOverlap(format!("diagonal weight on column {} of a block", i % d_b)));
            }
            m[(i, i)] = C64::new(p0 * p, 0.0);
        }
    }
    for b in blocks {
        m = &m + &b.state(d_b)?.matrix().scale_real(b.weight);
    }
    BipartiteState::from_matrix(m, 2, d_b)
}

/// `Σ ρ_jk |jj⟩⟨kk|` on `d × d`: the image of `ρ ⊗ |0⟩⟨0|` under
/// `|jk⟩ ↦ |j, j+k mod d⟩`.
pub fn cnot_embed(rho: &DensityMatrix) -> BipartiteState {
    let d = rho.dim();
    let mut m = Matrix::zeros(d * d, d * d);
    for j in 0..d {
        for k in 0..d {
            m[(j * d + j, k * d + k)] = rho.matrix()[(j, k)];
        }
    }
    BipartiteState::from_matrix(m, d, d).expect("embedding preserves positivity and trace")
}

/// Default cap on the dimension of any matrix in the chain.
pub const DEFAULT_CHAIN_CAP: usize = 4096;

/// A block repeated `multiplicity` times along the diagonal.
#[derive(Clone, Debug, PartialEq)]
pub struct Block {
    pub matrix: Matrix,
    pub multiplicity: usize,
}

/// Block-diagonal matrix stored as its distinct blocks.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct BlockDiag {
    pub blocks: Vec<Block>,
}

impl BlockDiag {
    /// Empty summands are skipped; returns whether the block was kept.
    fn push(&mut self, matrix: Matrix, multiplicity: usize) -> bool {
        let keep = multiplicity > 0 && matrix.rows() > 0;
        if keep {
            self.blocks.push(Block { matrix, multiplicity });
        }
        keep
    }

    pub fn dim(&self) -> usize {
        self.blocks.iter().map(|b| b.matrix.rows() * b.multiplicity).sum()
    }

    pub fn trace(&self) -> f64 {
        self.blocks.iter().map(|b| b.matrix.trace().re * b.multiplicity as f64).sum()
    }

    /// Off-diagonal entries with modulus above `zero_tol`, with multiplicity.
    /// Entries outside the blocks are zero and not listed.
    pub fn offdiag_entries(&self, zero_tol: f64) -> Vec<C64> {
        let mut out = Vec::new();
        for b in &self.blocks {
            let n = b.matrix.rows();
            for r in 0..n {
                for c in 0..n {
                    let z = b.matrix[(r, c)];
                    if r != c && z.norm() > zero_tol {
                        out.extend(std::iter::repeat_n(z, b.multiplicity));
                    }
                }
            }
        }
        out
    }

    /// Number of off-diagonal entries within `tol` of `value`.
    pub fn count_offdiag(&self, value: C64, tol: f64) -> usize {
        self.offdiag_entries(0.0).iter().filter(|z| (**z - value).norm() <= tol).count()
    }

    pub fn min_eigenvalue(&self) -> Result<f64> {
        let mut min = f64::INFINITY;
        for b in &self.blocks {
            let eigs = hermitian_eig(&b.matrix)?.eigenvalues;
            min = min.min(*eigs.last().unwrap_or(&0.0));
        }
        Ok(min)
    }

    pub fn to_dense(&self) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        let mut off = 0;
        for b in &self.blocks {
            let s = b.matrix.rows();
            for _ in 0..b.multiplicity {
                for r in 0..s {
                    for c in 0..s {
                        m[(off + r, off + c)] = b.matrix[(r, c)];
                    }
                }
                off += s;
            }
        }
        m
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ChainChecks {
    /// `K ≥ 2d` and `L | K`.
    pub k_valid: bool,
    pub trace_m: f64,
    pub trace_below_one: bool,
    /// Off-diagonal multisets of `ρ₂` and `ρ₃` agree.
    pub multiset_equal: bool,
    /// Largest deviation in the matched multisets.
    pub multiset_error: f64,
    /// Every entry of `ρ₄` is the modulus of the corresponding entry of `ρ₃`.
    pub modulus_relation: bool,
    /// `ρ₄ = W ρ₃ W†` with `W` built from `V` on the `M₁` blocks.
    pub diagonal_unitary_relation: bool,
    /// `ρ₂`, `ρ₃`, `ρ₄` are unit-trace and positive semidefinite.
    pub states_valid: bool,
}

impl ChainChecks {
    pub fn all_pass(&self) -> bool {
        self.k_valid
            && self.trace_below_one
            && self.multiset_equal
            && self.modulus_relation
            && self.diagonal_unitary_relation
            && self.states_valid
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct AppendixAChain {
    pub d: usize,
    pub k: usize,
    pub l: usize,
    pub omega: C64,
    pub rho2: BlockDiag,
    pub rho3: BlockDiag,
    pub rho4: BlockDiag,
    /// `((j, k), |ρ_jk|)` for `j < k`, in the order the `M` summands appear.
    pub m_weights: Vec<((usize, usize), f64)>,
    /// Multiplicities of `|ψ⟩⟨ψ|` in `M₁`, `|φ⟩⟨φ|` in `M₂` and the 2×2 block in `M₃`.
    pub m_multiplicities: [usize; 3],
    /// Diagonal of `V = Σ ω^{-a} |a⟩⟨a|`.
    pub v_diag: Vec<C64>,
    pub checks: ChainChecks,
}

fn omega_pow(a: i64, k: usize) -> C64 {
    let r = a.rem_euclid(k as i64) as f64;
    C64::from_polar(1.0, 2.0 * PI * r / k as f64)
}

/// Exponent `m` with `z / |z| = e^{2πi m / L}`, or `None` if no such `m`
/// exists within `1e-9`.
fn root_exponent(z: C64, l: usize) -> Option<i64> {
    let m = (z.arg() * l as f64 / (2.0 * PI)).round() as i64;
    let target = C64::from_polar(1.0, 2.0 * PI * m as f64 / l as f64);
    ((z / z.norm() - target).norm() <= 1e-9).then_some(m.rem_euclid(l as i64))
}

/// Greedy tolerance matching of two multisets of complex numbers.
fn multiset_match(a: &[C64], b: &[C64], tol: f64) -> (bool, f64) {
    if a.len() != b.len() {
        return (false, f64::INFINITY);
    }
    let by_re = |x: &C64, y: &C64| x.re.partial_cmp(&y.re).unwrap_or(std::cmp::Ordering::Equal);
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort_by(by_re);
    b.sort_by(by_re);
    let mut used = vec![false; b.len()];
    let mut worst = 0.0f64;
    for z in &a {
        let start = b.partition_point(|w| w.re < z.re - tol);
        let mut hit = None;
        for (i, w) in b.iter().enumerate().skip(start) {
            if w.re > z.re + tol {
                break;
            }
            if !used[i] && (w - z).norm() <= tol {
                hit = Some(i);
                break;
            }
        }
        match hit {
            Some(i) => {
                used[i] = true;
                worst = worst.max((b[i] - z).norm());
            }
            None => return (false, f64::INFINITY),
        }
    }
    (true, worst)
}

/// Builds the chain for a `d`-level `rho` whose off-diagonal phases are
/// `L`-th roots of unity. `cap` bounds the dimension of `ρ₂` and `ρ₃`.
pub fn appendix_a_chain(rho: &DensityMatrix, l: usize, cap: usize) -> Result<AppendixAChain> {
    let d = rho.dim();
    if l == 0 {
        return Err(Error::Infeasible("L must be positive".into()));
    }
    if d < 2 {
        return Err(Error::Infeasible("chain needs d >= 2".into()));
    }
    let m = rho.matrix();
    let zero = 1e-12 * m.max_abs().max(1.0);
    for r in 0..d {
        for c in 0..d {
            if r != c && m[(r, c)].norm() > zero && root_exponent(m[(r, c)], l).is_none() {
                return Err(Error::PhaseNotRoot { row: r, col: c, l });
            }
        }
    }

    let k = (2 * d).div_ceil(l) * l;
    let kd = (k as u128).checked_pow(d as u32).filter(|&x| x * d as u128 <= cap as u128);
    let dim2 = match kd {
        Some(x) => x as usize * d,
        None => return Err(Error::DimensionCapExceeded { dim: usize::MAX, cap }),
    };
    let kd2 = k.pow(d as u32 - 2);
    let mult = [2 * kd2, 2 * (kd2 - 1) / (k - 1), k];
    let pairs = d * (d - 1) / 2;
    let dim3 = pairs * (mult[0] * k + mult[1] * k + mult[2] * 2) + 1;
    if dim2 > cap || dim3 > cap {
        return Err(Error::DimensionCapExceeded { dim: dim2.max(dim3), cap });
    }
    let omega = omega_pow(1, k);
    let kd_f = (k as f64).powi(d as i32);

    // ρ₂: one block U ρ U† / K^d per U = diag(ω^{a_0}, …, ω^{a_{d−1}}).
    let mut rho2 = BlockDiag::default();
    let mut exps = vec![0usize; d];
    loop {
        let block = Matrix::from_fn(d, d, |r, c| {
            let ph = omega_pow(exps[r] as i64 - exps[c] as i64, k);
            ph * m[(r, c)] / kd_f
        });
        rho2.push(block, 1);
        let mut i = 0;
        while i < d {
            exps[i] += 1;
            if exps[i] < k {
                break;
            }
            exps[i] = 0;
            i += 1;
        }
        if i == d {
            break;
        }
    }

    let inv_sqrt_k = 1.0 / (k as f64).sqrt();
    let psi: Vec<C64> = (0..k).map(|a| omega_pow(a as i64, k) * inv_sqrt_k).collect();
    let phi: Vec<C64> = vec![C64::new(inv_sqrt_k, 0.0); k];
    let v_diag: Vec<C64> = (0..k).map(|a| omega_pow(-(a as i64), k)).collect();
    let psi_proj = Matrix::outer(&psi);
    let phi_proj = Matrix::outer(&phi);
    let pair_block = Matrix::from_real(&[&[1.0, 1.0], &[1.0, 1.0]]).scale_real(1.0 / k as f64);

    let scale_base = (k as f64).powi(d as i32 - 1);
    let mut m_weights = Vec::with_capacity(pairs);
    let (mut m_blocks, mut m_blocks_prime) = (BlockDiag::default(), BlockDiag::default());
    let mut is_m1 = Vec::new();
    for j in 0..d {
        for kk in j + 1..d {
            let w = m[(j, kk)].norm();
            m_weights.push(((j, kk), w));
            let s = w / scale_base;
            if m_blocks.push(psi_proj.scale_real(s), mult[0]) {
                m_blocks_prime.push(phi_proj.scale_real(s), mult[0]);
                is_m1.push(true);
            }
            for (mat, mult) in [(&phi_proj, mult[1]), (&pair_block, mult[2])] {
                if m_blocks.push(mat.scale_real(s), mult) {
                    m_blocks_prime.push(mat.scale_real(s), mult);
                    is_m1.push(false);
                }
            }
        }
    }
    let trace_m = m_blocks.trace();
    let trace_m_prime = m_blocks_prime.trace();
    let mut rho3 = m_blocks.clone();
    rho3.push(Matrix::diag(&[1.0 - trace_m]), 1);
    let mut rho4 = m_blocks_prime;
    rho4.push(Matrix::diag(&[1.0 - trace_m_prime]), 1);

    let entry_zero = 1e-14;
    let (multiset_equal, multiset_error) =
        multiset_match(&rho2.offdiag_entries(entry_zero), &rho3.offdiag_entries(entry_zero), 1e-10);

    let modulus_relation = rho3.blocks.len() == rho4.blocks.len()
        && rho3.blocks.iter().zip(&rho4.blocks).all(|(b3, b4)| {
            b3.multiplicity == b4.multiplicity && b3.matrix.map(|z| C64::new(z.norm(), 0.0)).max_abs_diff(&b4.matrix) <= 1e-12
        });

    let v_mat = Matrix::from_fn(k, k, |r, c| if r == c { v_diag[r] } else { ZERO });
    let diagonal_unitary_relation = (trace_m - trace_m_prime).abs() <= 1e-12
        && (&(&v_mat * &psi_proj) * &v_mat.adjoint()).max_abs_diff(&phi_proj) <= 1e-12
        && rho3.blocks.iter().zip(&rho4.blocks).enumerate().all(|(i, (b3, b4))| {
            let mapped = if is_m1.get(i).copied().unwrap_or(false) {
                &(&v_mat * &b3.matrix) * &v_mat.adjoint()
            } else {
                b3.matrix.clone()
            };
            mapped.max_abs_diff(&b4.matrix) <= 1e-12
        });

    let mut states_valid = true;
    for s in [&rho2, &rho3, &rho4] {
        states_valid &= (s.trace() - 1.0).abs() <= 1e-12 && s.min_eigenvalue()? >= -1e-12;
    }

    let checks = ChainChecks {
        k_valid: k >= 2 * d && k.is_multiple_of(l),
        trace_m,
        trace_below_one: trace_m < 1.0,
        multiset_equal,
        multiset_error,
        modulus_relation,
        diagonal_unitary_relation,
        states_valid,
    };
    Ok(AppendixAChain { d, k, l, omega, rho2, rho3, rho4, m_weights, m_multiplicities: mult, v_diag, checks })
}

/// States returned by [`named_counterexample`].
#[derive(Clone, Debug, PartialEq)]
pub enum NamedState {
    /// A unipartite state with its entrywise-modulus companion `τ(ρ)`,
    /// which need not be a state.
    WithModulus { rho: DensityMatrix, tau: Matrix },
    Bipartite(BipartiteState),
}

pub const COUNTEREXAMPLE_NAMES: [&str; 3] = ["tau-remark", "appendix-f", "isotropic"];

/// `ρ` with `ρ` PSD but `τ(ρ) = (|ρ_jk|)` not PSD.
pub fn tau_remark() -> (DensityMatrix, Matrix) {
    let a = std::f64::consts::FRAC_1_SQRT_2;
    let m = Matrix::from_real(&[&[1.0, a, 0.0, -a], &[a, 1.0, a, 0.0], &[0.0, a, 1.0, a], &[-a, 0.0, a, 1.0]]).scale_real(0.25);
    let tau = m.map(|z| C64::new(z.norm(), 0.0));
    (DensityMatrix::new(m).expect("tau-remark state is valid"), tau)
}

/// A `3 × 3` state with `N = C_l1` that is not of qubit–qudit form.
pub fn appendix_f_state() -> BipartiteState {
    let h = 0.5;
    let mut m = Matrix::zeros(9, 9);
    let idx = |j: usize, k: usize| j * 3 + k;
    m[(idx(0, 2), idx(0, 2))] = C64::new(0.25, 0.0);
    m[(idx(2, 0), idx(2, 0))] = C64::new(0.25, 0.0);
    for (a, b) in [((0, 0), (1, 1)), ((1, 1), (2, 2))] {
        let (ia, ib) = (idx(a.0, a.1), idx(b.0, b.1));
        for (r, c) in [(ia, ia), (ia, ib), (ib, ia), (ib, ib)] {
            m[(r, c)] += C64::new(0.25 * h, 0.0);
        }
    }
    BipartiteState::from_matrix(m, 3, 3).expect("appendix-f state is valid")
}

/// `p |ψ⟩⟨ψ| + (1 − p) I / (d_A d_B)`.
pub fn isotropic_state(p: f64, psi: &[C64], d_a: usize, d_b: usize) -> Result<BipartiteState> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::OutOfRange(p));
    }
    let n = d_a * d_b;
    if psi.len() != n {
        return Err(Error::DimensionMismatch(format!("pure state has length {}, expected {n}", psi.len())));
    }
    let pure = DensityMatrix::pure(psi)?;
    let m = &pure.matrix().scale_real(p) + &Matrix::identity(n).scale_real((1.0 - p) / n as f64);
    BipartiteState::from_matrix(m, d_a, d_b)
}

pub fn bell_vector() -> Vec<C64> {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    vec![C64::new(s, 0.0), ZERO, ZERO, C64::new(s, 0.0)]
}

/// `isotropic` takes `params = [p]` and uses the Bell state; the other names
/// take no parameters.
pub fn named_counterexample(name: &str, params: &[f64]) -> Result<NamedState> {
    match name {
        "tau-remark" => {
            let (rho, tau) = tau_remark();
            Ok(NamedState::WithModulus { rho, tau })
        }
        "appendix-f" => Ok(NamedState::Bipartite(appendix_f_state())),
        "isotropic" => {
            let p = params.first().copied().unwrap_or(0.5);
            Ok(NamedState::Bipartite(isotropic_state(p, &bell_vector(), 2, 2)?))
        }
        other => Err(Error::UnknownName(other.to_string())),
    }
}
