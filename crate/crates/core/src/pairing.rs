//! Canonical pairing states.
//!
//! A bipartite state is a canonical pairing state when its partial transpose
//! is monomial and the underlying permutation is a product of disjoint
//! transpositions `(jk, j′k′)` with `j ≠ j′`, `k ≠ k′`, and `jk′`, `j′k`
//! populated fixed points. These are exactly the states with
//! `N(ρ) = C_l1(ρ)`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{
    binary_entropy, dephase, hermitian_eig, partial_transpose, partial_transpose_matrix, von_neumann_entropy,
    BipartiteState, DensityMatrix, Matrix,
};
use crate::measures::{c_l1, negativity};

/// Default relative threshold for deciding that a matrix entry is present.
pub const DEFAULT_PAIRING_TOL: f64 = 1e-10;

/// Product-basis label `(j, k)` for `|j⟩_A |k⟩_B`.
pub type Label = (usize, usize);

/// Witness that `ρ^{T_A} = Σ a_{jk} |jk⟩⟨π(jk)|` with `π` a product of
/// disjoint transpositions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairingCertificate {
    pub transpositions: Vec<(Label, Label)>,
    /// Labels with `a_{jk} > 0`, in index order.
    pub fixed_points: Vec<Label>,
    pub pairing_number: usize,
}

impl PairingCertificate {
    pub fn is_entangled(&self) -> bool {
        self.pairing_number > 0
    }

    /// Structural invariants of a certificate.
    pub fn is_well_formed(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        for &(a, b) in &self.transpositions {
            if !seen.insert(a) || !seen.insert(b) {
                return false;
            }
            if a.0 == b.0 || a.1 == b.1 {
                return false;
            }
            if !self.fixed_points.contains(&(a.0, b.1)) || !self.fixed_points.contains(&(b.0, a.1)) {
                return false;
            }
        }
        self.pairing_number == self.transpositions.len()
    }
}

/// Tries to certify `bs` as a canonical pairing state.
///
/// An entry of `ρ^{T_A}` is present when its modulus exceeds
/// `zero_tol · max |entry|`. Returns `None` when the partial transpose is not
/// monomial, has a cycle longer than two, breaks a side condition, or when
/// `|N − C_l1| > 10 · zero_tol · d`.
pub fn detect_canonical_pairing(bs: &BipartiteState, zero_tol: f64) -> Result<Option<PairingCertificate>> {
    let pt = partial_transpose(bs);
    let n = pt.rows();
    let thr = zero_tol * pt.max_abs();
    let label = |i: usize| bs.label(i);

    let mut partner: Vec<Option<usize>> = vec![None; n];
    let mut col_count = vec![0usize; n];
    for r in 0..n {
        for c in 0..n {
            if pt[(r, c)].norm() > thr {
                if partner[r].is_some() {
                    return Ok(None);
                }
                partner[r] = Some(c);
                col_count[c] += 1;
            }
        }
    }
    if col_count.iter().any(|&k| k > 1) {
        return Ok(None);
    }

    let fixed: Vec<usize> = (0..n).filter(|&r| partner[r] == Some(r)).collect();
    let is_fixed = |i: usize| partner[i] == Some(i);
    let mut transpositions = Vec::new();
    for r in 0..n {
        let Some(c) = partner[r] else { continue };
        if c == r {
            continue;
        }
        if partner[c] != Some(r) {
            return Ok(None);
        }
        if r > c {
            continue;
        }
        let (j, k) = label(r);
        let (jp, kp) = label(c);
        if j == jp || k == kp {
            return Ok(None);
        }
        if !is_fixed(bs.index(j, kp)) || !is_fixed(bs.index(jp, k)) {
            return Ok(None);
        }
        transpositions.push(((j, k), (jp, kp)));
    }

    let gap = (negativity(bs)?.value - c_l1(bs.state())).abs();
    if gap > 10.0 * zero_tol * n as f64 {
        return Ok(None);
    }

    let pairing_number = transpositions.len();
    Ok(Some(PairingCertificate {
        transpositions,
        fixed_points: fixed.into_iter().map(label).collect(),
        pairing_number,
    }))
}

/// Checks that every transposition of `cert` is a present entry of
/// `ρ^{T_A}` and every fixed point is populated.
pub fn certificate_matches(bs: &BipartiteState, cert: &PairingCertificate, zero_tol: f64) -> bool {
    let pt = partial_transpose(bs);
    let thr = zero_tol * pt.max_abs();
    let (d_a, d_b) = (bs.d_a(), bs.d_b());
    let in_range = |l: Label| l.0 < d_a && l.1 < d_b;
    cert.is_well_formed()
        && cert.transpositions.iter().all(|&(a, b)| {
            in_range(a) && in_range(b) && pt[(bs.index(a.0, a.1), bs.index(b.0, b.1))].norm() > thr
        })
        && cert.fixed_points.iter().all(|&f| in_range(f) && pt[(bs.index(f.0, f.1), bs.index(f.0, f.1))].re > thr)
}

/// Pairing number bound `d_A(d_A − 1)/2` for `d_A = d_B`.
pub fn pairing_number_bound_check(cert: &PairingCertificate, d_a: usize) -> bool {
    cert.pairing_number <= d_a * d_a.saturating_sub(1) / 2
}

/// Labels with population above `zero_tol`, in index order.
pub fn populated_labels(bs: &BipartiteState, zero_tol: f64) -> Vec<Label> {
    let m = bs.matrix();
    (0..bs.dim()).filter(|&i| m[(i, i)].re > zero_tol).map(|i| bs.label(i)).collect()
}

/// Canonical maximally correlated structure: populated labels have pairwise
/// distinct A indices and pairwise distinct B indices.
pub fn is_canonical_mc(bs: &BipartiteState, zero_tol: f64) -> bool {
    let labels = populated_labels(bs, zero_tol);
    let mut a: Vec<usize> = labels.iter().map(|l| l.0).collect();
    let mut b: Vec<usize> = labels.iter().map(|l| l.1).collect();
    a.sort_unstable();
    b.sort_unstable();
    a.windows(2).all(|w| w[0] != w[1]) && b.windows(2).all(|w| w[0] != w[1])
}

/// Asymptotic exact PPT entanglement cost of a certified state.
///
/// Verifies that `|ρ^{T_A}|` is diagonal and `|ρ^{T_A}|^{T_A} ⪰ 0`, then
/// returns `N_L`.
pub fn ppt_cost_condition(bs: &BipartiteState, cert: &PairingCertificate) -> Result<f64> {
    if !certificate_matches(bs, cert, DEFAULT_PAIRING_TOL) {
        return Err(Error::ConditionViolated("certificate does not match the state".into()));
    }
    let eig = hermitian_eig(&partial_transpose(bs))?;
    let abs_pt = eig.reconstruct_with(f64::abs);
    let off = abs_pt.max_offdiag_abs();
    if off > 1e-9 {
        return Err(Error::ConditionViolated(format!("|rho^T_A| has off-diagonal entry {off:.3e}")));
    }
    let again = partial_transpose_matrix(&abs_pt, bs.d_a(), bs.d_b())?;
    let min = hermitian_eig(&again)?.eigenvalues.last().copied().unwrap_or(0.0);
    if min < -1e-9 {
        return Err(Error::ConditionViolated(format!("|rho^T_A|^T_A has eigenvalue {min:.3e}")));
    }
    Ok(negativity(bs)?.log)
}

/// One canonical maximally correlated block of a qubit–qudit pairing state,
/// supported on `|0 b0⟩, |1 b1⟩` with `columns = (b0, b1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct QubitQuditBlock {
    pub weight: f64,
    /// 2×2 coefficient matrix in the basis `|0 b0⟩, |1 b1⟩`.
    pub coeffs: DensityMatrix,
    pub columns: (usize, usize),
}

impl QubitQuditBlock {
    /// The normalized block as a `2 × d_B` state.
    pub fn state(&self, d_b: usize) -> Result<BipartiteState> {
        let (b0, b1) = self.columns;
        let idx = [b0, d_b + b1];
        let mut m = Matrix::zeros(2 * d_b, 2 * d_b);
        for r in 0..2 {
            for c in 0..2 {
                m[(idx[r], idx[c])] = self.coeffs.matrix()[(r, c)];
            }
        }
        BipartiteState::from_matrix(m, 2, d_b)
    }
}

/// `ρ = p₀ ρ₀ ⊕ ⊕_j p_j ρ_j` with `ρ₀` diagonal and each `ρ_j` a 2×2 maximally
/// correlated block.
#[derive(Clone, Debug, PartialEq)]
pub struct QubitQuditDecomposition {
    pub d_b: usize,
    pub p0: f64,
    /// Normalized diagonal part over the `2·d_B` product basis; `None` when `p0 = 0`.
    pub diag_block: Option<DensityMatrix>,
    pub blocks: Vec<QubitQuditBlock>,
}

impl QubitQuditDecomposition {
    pub fn reassemble(&self) -> Result<BipartiteState> {
        let n = 2 * self.d_b;
        let mut m = Matrix::zeros(n, n);
        if let Some(diag) = &self.diag_block {
            m = &m + &diag.matrix().scale_real(self.p0);
        }
        for block in &self.blocks {
            m = &m + &block.state(self.d_b)?.matrix().scale_real(block.weight);
        }
        BipartiteState::from_matrix(m, 2, self.d_b)
    }

    pub fn total_weight(&self) -> f64 {
        self.p0 + self.blocks.iter().map(|b| b.weight).sum::<f64>()
    }
}

/// Splits a `2 × d_B` canonical pairing state into its diagonal part and
/// maximally correlated blocks, one per transposition.
pub fn qubit_qudit_decompose(bs: &BipartiteState) -> Result<QubitQuditDecomposition> {
    if bs.d_a() != 2 {
        return Err(Error::NotQubit(bs.d_a()));
    }
    let cert = detect_canonical_pairing(bs, DEFAULT_PAIRING_TOL)?.ok_or(Error::NotCanonicalPairing)?;
    let d_b = bs.d_b();
    let m = bs.matrix();

    let mut in_block = vec![false; 2 * d_b];
    let mut blocks = Vec::with_capacity(cert.pairing_number);
    for &(x, y) in &cert.transpositions {
        // PT pair (0,k),(1,k') ↔ coherence between |0 k′⟩ and |1 k⟩.
        let (zero_side, one_side) = if x.0 == 0 { (x, y) } else { (y, x) };
        let (b0, b1) = (one_side.1, zero_side.1);
        let idx = [b0, d_b + b1];
        let weight = m[(idx[0], idx[0])].re + m[(idx[1], idx[1])].re;
        let coeffs = Matrix::from_fn(2, 2, |r, c| m[(idx[r], idx[c])] / weight);
        let coeffs = DensityMatrix::new(coeffs)?;
        in_block[idx[0]] = true;
        in_block[idx[1]] = true;
        blocks.push(QubitQuditBlock { weight, coeffs, columns: (b0, b1) });
    }

    let diag: Vec<f64> = (0..2 * d_b).map(|i| if in_block[i] { 0.0 } else { m[(i, i)].re.max(0.0) }).collect();
    let p0: f64 = diag.iter().sum();
    let diag_block = if p0 > 0.0 {
        Some(DensityMatrix::diagonal(&diag.iter().map(|x| x / p0).collect::<Vec<_>>())?)
    } else {
        None
    };
    let dec = QubitQuditDecomposition { d_b, p0, diag_block, blocks };
    let err = dec.reassemble()?.matrix().max_abs_diff(m);
    if err > 1e-9 {
        return Err(Error::ConditionViolated(format!("reassembly error {err:.3e}")));
    }
    Ok(dec)
}

/// Closed-form operational measures of a qubit–qudit pairing state (bits).
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct PairingMeasures {
    /// Distillable entanglement.
    pub e_d: f64,
    /// Distillable coherence.
    pub c_d: f64,
    /// Entanglement cost.
    pub e_c: f64,
    /// Coherence cost.
    pub c_c: f64,
    /// Asymptotic exact PPT entanglement cost.
    pub e_ppt: f64,
}

/// `E_D = C_D = S(ρ_diag) − S(ρ)`, `E_C = C_C = Σ p_j H((1 + √(1 − N(ρ_j)²))/2)`,
/// `E_PPT = N_L(ρ)`.
pub fn pairing_measures(dec: &QubitQuditDecomposition) -> Result<PairingMeasures> {
    let rho = dec.reassemble()?;
    let e_d = von_neumann_entropy(&dephase(rho.state()))? - von_neumann_entropy(rho.state())?;
    let mut e_c = 0.0;
    for block in &dec.blocks {
        let n = negativity(&block.state(dec.d_b)?)?.value.clamp(0.0, 1.0);
        e_c += block.weight * binary_entropy(0.5 * (1.0 + (1.0 - n * n).sqrt()))?;
    }
    let e_ppt = negativity(&rho)?.log;
    Ok(PairingMeasures { e_d, c_d: e_d, e_c, c_c: e_c, e_ppt })
}

/// `Σ_j p_j C_r(ρ_j)` over the blocks; agrees with `E_D` from
/// [`pairing_measures`] through a different route (the diagonal block
/// contributes nothing).
pub fn distillable_by_blocks(dec: &QubitQuditDecomposition) -> Result<f64> {
    let mut total = 0.0;
    for block in &dec.blocks {
        let s = block.state(dec.d_b)?;
        total += block.weight * crate::measures::c_rel_entropy(s.state())?;
    }
    Ok(total)
}

/// Local projection onto one transposition's 2×2 subspace.
#[derive(Clone, Debug)]
pub struct DistillWitness {
    /// `(|j⟩⟨j| + |j′⟩⟨j′|) ⊗ (|k⟩⟨k| + |k′⟩⟨k′|)`
    pub projector: Matrix,
    /// Subnormalized `PρP` on the full space.
    pub block: Matrix,
    /// `tr(PρP)`
    pub weight: f64,
    /// Renormalized block as a two-qubit state (`j ↦ 0`, `j′ ↦ 1`, `k ↦ 0`, `k′ ↦ 1`).
    pub qubit_block: BipartiteState,
    pub block_negativity: f64,
}

pub fn distill_witness(bs: &BipartiteState, cert: &PairingCertificate, which: usize) -> Result<DistillWitness> {
    let &((j, k), (jp, kp)) = cert.transpositions.get(which).ok_or(Error::NoTransposition(which))?;
    let (d_a, d_b) = (bs.d_a(), bs.d_b());
    if j.max(jp) >= d_a || k.max(kp) >= d_b {
        return Err(Error::DimensionMismatch("certificate labels exceed the state dimensions".into()));
    }
    let mut pa = vec![0.0; d_a];
    pa[j] = 1.0;
    pa[jp] = 1.0;
    let mut pb = vec![0.0; d_b];
    pb[k] = 1.0;
    pb[kp] = 1.0;
    let projector = Matrix::diag(&pa).kron(&Matrix::diag(&pb));
    let block = &(&projector * bs.matrix()) * &projector;
    let weight = block.trace().re;
    if weight <= 0.0 {
        return Err(Error::ConditionViolated("projected block has zero weight".into()));
    }
    let idx = [bs.index(j, k), bs.index(j, kp), bs.index(jp, k), bs.index(jp, kp)];
    let sub = bs.matrix().submatrix(&idx).scale_real(1.0 / weight);
    let qubit_block = BipartiteState::from_matrix(sub, 2, 2)?;
    let block_negativity = negativity(&qubit_block)?.value;
    Ok(DistillWitness { projector, block, weight, qubit_block, block_negativity })
}

/// Lower bound `Σ_j p_j [S(ρ̃_j^diag) − S(ρ̃_j)]` on the distillable
/// entanglement, from local projections onto pairs of A labels.
///
/// Blocks with weight `≤ zero_tol` are skipped.
pub fn distillable_lower_bound(
    bs: &BipartiteState,
    cert: &PairingCertificate,
    a_pairs: &[[usize; 2]],
    zero_tol: f64,
) -> Result<f64> {
    let d_a = bs.d_a();
    let d_b = bs.d_b();
    let mut used = vec![false; d_a];
    for pair in a_pairs {
        if pair[0] == pair[1] {
            return Err(Error::InvalidPartition(format!("pair {pair:?} repeats a label")));
        }
        for &m in pair {
            if m >= d_a {
                return Err(Error::InvalidPartition(format!("label {m} outside 0..{d_a}")));
            }
            if used[m] {
                return Err(Error::InvalidPartition(format!("label {m} appears twice")));
            }
            used[m] = true;
        }
    }
    if !certificate_matches(bs, cert, DEFAULT_PAIRING_TOL) {
        return Err(Error::ConditionViolated("certificate does not match the state".into()));
    }

    let mut bound = 0.0;
    for pair in a_pairs {
        let idx: Vec<usize> = pair.iter().flat_map(|&m| (0..d_b).map(move |k| m * d_b + k)).collect();
        let sub = bs.matrix().submatrix(&idx);
        let p = sub.trace().re;
        if p <= zero_tol {
            continue;
        }
        let rho = DensityMatrix::with_tol(sub.scale_real(1.0 / p), 1e-8)?;
        let contribution = von_neumann_entropy(&dephase(&rho))? - von_neumann_entropy(&rho)?;
        bound += p * contribution;
    }
    Ok(bound)
}

/// Conjugates by explicit local unitaries, `(U_A ⊗ U_B) ρ (U_A ⊗ U_B)†`,
/// so that non-canonical pairing states can be brought to canonical form
/// before detection.
pub fn conjugate_local(bs: &BipartiteState, u_a: &Matrix, u_b: &Matrix) -> Result<BipartiteState> {
    if u_a.rows() != bs.d_a() || u_b.rows() != bs.d_b() || !u_a.is_square() || !u_b.is_square() {
        return Err(Error::DimensionMismatch("local unitary dimensions".into()));
    }
    let u = u_a.kron(u_b);
    let m = &(&u * bs.matrix()) * &u.adjoint();
    BipartiteState::from_matrix(m, bs.d_a(), bs.d_b())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{C64, ZERO};
    use approx::assert_abs_diff_eq;

    fn c(re: f64) -> C64 {
        C64::new(re, 0.0)
    }

    fn mc_example() -> BipartiteState {
        let mut m = Matrix::zeros(4, 4);
        m[(0, 0)] = c(0.5);
        m[(3, 3)] = c(0.5);
        m[(0, 3)] = c(0.3);
        m[(3, 0)] = c(0.3);
        BipartiteState::from_matrix(m, 2, 2).unwrap()
    }

    fn bell() -> BipartiteState {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        BipartiteState::new(DensityMatrix::pure(&[c(s), ZERO, ZERO, c(s)]).unwrap(), 2, 2).unwrap()
    }

    fn diag_state() -> BipartiteState {
        BipartiteState::from_matrix(Matrix::diag(&[0.1, 0.2, 0.3, 0.4]), 2, 2).unwrap()
    }

    fn isotropic_half() -> BipartiteState {
        let m = &bell().matrix().scale_real(0.5) + &Matrix::identity(4).scale_real(0.125);
        BipartiteState::from_matrix(m, 2, 2).unwrap()
    }

    #[test]
    fn detect_diagonal_gives_empty_certificate() {
        let cert = detect_canonical_pairing(&diag_state(), DEFAULT_PAIRING_TOL).unwrap().unwrap();
        assert_eq!(cert.pairing_number, 0);
        assert!(cert.transpositions.is_empty());
        assert_eq!(cert.fixed_points.len(), 4);
    }

    #[test]
    fn detect_mc_example() {
        let cert = detect_canonical_pairing(&mc_example(), DEFAULT_PAIRING_TOL).unwrap().unwrap();
        assert_eq!(cert.transpositions, vec![((0, 1), (1, 0))]);
        assert_eq!(cert.fixed_points, vec![(0, 0), (1, 1)]);
        assert_eq!(cert.pairing_number, 1);
        assert!(cert.is_well_formed());
        assert!(certificate_matches(&mc_example(), &cert, DEFAULT_PAIRING_TOL));
    }

    #[test]
    fn detect_rejects_isotropic_mixture() {
        assert!(detect_canonical_pairing(&isotropic_half(), DEFAULT_PAIRING_TOL).unwrap().is_none());
    }

    #[test]
    fn detect_rejects_same_side_coherence() {
        // |00⟩ and |01⟩ coherent: j = j′ so PT keeps the entry in place, not monomial-paired.
        let m = Matrix::from_real(&[
            &[0.5, 0.2, 0.0, 0.0],
            &[0.2, 0.5, 0.0, 0.0],
            &[0.0, 0.0, 0.0, 0.0],
            &[0.0, 0.0, 0.0, 0.0],
        ]);
        let bs = BipartiteState::from_matrix(m, 2, 2).unwrap();
        assert!(detect_canonical_pairing(&bs, DEFAULT_PAIRING_TOL).unwrap().is_none());
    }

    #[test]
    fn bound_check_examples() {
        let cert = |n: usize| PairingCertificate { transpositions: vec![], fixed_points: vec![], pairing_number: n };
        assert!(pairing_number_bound_check(&cert(1), 2));
        assert!(pairing_number_bound_check(&cert(3), 3));
        assert!(!pairing_number_bound_check(&cert(2), 2));
    }

    #[test]
    fn ppt_cost_examples() {
        for (bs, want) in [(bell(), 1.0), (diag_state(), 0.0), (mc_example(), 1.6f64.log2())] {
            let cert = detect_canonical_pairing(&bs, DEFAULT_PAIRING_TOL).unwrap().unwrap();
            assert_abs_diff_eq!(ppt_cost_condition(&bs, &cert).unwrap(), want, epsilon = 1e-12);
        }
        assert_abs_diff_eq!(1.6f64.log2(), 0.678_07, epsilon = 1e-5);
    }

    #[test]
    fn ppt_cost_rejects_mismatched_certificate() {
        let cert = detect_canonical_pairing(&mc_example(), DEFAULT_PAIRING_TOL).unwrap().unwrap();
        assert!(matches!(ppt_cost_condition(&diag_state(), &cert), Err(Error::ConditionViolated(_))));
    }

    #[test]
    fn decompose_two_blocks_round_trip() {
        // Two MC blocks of weight 1/2 on B columns {0,1} and {2,3}.
        let d_b = 4;
        let mut m = Matrix::zeros(8, 8);
        let put = |m: &mut Matrix, a: usize, b: usize, c0: f64, c1: f64, off: f64| {
            m[(a, a)] = c(c0);
            m[(b, b)] = c(c1);
            m[(a, b)] = c(off);
            m[(b, a)] = c(off);
        };
        put(&mut m, 0, d_b + 1, 0.25, 0.25, 0.2);
        put(&mut m, 2, d_b + 3, 0.3, 0.2, 0.1);
        let bs = BipartiteState::from_matrix(m, 2, d_b).unwrap();
        let dec = qubit_qudit_decompose(&bs).unwrap();
        assert_eq!(dec.p0, 0.0);
        assert!(dec.diag_block.is_none());
        assert_eq!(dec.blocks.len(), 2);
        assert_abs_diff_eq!(dec.blocks[0].weight, 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(dec.blocks[1].weight, 0.5, epsilon = 1e-15);
        assert_eq!(dec.blocks[0].columns, (0, 1));
        assert_eq!(dec.blocks[1].columns, (2, 3));
        assert!(dec.reassemble().unwrap().matrix().max_abs_diff(bs.matrix()) < 1e-12);
    }

    #[test]
    fn decompose_diagonal() {
        let bs = BipartiteState::from_matrix(Matrix::diag(&[0.1, 0.2, 0.1, 0.3, 0.2, 0.1]), 2, 3).unwrap();
        let dec = qubit_qudit_decompose(&bs).unwrap();
        assert_abs_diff_eq!(dec.p0, 1.0, epsilon = 1e-15);
        assert!(dec.blocks.is_empty());
    }

    #[test]
    fn decompose_errors() {
        let bs = BipartiteState::new(DensityMatrix::maximally_mixed(9), 3, 3).unwrap();
        assert!(matches!(qubit_qudit_decompose(&bs), Err(Error::NotQubit(3))));
        assert!(matches!(qubit_qudit_decompose(&isotropic_half()), Err(Error::NotCanonicalPairing)));
    }

    #[test]
    fn measures_bell_and_mc() {
        let m = pairing_measures(&qubit_qudit_decompose(&bell()).unwrap()).unwrap();
        assert_abs_diff_eq!(m.e_d, 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(m.e_c, 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(m.e_ppt, 1.0, epsilon = 1e-12);

        let dec = qubit_qudit_decompose(&mc_example()).unwrap();
        let m = pairing_measures(&dec).unwrap();
        assert_abs_diff_eq!(m.e_d, 0.278_071_905_112_637_7, epsilon = 1e-12);
        assert_abs_diff_eq!(m.e_c, 0.468_995_593_589_281_2, epsilon = 1e-12);
        assert_eq!(m.e_d, m.c_d);
        assert_eq!(m.e_c, m.c_c);
        assert!(m.e_d <= m.e_ppt + 1e-9);
        assert_abs_diff_eq!(distillable_by_blocks(&dec).unwrap(), m.e_d, epsilon = 1e-12);

        let m = pairing_measures(&qubit_qudit_decompose(&diag_state()).unwrap()).unwrap();
        assert_abs_diff_eq!(m.e_d, 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(m.e_c, 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(m.e_ppt, 0.0, epsilon = 1e-12);
    }

    #[test]
    fn witness_mc_example() {
        let bs = mc_example();
        let cert = detect_canonical_pairing(&bs, DEFAULT_PAIRING_TOL).unwrap().unwrap();
        let w = distill_witness(&bs, &cert, 0).unwrap();
        assert_eq!(w.projector, Matrix::identity(4));
        assert_abs_diff_eq!(w.weight, 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(w.block_negativity, 0.6, epsilon = 1e-12);
    }

    #[test]
    fn witness_bell_with_spectator() {
        // (|00⟩+|11⟩)/√2 at weight 0.7 plus |22⟩ at weight 0.3, on 3×3.
        let mut m = Matrix::zeros(9, 9);
        for &(r, cc) in &[(0, 0), (0, 4), (4, 0), (4, 4)] {
            m[(r, cc)] = c(0.35);
        }
        m[(8, 8)] = c(0.3);
        let bs = BipartiteState::from_matrix(m, 3, 3).unwrap();
        let cert = detect_canonical_pairing(&bs, DEFAULT_PAIRING_TOL).unwrap().unwrap();
        assert_eq!(cert.pairing_number, 1);
        let w = distill_witness(&bs, &cert, 0).unwrap();
        assert_abs_diff_eq!(w.weight, 0.7, epsilon = 1e-15);
        assert_abs_diff_eq!(w.block_negativity, 1.0, epsilon = 1e-12);
        // k = 1 maps to qubit label 0, so the block is Bell with B flipped.
        let flip = Matrix::from_real(&[&[0.0, 1.0], &[1.0, 0.0]]);
        let expect = &(&Matrix::identity(2).kron(&flip) * bell().matrix()) * &Matrix::identity(2).kron(&flip);
        assert!(w.qubit_block.matrix().max_abs_diff(&expect) < 1e-14);
    }

    #[test]
    fn witness_requires_transposition() {
        let bs = diag_state();
        let cert = detect_canonical_pairing(&bs, DEFAULT_PAIRING_TOL).unwrap().unwrap();
        assert!(matches!(distill_witness(&bs, &cert, 0), Err(Error::NoTransposition(0))));
    }

    #[test]
    fn lower_bound_examples() {
        let bs = mc_example();
        let cert = detect_canonical_pairing(&bs, DEFAULT_PAIRING_TOL).unwrap().unwrap();
        let lb = distillable_lower_bound(&bs, &cert, &[[0, 1]], 1e-12).unwrap();
        let ed = pairing_measures(&qubit_qudit_decompose(&bs).unwrap()).unwrap().e_d;
        assert_abs_diff_eq!(lb, ed, epsilon = 1e-12);

        let d = diag_state();
        let cert = detect_canonical_pairing(&d, DEFAULT_PAIRING_TOL).unwrap().unwrap();
        assert_abs_diff_eq!(distillable_lower_bound(&d, &cert, &[[0, 1]], 1e-12).unwrap(), 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(distillable_lower_bound(&d, &cert, &[], 1e-12).unwrap(), 0.0, epsilon = 1e-12);
    }

    #[test]
    fn lower_bound_two_bell_blocks() {
        // Bell-like blocks on A pairs {0,1} and {2,3}: weights 0.6 (Bell) and 0.4 (MC example).
        let (d_a, d_b) = (4, 4);
        let mut m = Matrix::zeros(16, 16);
        let idx = |j: usize, k: usize| j * d_b + k;
        let put = |m: &mut Matrix, a: usize, b: usize, w: f64, c0: f64, c1: f64, off: f64| {
            m[(a, a)] = c(w * c0);
            m[(b, b)] = c(w * c1);
            m[(a, b)] = c(w * off);
            m[(b, a)] = c(w * off);
        };
        put(&mut m, idx(0, 0), idx(1, 1), 0.6, 0.5, 0.5, 0.5);
        put(&mut m, idx(2, 2), idx(3, 3), 0.4, 0.5, 0.5, 0.3);
        let bs = BipartiteState::from_matrix(m, d_a, d_b).unwrap();
        let cert = detect_canonical_pairing(&bs, DEFAULT_PAIRING_TOL).unwrap().unwrap();
        assert_eq!(cert.pairing_number, 2);
        let lb = distillable_lower_bound(&bs, &cert, &[[0, 1], [2, 3]], 1e-12).unwrap();
        let want = 0.6 * 1.0 + 0.4 * 0.278_071_905_112_637_7;
        assert_abs_diff_eq!(lb, want, epsilon = 1e-12);
        assert!(lb <= negativity(&bs).unwrap().log + 1e-9);
    }

    #[test]
    fn lower_bound_rejects_bad_partition() {
        let bs = BipartiteState::new(DensityMatrix::maximally_mixed(9), 3, 3).unwrap();
        let cert = detect_canonical_pairing(&bs, DEFAULT_PAIRING_TOL).unwrap().unwrap();
        for pairs in [vec![[0, 1], [1, 2]], vec![[0, 0]], vec![[0, 3]]] {
            assert!(matches!(
                distillable_lower_bound(&bs, &cert, &pairs, 1e-12),
                Err(Error::InvalidPartition(_))
            ));
        }
    }

    #[test]
    fn local_conjugation_round_trip() {
        let bs = mc_example();
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let u = Matrix::from_real(&[&[h, h], &[h, -h]]);
        let rotated = conjugate_local(&bs, &u, &Matrix::identity(2)).unwrap();
        assert!(detect_canonical_pairing(&rotated, DEFAULT_PAIRING_TOL).unwrap().is_none());
        let back = conjugate_local(&rotated, &u.adjoint(), &Matrix::identity(2)).unwrap();
        assert!(detect_canonical_pairing(&back, DEFAULT_PAIRING_TOL).unwrap().is_some());
    }
}
