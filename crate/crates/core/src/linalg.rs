//! Dense complex matrices and the kernels the measures are built on.
//!
//! Bipartite product-basis convention: `|j k⟩` lives at index `j * d_B + k`.
//! Every operation and the state file format use it.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex;

use crate::error::{Error, Result};

pub type C64 = Complex<f64>;

pub const ZERO: C64 = C64::new(0.0, 0.0);
pub const ONE: C64 = C64::new(1.0, 0.0);

/// Default tolerance used when validating density matrices.
pub const DEFAULT_VALIDATION_TOL: f64 = 1e-9;

const JACOBI_MAX_SWEEPS: usize = 100;
const JACOBI_REL_TOL: f64 = 1e-12;

/// Row-major dense complex matrix.
#[derive(Clone, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<C64>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<C64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {}x{} matrix",
                data.len(),
                rows,
                cols
            )));
        }
        if let Some(pos) = data.iter().position(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite { row: pos / cols.max(1), col: pos % cols.max(1) });
        }
        Ok(Self { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = ONE;
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Self { rows, cols, data }
    }

    /// Builds a matrix from real rows. Panics on ragged input.
    pub fn from_real(rows: &[&[f64]]) -> Self {
        let n = rows.len();
        let m = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == m), "ragged rows");
        Self::from_fn(n, m, |r, c| C64::new(rows[r][c], 0.0))
    }

    /// Builds a matrix from complex rows. Panics on ragged input.
    pub fn from_rows(rows: &[Vec<C64>]) -> Self {
        let n = rows.len();
        let m = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == m), "ragged rows");
        Self::from_fn(n, m, |r, c| rows[r][c])
    }

    pub fn diag(values: &[f64]) -> Self {
        let mut m = Self::zeros(values.len(), values.len());
        for (i, &v) in values.iter().enumerate() {
            m[(i, i)] = C64::new(v, 0.0);
        }
        m
    }

    /// `|v⟩⟨v|`
    pub fn outer(v: &[C64]) -> Self {
        Self::from_fn(v.len(), v.len(), |r, c| v[r] * v[c].conj())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn as_slice(&self) -> &[C64] {
        &self.data
    }

    pub fn diagonal(&self) -> Vec<C64> {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).collect()
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)])
    }

    pub fn scale(&self, s: C64) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|z| z * s).collect() }
    }

    pub fn scale_real(&self, s: f64) -> Self {
        self.scale(C64::new(s, 0.0))
    }

    pub fn map(&self, f: impl Fn(C64) -> C64) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|&z| f(z)).collect() }
    }

    pub fn trace(&self) -> C64 {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Largest entrywise modulus of `self - other`. Panics on shape mismatch.
    pub fn max_abs_diff(&self, other: &Matrix) -> f64 {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        self.data.iter().zip(&other.data).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// `‖M − M†‖_max`; infinite for non-square input.
    pub fn hermitian_deviation(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        let n = self.rows;
        let mut dev = 0.0f64;
        for r in 0..n {
            for c in r..n {
                dev = dev.max((self[(r, c)] - self[(c, r)].conj()).norm());
            }
        }
        dev
    }

    /// Largest off-diagonal modulus.
    pub fn max_offdiag_abs(&self) -> f64 {
        let mut m = 0.0f64;
        for r in 0..self.rows {
            for c in 0..self.cols {
                if r != c {
                    m = m.max(self[(r, c)].norm());
                }
            }
        }
        m
    }

    /// Kronecker product, `self ⊗ other`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let (ra, ca, rb, cb) = (self.rows, self.cols, other.rows, other.cols);
        Matrix::from_fn(ra * rb, ca * cb, |r, c| self[(r / rb, c / cb)] * other[(r % rb, c % cb)])
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[C64]) -> Vec<C64> {
        assert_eq!(v.len(), self.cols, "shape mismatch");
        (0..self.rows)
            .map(|r| self.data[r * self.cols..(r + 1) * self.cols].iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Principal submatrix on the given indices, in the order given.
    pub fn submatrix(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(idx.len(), idx.len(), |r, c| self[(idx[r], idx[c])])
    }

    /// Copy with every off-diagonal entry zeroed.
    pub fn diagonal_part(&self) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |r, c| if r == c { self[(r, c)] } else { ZERO })
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = C64;
    fn index(&self, (r, c): (usize, usize)) -> &C64 {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut C64 {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in product");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(r, k)];
                if a == ZERO {
                    continue;
                }
                for c in 0..rhs.cols {
                    out.data[r * rhs.cols + c] += a * rhs.data[k * rhs.cols + c];
                }
            }
        }
        out
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch in sum");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch in difference");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, " ")?;
            for c in 0..self.cols {
                let z = self[(r, c)];
                write!(f, " {:+.6}{:+.6}i", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Validated Hermitian, positive-semidefinite, unit-trace matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityMatrix {
    mat: Matrix,
    validation_tol: f64,
}

impl DensityMatrix {
    pub fn new(mat: Matrix) -> Result<Self> {
        Self::with_tol(mat, DEFAULT_VALIDATION_TOL)
    }

    pub fn with_tol(mat: Matrix, validation_tol: f64) -> Result<Self> {
        if !mat.is_square() {
            return Err(Error::InvalidState(format!("{}x{} matrix is not square", mat.rows, mat.cols)));
        }
        if mat.rows == 0 {
            return Err(Error::InvalidState("empty matrix".into()));
        }
        let dev = mat.hermitian_deviation();
        if dev > validation_tol {
            return Err(Error::InvalidState(format!("Hermiticity deviation {dev:.3e}")));
        }
        let tr = mat.trace();
        if (tr - ONE).norm() > validation_tol {
            return Err(Error::InvalidState(format!("trace {:.12} + {:.3e}i", tr.re, tr.im)));
        }
        let eig = hermitian_eig(&mat)?;
        let min = eig.eigenvalues.last().copied().unwrap_or(0.0);
        if min < -validation_tol {
            return Err(Error::InvalidState(format!("smallest eigenvalue {min:.3e}")));
        }
        Ok(Self { mat, validation_tol })
    }

    /// Pure state `|ψ⟩⟨ψ|`; the vector is normalized first.
    pub fn pure(psi: &[C64]) -> Result<Self> {
        let norm = psi.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::InvalidState("zero or non-finite state vector".into()));
        }
        let v: Vec<C64> = psi.iter().map(|z| z / norm).collect();
        Self::new(Matrix::outer(&v))
    }

    /// Diagonal state from a probability vector.
    pub fn diagonal(probs: &[f64]) -> Result<Self> {
        Self::new(Matrix::diag(probs))
    }

    pub fn maximally_mixed(d: usize) -> Self {
        Self { mat: Matrix::identity(d).scale_real(1.0 / d as f64), validation_tol: DEFAULT_VALIDATION_TOL }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.mat
    }

    pub fn into_matrix(self) -> Matrix {
        self.mat
    }

    pub fn dim(&self) -> usize {
        self.mat.rows
    }

    pub fn validation_tol(&self) -> f64 {
        self.validation_tol
    }

    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        Ok(hermitian_eig(&self.mat)?.eigenvalues)
    }
}

/// A density matrix on `H_A ⊗ H_B` with its subsystem dimensions.
#[derive(Clone, Debug, PartialEq)]
pub struct BipartiteState {
    state: DensityMatrix,
    d_a: usize,
    d_b: usize,
}

impl BipartiteState {
    pub fn new(state: DensityMatrix, d_a: usize, d_b: usize) -> Result<Self> {
        if d_a == 0 || d_b == 0 || d_a * d_b != state.dim() {
            return Err(Error::DimensionMismatch(format!(
                "d_A = {d_a}, d_B = {d_b} for a state of dimension {}",
                state.dim()
            )));
        }
        Ok(Self { state, d_a, d_b })
    }

    /// Validates `mat` as a density matrix and attaches the dimensions.
    pub fn from_matrix(mat: Matrix, d_a: usize, d_b: usize) -> Result<Self> {
        Self::new(DensityMatrix::new(mat)?, d_a, d_b)
    }

    pub fn state(&self) -> &DensityMatrix {
        &self.state
    }

    pub fn matrix(&self) -> &Matrix {
        self.state.matrix()
    }

    pub fn d_a(&self) -> usize {
        self.d_a
    }

    pub fn d_b(&self) -> usize {
        self.d_b
    }

    pub fn dim(&self) -> usize {
        self.d_a * self.d_b
    }

    /// Row/column index of `|j k⟩`.
    pub fn index(&self, j: usize, k: usize) -> usize {
        j * self.d_b + k
    }

    /// Inverse of [`BipartiteState::index`].
    pub fn label(&self, idx: usize) -> (usize, usize) {
        (idx / self.d_b, idx % self.d_b)
    }
}

/// Eigen-decomposition of a Hermitian matrix.
#[derive(Clone, Debug)]
pub struct SpectralDecomposition {
    /// Descending.
    pub eigenvalues: Vec<f64>,
    /// Column `i` is the eigenvector of `eigenvalues[i]`.
    pub eigenvectors: Matrix,
}

impl SpectralDecomposition {
    /// `V Λ V†`
    pub fn reconstruct(&self) -> Matrix {
        self.reconstruct_with(|x| x)
    }

    /// `V f(Λ) V†`
    pub fn reconstruct_with(&self, f: impl Fn(f64) -> f64) -> Matrix {
        let v = &self.eigenvectors;
        let n = v.rows();
        let vals: Vec<f64> = self.eigenvalues.iter().map(|&x| f(x)).collect();
        Matrix::from_fn(n, n, |r, c| {
            (0..vals.len()).map(|i| v[(r, i)] * v[(c, i)].conj() * vals[i]).sum()
        })
    }
}

/// Eigenvalues with `|λ| ≤ 1e-10 · max(1, spectral radius)` count as zero.
pub fn eigen_zero_threshold(eigenvalues: &[f64]) -> f64 {
    let radius = eigenvalues.iter().map(|x| x.abs()).fold(0.0, f64::max);
    1e-10 * radius.max(1.0)
}

/// Cyclic complex Jacobi eigensolver for Hermitian matrices.
pub fn hermitian_eig(m: &Matrix) -> Result<SpectralDecomposition> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch(format!("{}x{} matrix is not square", m.rows, m.cols)));
    }
    let n = m.rows;
    let dev = m.hermitian_deviation();
    if dev > 1e-9 * m.max_abs().max(1.0) {
        return Err(Error::NotHermitian { deviation: dev });
    }

    let mut a = Matrix::from_fn(n, n, |r, c| 0.5 * (m[(r, c)] + m[(c, r)].conj()));
    for i in 0..n {
        a[(i, i)].im = 0.0;
    }
    let mut v = Matrix::identity(n);
    let target = JACOBI_REL_TOL * a.frobenius_norm();

    let off_norm = |a: &Matrix| {
        let mut s = 0.0;
        for r in 0..n {
            for c in 0..n {
                if r != c {
                    s += a[(r, c)].norm_sqr();
                }
            }
        }
        s.sqrt()
    };

    let mut converged = off_norm(&a) <= target;
    let mut sweeps = 0;
    while !converged {
        if sweeps == JACOBI_MAX_SWEEPS {
            return Err(Error::NoConvergence { sweeps });
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
        sweeps += 1;
        converged = off_norm(&a) <= target;
    }

    let mut order: Vec<usize> = (0..n).collect();
    // stable: ties keep first occurrence
    order.sort_by(|&i, &j| a[(j, j)].re.partial_cmp(&a[(i, i)].re).unwrap_or(std::cmp::Ordering::Equal));
    let eigenvalues = order.iter().map(|&i| a[(i, i)].re).collect();
    let eigenvectors = Matrix::from_fn(n, n, |r, c| v[(r, order[c])]);
    Ok(SpectralDecomposition { eigenvalues, eigenvectors })
}

/// One Jacobi rotation annihilating `a[p][q]`: `a ← J† a J`, `v ← v J`.
fn rotate(a: &mut Matrix, v: &mut Matrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    let g = apq.norm();
    if g < f64::MIN_POSITIVE {
        // Subnormal entries cannot define a unit phase; dropping them is below rounding.
        a[(p, q)] = ZERO;
        a[(q, p)] = ZERO;
        return;
    }
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    let phase = apq / g;
    let phase = phase / phase.norm();
    let zeta = (aqq - app) / (2.0 * g);
    let t = if zeta >= 0.0 {
        1.0 / (zeta + (1.0 + zeta * zeta).sqrt())
    } else {
        -1.0 / (-zeta + (1.0 + zeta * zeta).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;
    // J = diag(1, e^{-iφ}) · [[c, s], [-s, c]]
    let e = phase.conj();
    let j00 = C64::new(c, 0.0);
    let j01 = C64::new(s, 0.0);
    let j10 = e * (-s);
    let j11 = e * c;

    let n = a.rows();
    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * j00 + akq * j10;
        a[(k, q)] = akp * j01 + akq * j11;
    }
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = j00.conj() * apk + j10.conj() * aqk;
        a[(q, k)] = j01.conj() * apk + j11.conj() * aqk;
    }
    a[(p, q)] = ZERO;
    a[(q, p)] = ZERO;
    a[(p, p)].im = 0.0;
    a[(q, q)].im = 0.0;
    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * j00 + vkq * j10;
        v[(k, q)] = vkp * j01 + vkq * j11;
    }
}

/// Singular values in descending order.
///
/// Computed from the Hermitian dilation `[[0, X], [X†, 0]]`, whose spectrum is
/// `±σ_i` padded with zeros. This keeps small singular values accurate, unlike
/// taking square roots of the eigenvalues of `X†X`.
pub fn singular_values(x: &Matrix) -> Result<Vec<f64>> {
    let (m, n) = (x.rows(), x.cols());
    let k = m.min(n);
    if k == 0 {
        return Ok(Vec::new());
    }
    let dil = Matrix::from_fn(m + n, m + n, |r, c| {
        if r < m && c >= m {
            x[(r, c - m)]
        } else if r >= m && c < m {
            x[(c, r - m)].conj()
        } else {
            ZERO
        }
    });
    let eig = hermitian_eig(&dil)?;
    Ok(eig.eigenvalues.iter().take(k).map(|&s| s.max(0.0)).collect())
}

/// Schatten 1-norm: sum of singular values.
pub fn trace_norm(x: &Matrix) -> Result<f64> {
    // Hermitian input: Σ|λ| directly, one eigensolve of the original size.
    if x.is_square() && x.hermitian_deviation() <= 1e-14 * x.max_abs().max(1.0) {
        let eig = hermitian_eig(x)?;
        return Ok(eig.eigenvalues.iter().map(|l| l.abs()).sum());
    }
    Ok(singular_values(x)?.iter().sum())
}

/// `Σ_{jk} |X_{jk}|`
pub fn entrywise_l1_norm(x: &Matrix) -> f64 {
    x.as_slice().iter().map(|z| z.norm()).sum()
}

/// Partial transpose on subsystem A: `⟨jk|out|j′k′⟩ = ⟨j′k|in|jk′⟩`.
pub fn partial_transpose(bs: &BipartiteState) -> Matrix {
    partial_transpose_matrix(bs.matrix(), bs.d_a(), bs.d_b()).expect("dimensions validated on construction")
}

/// [`partial_transpose`] on a raw matrix.
pub fn partial_transpose_matrix(m: &Matrix, d_a: usize, d_b: usize) -> Result<Matrix> {
    if !m.is_square() || m.rows() != d_a * d_b {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} matrix for d_A = {d_a}, d_B = {d_b}",
            m.rows(),
            m.cols()
        )));
    }
    Ok(Matrix::from_fn(m.rows(), m.cols(), |r, c| {
        let (j, k) = (r / d_b, r % d_b);
        let (jp, kp) = (c / d_b, c % d_b);
        m[(jp * d_b + k, j * d_b + kp)]
    }))
}

/// Kronecker product `A ⊗ B` in the `j·d_B + k` convention.
pub fn tensor_product(a: &Matrix, b: &Matrix) -> Matrix {
    a.kron(b)
}

/// Tensor product of two states as a bipartite state.
pub fn tensor_states(a: &DensityMatrix, b: &DensityMatrix) -> BipartiteState {
    let state = DensityMatrix { mat: a.matrix().kron(b.matrix()), validation_tol: a.validation_tol.max(b.validation_tol) };
    BipartiteState { state, d_a: a.dim(), d_b: b.dim() }
}

/// `ρ ⊗ σ` for `ρ` on `A₁B₁` and `σ` on `A₂B₂`, regrouped as `(A₁A₂)(B₁B₂)`.
pub fn bipartite_tensor(rho: &BipartiteState, sigma: &BipartiteState) -> BipartiteState {
    let (a1, b1, a2, b2) = (rho.d_a, rho.d_b, sigma.d_a, sigma.d_b);
    let (d_a, d_b) = (a1 * a2, b1 * b2);
    // Index of |j1 j2⟩_A |k1 k2⟩_B given (j1 k1) and (j2 k2) indices.
    let regroup = |i1: usize, i2: usize| {
        let (j1, k1) = (i1 / b1, i1 % b1);
        let (j2, k2) = (i2 / b2, i2 % b2);
        (j1 * a2 + j2) * d_b + (k1 * b2 + k2)
    };
    let (n1, n2) = (a1 * b1, a2 * b2);
    let mut mat = Matrix::zeros(n1 * n2, n1 * n2);
    for r1 in 0..n1 {
        for c1 in 0..n1 {
            let x = rho.matrix()[(r1, c1)];
            for r2 in 0..n2 {
                for c2 in 0..n2 {
                    mat[(regroup(r1, r2), regroup(c1, c2))] = x * sigma.matrix()[(r2, c2)];
                }
            }
        }
    }
    let state = DensityMatrix { mat, validation_tol: rho.state.validation_tol.max(sigma.state.validation_tol) };
    BipartiteState { state, d_a, d_b }
}

/// Von Neumann entropy in bits.
pub fn von_neumann_entropy(rho: &DensityMatrix) -> Result<f64> {
    let eig = hermitian_eig(rho.matrix())?;
    entropy_of_spectrum(&eig.eigenvalues, rho.validation_tol())
}

/// `−Σ λ log₂ λ` over a spectrum; near-zero values are dropped.
pub fn entropy_of_spectrum(eigenvalues: &[f64], validation_tol: f64) -> Result<f64> {
    let zero = eigen_zero_threshold(eigenvalues);
    let mut s = 0.0;
    for &l in eigenvalues {
        if l < -validation_tol {
            return Err(Error::NegativeEigenvalue(l));
        }
        if l > zero {
            s -= l * l.log2();
        }
    }
    Ok(s.max(0.0))
}

/// Binary entropy in bits.
pub fn binary_entropy(x: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::OutOfRange(x));
    }
    let term = |p: f64| if p > 0.0 { -p * p.log2() } else { 0.0 };
    Ok(term(x) + term(1.0 - x))
}

/// Completely dephasing map: keeps the diagonal, zeroes everything else.
pub fn dephase(rho: &DensityMatrix) -> DensityMatrix {
    let mut mat = rho.matrix().diagonal_part();
    for i in 0..mat.rows() {
        mat[(i, i)].im = 0.0;
    }
    DensityMatrix { mat, validation_tol: rho.validation_tol }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn bell() -> BipartiteState {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let psi = [c(s, 0.0), ZERO, ZERO, c(s, 0.0)];
        BipartiteState::new(DensityMatrix::pure(&psi).unwrap(), 2, 2).unwrap()
    }

    #[test]
    fn eig_identity() {
        let e = hermitian_eig(&Matrix::identity(2)).unwrap();
        assert_eq!(e.eigenvalues, vec![1.0, 1.0]);
    }

    #[test]
    fn eig_two_by_two_closed_form() {
        let m = Matrix::from_real(&[&[0.5, 0.3], &[0.3, 0.5]]);
        let e = hermitian_eig(&m).unwrap();
        assert_abs_diff_eq!(e.eigenvalues[0], 0.8, epsilon = 1e-14);
        assert_abs_diff_eq!(e.eigenvalues[1], 0.2, epsilon = 1e-14);
        assert!(e.reconstruct().max_abs_diff(&m) < 1e-14);
    }

    #[test]
    fn eig_tau_remark_matrix() {
        let a = std::f64::consts::FRAC_1_SQRT_2;
        let tau = Matrix::from_real(&[
            &[1.0, a, 0.0, a],
            &[a, 1.0, a, 0.0],
            &[0.0, a, 1.0, a],
            &[a, 0.0, a, 1.0],
        ])
        .scale_real(0.25);
        let e = hermitian_eig(&tau).unwrap();
        let r2 = 2f64.sqrt();
        let want = [(1.0 + r2) / 4.0, 0.25, 0.25, (1.0 - r2) / 4.0];
        for (got, want) in e.eigenvalues.iter().zip(want) {
            assert_abs_diff_eq!(*got, want, epsilon = 1e-12);
        }
    }

    #[test]
    fn eig_complex_hermitian() {
        let m = Matrix::from_rows(&[
            vec![c(2.0, 0.0), c(0.0, 1.0), c(1.0, -1.0)],
            vec![c(0.0, -1.0), c(1.0, 0.0), c(0.5, 0.0)],
            vec![c(1.0, 1.0), c(0.5, 0.0), c(-1.0, 0.0)],
        ]);
        let e = hermitian_eig(&m).unwrap();
        assert!(e.reconstruct().max_abs_diff(&m) < 1e-12);
        let vhv = &e.eigenvectors.adjoint() * &e.eigenvectors;
        assert!(vhv.max_abs_diff(&Matrix::identity(3)) < 1e-12);
        assert!(e.eigenvalues.windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn eig_rejects_non_hermitian() {
        let m = Matrix::from_real(&[&[1.0, 2.0], &[0.0, 1.0]]);
        assert!(matches!(hermitian_eig(&m), Err(Error::NotHermitian { .. })));
    }

    #[test]
    fn singular_values_examples() {
        let x = Matrix::from_rows(&[vec![ZERO, c(2.0, 0.0)], vec![c(0.0, 3.0), ZERO]]);
        let s = singular_values(&x).unwrap();
        assert_abs_diff_eq!(s[0], 3.0, epsilon = 1e-14);
        assert_abs_diff_eq!(s[1], 2.0, epsilon = 1e-14);

        let x = Matrix::from_real(&[&[1.0, 0.0], &[1.0, 0.0]]);
        let s = singular_values(&x).unwrap();
        assert_abs_diff_eq!(s[0], 2f64.sqrt(), epsilon = 1e-14);
        assert_abs_diff_eq!(s[1], 0.0, epsilon = 1e-14);

        assert_eq!(singular_values(&Matrix::zeros(2, 2)).unwrap(), vec![0.0, 0.0]);
    }

    #[test]
    fn singular_values_rectangular() {
        let x = Matrix::from_real(&[&[3.0, 0.0, 0.0], &[0.0, 0.0, 4.0]]);
        let s = singular_values(&x).unwrap();
        assert_eq!(s.len(), 2);
        assert_abs_diff_eq!(s[0], 4.0, epsilon = 1e-14);
        assert_abs_diff_eq!(s[1], 3.0, epsilon = 1e-14);
    }

    #[test]
    fn trace_norm_examples() {
        let x = Matrix::from_rows(&[vec![ZERO, c(2.0, 0.0)], vec![c(0.0, 3.0), ZERO]]);
        assert_abs_diff_eq!(trace_norm(&x).unwrap(), 5.0, epsilon = 1e-13);
        let x = Matrix::from_real(&[&[1.0, 0.0], &[1.0, 0.0]]);
        assert_abs_diff_eq!(trace_norm(&x).unwrap(), 2f64.sqrt(), epsilon = 1e-13);
        let pt = partial_transpose(&bell());
        assert_abs_diff_eq!(trace_norm(&pt).unwrap(), 2.0, epsilon = 1e-13);
    }

    #[test]
    fn entrywise_l1_examples() {
        let half = Matrix::from_real(&[&[0.5, 0.5], &[0.5, 0.5]]);
        assert_eq!(entrywise_l1_norm(&half), 2.0);
        assert_eq!(entrywise_l1_norm(&Matrix::zeros(3, 3)), 0.0);
        let x = Matrix::from_rows(&[vec![ZERO, c(2.0, 0.0)], vec![c(0.0, 3.0), ZERO]]);
        assert_eq!(entrywise_l1_norm(&x), 5.0);
    }

    #[test]
    fn partial_transpose_examples() {
        let diag = BipartiteState::from_matrix(Matrix::diag(&[0.1, 0.2, 0.3, 0.4]), 2, 2).unwrap();
        assert_eq!(&partial_transpose(&diag), diag.matrix());

        let b = bell();
        let pt = partial_transpose(&b);
        let e = hermitian_eig(&pt).unwrap();
        for (got, want) in e.eigenvalues.iter().zip([0.5, 0.5, 0.5, -0.5]) {
            assert_abs_diff_eq!(*got, want, epsilon = 1e-14);
        }
        let twice = partial_transpose_matrix(&pt, 2, 2).unwrap();
        assert_eq!(&twice, b.matrix());
    }

    #[test]
    fn partial_transpose_dimension_mismatch() {
        assert!(matches!(partial_transpose_matrix(&Matrix::identity(5), 2, 2), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn tensor_product_examples() {
        let a = Matrix::from_real(&[&[1.0, 2.0], &[3.0, 4.0]]);
        assert_eq!(tensor_product(&a, &Matrix::identity(1)), a);

        let p0 = Matrix::diag(&[1.0, 0.0]);
        let p1 = Matrix::diag(&[0.0, 1.0]);
        let t = tensor_product(&p0, &p1);
        for r in 0..4 {
            for cc in 0..4 {
                let want = if (r, cc) == (1, 1) { 1.0 } else { 0.0 };
                assert_eq!(t[(r, cc)], c(want, 0.0));
            }
        }

        let b = Matrix::from_rows(&[vec![c(1.0, 1.0), ZERO, ZERO], vec![ZERO, c(2.0, 0.0), ZERO], vec![ZERO, ZERO, c(0.5, -1.0)]]);
        let lhs = tensor_product(&a, &b).trace();
        let rhs = a.trace() * b.trace();
        assert!((lhs - rhs).norm() < 1e-14);
    }

    #[test]
    fn entropy_examples() {
        let pure = DensityMatrix::pure(&[c(0.6, 0.0), c(0.0, 0.8)]).unwrap();
        assert_abs_diff_eq!(von_neumann_entropy(&pure).unwrap(), 0.0, epsilon = 1e-12);
        let mixed = DensityMatrix::maximally_mixed(2);
        assert_abs_diff_eq!(von_neumann_entropy(&mixed).unwrap(), 1.0, epsilon = 1e-14);
        let r = DensityMatrix::new(Matrix::from_real(&[&[0.5, 0.3], &[0.3, 0.5]])).unwrap();
        // -0.8 log2 0.8 - 0.2 log2 0.2
        assert_abs_diff_eq!(von_neumann_entropy(&r).unwrap(), 0.721_928_094_887_362_3, epsilon = 1e-12);
    }

    #[test]
    fn entropy_rejects_negative_spectrum() {
        assert!(matches!(entropy_of_spectrum(&[1.1, -0.1], 1e-9), Err(Error::NegativeEigenvalue(_))));
    }

    #[test]
    fn binary_entropy_examples() {
        assert_eq!(binary_entropy(0.5).unwrap(), 1.0);
        assert_eq!(binary_entropy(0.0).unwrap(), 0.0);
        assert_eq!(binary_entropy(1.0).unwrap(), 0.0);
        assert_abs_diff_eq!(binary_entropy(0.9).unwrap(), 0.468_995_593_589_281_2, epsilon = 1e-12);
        assert!(matches!(binary_entropy(1.5), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn dephase_examples() {
        let d = DensityMatrix::diagonal(&[0.25, 0.75]).unwrap();
        assert_eq!(dephase(&d), d);
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let plus = DensityMatrix::pure(&[c(s, 0.0), c(s, 0.0)]).unwrap();
        assert!(dephase(&plus).matrix().max_abs_diff(&Matrix::diag(&[0.5, 0.5])) < 1e-15);
    }

    #[test]
    fn density_validation_errors() {
        assert!(DensityMatrix::new(Matrix::diag(&[0.5, 0.6])).is_err());
        assert!(DensityMatrix::new(Matrix::diag(&[1.5, -0.5])).is_err());
        assert!(DensityMatrix::new(Matrix::from_real(&[&[0.5, 0.1], &[0.2, 0.5]])).is_err());
        assert!(DensityMatrix::new(Matrix::zeros(2, 3)).is_err());
        assert!(BipartiteState::new(DensityMatrix::maximally_mixed(6), 2, 2).is_err());
    }

    #[test]
    fn matrix_new_rejects_bad_input() {
        assert!(Matrix::new(2, 2, vec![ZERO; 3]).is_err());
        assert!(matches!(
            Matrix::new(2, 2, vec![ZERO, ZERO, c(f64::NAN, 0.0), ZERO]),
            Err(Error::NonFinite { row: 1, col: 0 })
        ));
    }
}
