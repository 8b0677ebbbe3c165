//! Seeded generators for random states and structured families.
//!
//! Randomness comes from ChaCha20, a counter-based stream cipher generator.
//! A `(seed, stream)` pair names an independent stream, so concurrent trials
//! draw from `RngState::new(seed).split(trial)` without coordinating.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::linalg::{BipartiteState, DensityMatrix, Matrix, C64, ZERO};

/// Generator name recorded in reports.
pub const ALGORITHM: &str = "chacha20";

#[derive(Clone, Debug)]
pub struct RngState {
    seed: u64,
    stream: u64,
    rng: ChaCha20Rng,
}

impl RngState {
    pub fn new(seed: u64) -> Self {
        Self::with_stream(seed, 0)
    }

    pub fn with_stream(seed: u64, stream: u64) -> Self {
        let mut rng = ChaCha20Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        Self { seed, stream, rng }
    }

    /// Independent stream under the same seed.
    pub fn split(&self, stream: u64) -> Self {
        Self::with_stream(self.seed, stream)
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn stream(&self) -> u64 {
        self.stream
    }

    pub fn algorithm(&self) -> &'static str {
        ALGORITHM
    }

    pub fn uniform(&mut self) -> f64 {
        self.rng.gen()
    }

    pub fn below(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    /// Inclusive range.
    pub fn range(&mut self, lo: usize, hi: usize) -> usize {
        self.rng.gen_range(lo..=hi)
    }

    pub fn normal(&mut self) -> f64 {
        self.rng.sample(StandardNormal)
    }

    /// Standard complex Gaussian, `E|z|² = 1`.
    pub fn complex_normal(&mut self) -> C64 {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        C64::new(s * self.normal(), s * self.normal())
    }

    pub fn phase(&mut self) -> C64 {
        C64::from_polar(1.0, std::f64::consts::TAU * self.uniform())
    }

    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        items.shuffle(&mut self.rng);
    }
}

/// Haar-random unit vector in `C^d`.
pub fn haar_random_pure(d: usize, rng: &mut RngState) -> Vec<C64> {
    loop {
        let v: Vec<C64> = (0..d).map(|_| rng.complex_normal()).collect();
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm > 1e-300 {
            return v.into_iter().map(|z| z / norm).collect();
        }
    }
}

/// `d × cols` matrix of independent standard complex Gaussians.
pub fn random_complex_matrix(rows: usize, cols: usize, rng: &mut RngState) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| rng.complex_normal())
}

/// `GG† / tr(GG†)` with `G` a `d × rank` complex Ginibre matrix.
pub fn ginibre_density(d: usize, rank: usize, rng: &mut RngState) -> Result<DensityMatrix> {
    if rank == 0 || rank > d {
        return Err(Error::InvalidRank { rank, dim: d });
    }
    let g = random_complex_matrix(d, rank, rng);
    let w = &g * &g.adjoint();
    let tr = w.trace().re;
    let mut m = w.scale_real(1.0 / tr);
    for i in 0..d {
        m[(i, i)].im = 0.0;
    }
    DensityMatrix::new(m)
}

/// Ginibre state with rank drawn uniformly from `1..=d`.
pub fn random_state(d: usize, rng: &mut RngState) -> DensityMatrix {
    let rank = rng.range(1, d);
    ginibre_density(d, rank, rng).expect("rank within bounds")
}

pub fn random_bipartite_state(d_a: usize, d_b: usize, rng: &mut RngState) -> BipartiteState {
    BipartiteState::new(random_state(d_a * d_b, rng), d_a, d_b).expect("dimensions agree")
}

/// Haar-random bipartite pure state, as a vector and as a state.
pub fn random_pure_bipartite(d_a: usize, d_b: usize, rng: &mut RngState) -> (Vec<C64>, BipartiteState) {
    let psi = haar_random_pure(d_a * d_b, rng);
    let bs = BipartiteState::new(DensityMatrix::pure(&psi).expect("unit vector"), d_a, d_b).expect("dimensions agree");
    (psi, bs)
}

/// Phase times permutation matrix.
pub fn random_monomial_unitary(d: usize, rng: &mut RngState) -> Matrix {
    let mut perm: Vec<usize> = (0..d).collect();
    rng.shuffle(&mut perm);
    let mut u = Matrix::zeros(d, d);
    for (r, &c) in perm.iter().enumerate() {
        u[(r, c)] = rng.phase();
    }
    u
}

/// Uniform point on the probability simplex with `n` vertices.
pub fn flat_simplex(n: usize, rng: &mut RngState) -> Vec<f64> {
    let x: Vec<f64> = (0..n).map(|_| -(1.0 - rng.uniform()).ln()).collect();
    let s: f64 = x.iter().sum();
    x.into_iter().map(|v| v / s).collect()
}

/// Square grid `rows × cols` hosting one maximally correlated group whose
/// support is `(rows[r], cols[r])`.
#[derive(Clone, Debug)]
struct Group {
    rows: Vec<usize>,
    cols: Vec<usize>,
}

impl Group {
    fn size(&self) -> usize {
        self.rows.len()
    }

    fn capacity(&self) -> usize {
        self.size() * (self.size() - 1) / 2
    }
}

/// Tiles the `d_A × d_B` label grid with pairwise-disjoint square grids.
fn group_layout(d_a: usize, d_b: usize) -> Vec<Group> {
    let m = d_a.min(d_b);
    let big = d_a.max(d_b);
    if m < 2 {
        return Vec::new();
    }
    let mut sizes: Vec<(usize, usize)> = (0..big / m).map(|g| (g * m, m)).collect();
    if big % m >= 2 {
        sizes.push(((big / m) * m, big % m));
    }
    sizes
        .into_iter()
        .map(|(start, len)| {
            let long: Vec<usize> = (start..start + len).collect();
            let short: Vec<usize> = (0..len).collect();
            if d_a <= d_b {
                Group { rows: short, cols: long }
            } else {
                Group { rows: long, cols: short }
            }
        })
        .collect()
}

/// Largest pairing number [`random_canonical_pairing`] can realize.
pub fn pairing_capacity(d_a: usize, d_b: usize) -> usize {
    group_layout(d_a, d_b).iter().map(Group::capacity).sum()
}

/// Random canonical pairing state with exactly `n_pairs` transpositions.
///
/// Includes a random diagonal part.
pub fn random_canonical_pairing(d_a: usize, d_b: usize, n_pairs: usize, rng: &mut RngState) -> Result<BipartiteState> {
    random_canonical_pairing_with(d_a, d_b, n_pairs, true, rng)
}

/// As [`random_canonical_pairing`]; with `include_diagonal = false` only the
/// maximally correlated groups carry weight (unless `n_pairs = 0`).
pub fn random_canonical_pairing_with(
    d_a: usize,
    d_b: usize,
    n_pairs: usize,
    include_diagonal: bool,
    rng: &mut RngState,
) -> Result<BipartiteState> {
    if d_a == 0 || d_b == 0 {
        return Err(Error::Infeasible("empty subsystem".into()));
    }
    let groups = group_layout(d_a, d_b);
    let capacity: usize = groups.iter().map(Group::capacity).sum();
    if n_pairs > capacity {
        return Err(Error::Infeasible(format!(
            "{n_pairs} pairs requested, at most {capacity} fit in {d_a}x{d_b}"
        )));
    }

    // Choose which within-group pairs carry a coherence.
    let mut slots: Vec<(usize, usize, usize)> = Vec::with_capacity(capacity);
    for (g, group) in groups.iter().enumerate() {
        for r in 0..group.size() {
            for s in r + 1..group.size() {
                slots.push((g, r, s));
            }
        }
    }
    rng.shuffle(&mut slots);
    let mut edges: Vec<Vec<(usize, usize)>> = vec![Vec::new(); groups.len()];
    for &(g, r, s) in slots.iter().take(n_pairs) {
        edges[g].push((r, s));
    }

    let dim = d_a * d_b;
    let mut occupied = vec![false; dim];
    let mut parts: Vec<Matrix> = Vec::new();
    for (group, group_edges) in groups.iter().zip(&edges) {
        if group_edges.is_empty() {
            continue;
        }
        for &j in &group.rows {
            for &k in &group.cols {
                occupied[j * d_b + k] = true;
            }
        }
        let coeffs = group_coefficients(group.size(), group_edges, rng);
        let support: Vec<usize> = (0..group.size()).map(|r| group.rows[r] * d_b + group.cols[r]).collect();
        let mut m = Matrix::zeros(dim, dim);
        for r in 0..group.size() {
            for s in 0..group.size() {
                m[(support[r], support[s])] = coeffs[(r, s)];
            }
        }
        parts.push(m);
    }

    let free: Vec<usize> = (0..dim).filter(|&i| !occupied[i]).collect();
    if (include_diagonal || parts.is_empty()) && !free.is_empty() {
        let mut chosen: Vec<usize> = free.iter().copied().filter(|_| rng.uniform() < 0.5).collect();
        if chosen.is_empty() {
            chosen.push(free[rng.below(free.len())]);
        }
        let p = flat_simplex(chosen.len(), rng);
        let mut m = Matrix::zeros(dim, dim);
        for (&i, &w) in chosen.iter().zip(&p) {
            m[(i, i)] = C64::new(w, 0.0);
        }
        parts.push(m);
    }

    let weights = flat_simplex(parts.len(), rng);
    let mut rho = Matrix::zeros(dim, dim);
    for (part, w) in parts.iter().zip(weights) {
        rho = &rho + &part.scale_real(w);
    }

    // Random relabeling of each subsystem keeps the canonical structure.
    let mut perm_a: Vec<usize> = (0..d_a).collect();
    let mut perm_b: Vec<usize> = (0..d_b).collect();
    rng.shuffle(&mut perm_a);
    rng.shuffle(&mut perm_b);
    let map = |i: usize| perm_a[i / d_b] * d_b + perm_b[i % d_b];
    let mut out = Matrix::zeros(dim, dim);
    for r in 0..dim {
        for c in 0..dim {
            out[(map(r), map(c))] = rho[(r, c)];
        }
    }
    BipartiteState::from_matrix(out, d_a, d_b)
}

/// Unit-trace PSD `m × m` coefficient matrix whose off-diagonal support is
/// exactly `edges` (symmetrized).
fn group_coefficients(m: usize, edges: &[(usize, usize)], rng: &mut RngState) -> Matrix {
    let c = if edges.len() == m * (m - 1) / 2 {
        let rank = rng.range(1, m);
        ginibre_density(m, rank, rng).expect("rank within bounds").into_matrix()
    } else {
        let mut c = Matrix::zeros(m, m);
        for &(r, s) in edges {
            let v = [rng.complex_normal(), rng.complex_normal()];
            let idx = [r, s];
            for a in 0..2 {
                for b in 0..2 {
                    c[(idx[a], idx[b])] += v[a] * v[b].conj();
                }
            }
        }
        let tr = c.trace().re;
        c.scale_real(1.0 / tr)
    };
    let mut c = c;
    for i in 0..m {
        c[(i, i)].im = 0.0;
        if c[(i, i)].re == 0.0 {
            c[(i, i)] = ZERO;
        }
    }
    c
}
