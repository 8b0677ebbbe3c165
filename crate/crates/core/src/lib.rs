//! # pairinglab
//!
//! Coherence and entanglement quantities that connect the l1-norm of
//! coherence with the negativity, together with the structure theory of
//! pairing states (states with `N(ρ) = C_l1(ρ)`).
//!
//! | Module | Contents |
//! |--------|----------|
//! | [`linalg`] | dense complex matrices, Jacobi eigensolver, SVD, trace norm, partial transpose, entropies |
//! | [`measures`] | `C_l1`, `C_L`, `C_r`, negativity, `N₀`, `C_l0` |
//! | [`pairing`] | canonical pairing detection, qubit–qudit decomposition, closed-form measures, distillation witnesses |
//! | [`constructions`] | maximally correlated states, generalized-CNOT embedding, the off-diagonal-modulus chain, counterexamples |
//! | [`majorization`] | majorization tests and the trace-norm/l1-norm comparison |
//! | [`randgen`] | seeded generators for states and structured families |
//! | [`cli`] | state files and the `pairinglab` command surface |
//!
//! All logarithms are base 2. Product-basis index convention: `|j k⟩ ↦ j·d_B + k`.
//!
//! ```
//! use pairinglab::constructions::{make_mc_state, MCSpec};
//! use pairinglab::linalg::Matrix;
//! use pairinglab::measures::{c_l1, negativity};
//!
//! let coeffs = Matrix::from_real(&[&[0.5, 0.3], &[0.3, 0.5]]);
//! let spec = MCSpec::new(coeffs, vec![0, 1], vec![0, 1]).unwrap();
//! let rho = make_mc_state(&spec, 2, 2).unwrap();
//! let n = negativity(&rho).unwrap();
//! assert!((n.value - 0.6).abs() < 1e-12);
//! assert!((c_l1(rho.state()) - 0.6).abs() < 1e-12);
//! ```

pub mod cli;
pub mod constructions;
pub mod error;
pub mod linalg;
pub mod majorization;
pub mod measures;
pub mod pairing;
pub mod randgen;

pub use error::{Error, Result};
pub use linalg::{BipartiteState, DensityMatrix, Matrix, C64};
