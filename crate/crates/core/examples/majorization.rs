//! Squared entries, column norms and Gram eigenvalues of a matrix form a
//! majorization chain; the trace norm meets the entrywise l1 norm exactly
//! for monomial matrices.

use pairinglab::linalg::{Matrix, C64};
use pairinglab::majorization::{trace_vs_l1, uvw_triple};
use pairinglab::randgen::{random_complex_matrix, RngState};

fn main() {
    let x = random_complex_matrix(3, 3, &mut RngState::new(9));
    let t = uvw_triple(&x).unwrap();
    println!("u = {:.4?}", t.u);
    println!("v = {:.4?}", t.v);
    println!("w = {:.4?}", t.w);
    println!("u < v < w: {}", t.holds());

    let monomial = Matrix::from_rows(&[
        vec![C64::new(0.0, 0.0), C64::new(2.0, 0.0)],
        vec![C64::new(0.0, 3.0), C64::new(0.0, 0.0)],
    ]);
    for (label, m) in [("random", &x), ("monomial", &monomial)] {
        let c = trace_vs_l1(m, 1e-12).unwrap();
        println!("{label}: trace norm {:.6}, l1 norm {:.6}, gap {:.2e}", c.trace_norm, c.l1_norm, c.gap);
    }
}
