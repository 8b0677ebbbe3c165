//! Build the chain of states that replaces every off-diagonal entry by its
//! modulus using incoherent operations, for |+> and a real qutrit state.

use pairinglab::constructions::{appendix_a_chain, DEFAULT_CHAIN_CAP};
use pairinglab::linalg::{DensityMatrix, Matrix};

fn show(label: &str, rho: &DensityMatrix, l: usize) {
    let chain = appendix_a_chain(rho, l, DEFAULT_CHAIN_CAP).expect("chain fits the cap");
    println!("{label}: d = {}, L = {}, K = {}", chain.d, chain.l, chain.k);
    println!("  dims rho2/rho3/rho4 = {}/{}/{}", chain.rho2.dim(), chain.rho3.dim(), chain.rho4.dim());
    println!("  multiplicities {:?}, tr M = {:.6}", chain.m_multiplicities, chain.checks.trace_m);
    println!("  checks pass: {} (multiset error {:.1e})", chain.checks.all_pass(), chain.checks.multiset_error);
}

fn main() {
    let plus = DensityMatrix::new(Matrix::from_real(&[&[0.5, 0.5], &[0.5, 0.5]])).unwrap();
    show("|+>", &plus, 1);

    let real = Matrix::from_real(&[&[0.4, -0.1, 0.2], &[-0.1, 0.3, 0.05], &[0.2, 0.05, 0.3]]);
    show("real qutrit", &DensityMatrix::new(real).unwrap(), 2);
}
