//! Named states: an entrywise modulus that is not a state, a state with
//! N = C_l1 that is not maximally correlated, and the isotropic family.

use pairinglab::constructions::{named_counterexample, NamedState, COUNTEREXAMPLE_NAMES};
use pairinglab::linalg::hermitian_eig;
use pairinglab::measures::{c_l1, negativity};
use pairinglab::pairing::{detect_canonical_pairing, is_canonical_mc, DEFAULT_PAIRING_TOL};

fn main() {
    for name in COUNTEREXAMPLE_NAMES {
        match named_counterexample(name, &[]).unwrap() {
            NamedState::WithModulus { rho, tau } => {
                let eig = hermitian_eig(&tau).unwrap().eigenvalues;
                println!("{name}: C_l1(rho) = {:.4}, eigenvalues of tau {:.6?}", c_l1(&rho), eig);
            }
            NamedState::Bipartite(bs) => {
                let cert = detect_canonical_pairing(&bs, DEFAULT_PAIRING_TOL).unwrap();
                println!(
                    "{name}: N = {:.4}, C_l1 = {:.4}, canonical pairing {}, canonical MC {}",
                    negativity(&bs).unwrap().value,
                    c_l1(bs.state()),
                    cert.is_some(),
                    is_canonical_mc(&bs, DEFAULT_PAIRING_TOL)
                );
            }
        }
    }

    for p in [0.2, 1.0 / 3.0, 0.6, 1.0] {
        if let NamedState::Bipartite(bs) = named_counterexample("isotropic", &[p]).unwrap() {
            println!("isotropic p = {p:.3}: N = {:.4}, C_l1 = {:.4}", negativity(&bs).unwrap().value, c_l1(bs.state()));
        }
    }
}
