//! The generalized CNOT maps a d-level state to a d x d pairing state whose
//! negativity equals the input's l1 coherence.

use pairinglab::constructions::cnot_embed;
use pairinglab::measures::{c_l1, negativity};
use pairinglab::pairing::{detect_canonical_pairing, DEFAULT_PAIRING_TOL};
use pairinglab::randgen::{random_state, RngState};

fn main() {
    let mut rng = RngState::new(3);
    for d in 2..=5 {
        let rho = random_state(d, &mut rng);
        let out = cnot_embed(&rho);
        let cert = detect_canonical_pairing(&out, DEFAULT_PAIRING_TOL).unwrap().unwrap();
        println!(
            "d = {d}: C_l1(rho) = {:.8}, N(out) = {:.8}, pairing number {}",
            c_l1(&rho),
            negativity(&out).unwrap().value,
            cert.pairing_number
        );
    }
}
