//! Local projections onto one transposition's subspace and the resulting
//! lower bound on distillable entanglement for a qutrit pairing state.

use pairinglab::pairing::{
    detect_canonical_pairing, distill_witness, distillable_lower_bound, DEFAULT_PAIRING_TOL,
};
use pairinglab::randgen::{pairing_capacity, random_canonical_pairing, RngState};

fn main() {
    let mut rng = RngState::new(17);
    let bs = random_canonical_pairing(3, 3, pairing_capacity(3, 3), &mut rng).unwrap();
    let cert = detect_canonical_pairing(&bs, DEFAULT_PAIRING_TOL).unwrap().unwrap();
    println!("pairing number {}", cert.pairing_number);

    for (i, t) in cert.transpositions.iter().enumerate() {
        let w = distill_witness(&bs, &cert, i).unwrap();
        println!("  {:?}: weight {:.4}, block negativity {:.4}", t, w.weight, w.block_negativity);
    }

    for pairs in [vec![[0, 1]], vec![[0, 2]], vec![[1, 2]]] {
        let bound = distillable_lower_bound(&bs, &cert, &pairs, 1e-12).unwrap();
        println!("A pairs {pairs:?}: E_D >= {bound:.6}");
    }
}
