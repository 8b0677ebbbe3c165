//! Certify a canonical pairing state and split a qubit-qudit one into its
//! maximally correlated blocks.

use pairinglab::constructions::{make_mc_state, MCSpec};
use pairinglab::linalg::Matrix;
use pairinglab::measures::{c_l1, negativity};
use pairinglab::pairing::{detect_canonical_pairing, pairing_measures, qubit_qudit_decompose, DEFAULT_PAIRING_TOL};
use pairinglab::randgen::{random_canonical_pairing, random_bipartite_state, RngState};

fn main() {
    let spec = MCSpec::new(Matrix::from_real(&[&[0.5, 0.3], &[0.3, 0.5]]), vec![0, 1], vec![0, 1]).unwrap();
    let mc = make_mc_state(&spec, 2, 2).unwrap();
    let cert = detect_canonical_pairing(&mc, DEFAULT_PAIRING_TOL).unwrap().expect("MC state is canonical");
    println!("MC state: transpositions {:?}, pairing number {}", cert.transpositions, cert.pairing_number);

    let dec = qubit_qudit_decompose(&mc).unwrap();
    let m = pairing_measures(&dec).unwrap();
    println!("  E_D = C_D = {:.10}", m.e_d);
    println!("  E_C = C_C = {:.10}", m.e_c);
    println!("  E_PPT     = {:.10}", m.e_ppt);

    let mut rng = RngState::new(5);
    let bs = random_canonical_pairing(2, 4, 2, &mut rng).unwrap();
    let dec = qubit_qudit_decompose(&bs).unwrap();
    println!("random 2x4 pairing state: p0 = {:.4}, blocks:", dec.p0);
    for b in &dec.blocks {
        println!("  weight {:.4} on columns {:?}", b.weight, b.columns);
    }
    println!("  N = {:.6}, C_l1 = {:.6}", negativity(&bs).unwrap().value, c_l1(bs.state()));

    let generic = random_bipartite_state(2, 2, &mut rng);
    let found = detect_canonical_pairing(&generic, DEFAULT_PAIRING_TOL).unwrap();
    println!("generic full-rank state certified: {}", found.is_some());
}
