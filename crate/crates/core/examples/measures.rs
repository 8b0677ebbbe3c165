//! Every coherence and entanglement quantity for a two-qubit state, plus a
//! random two-qutrit state.

use pairinglab::constructions::bell_vector;
use pairinglab::linalg::{BipartiteState, DensityMatrix};
use pairinglab::measures::bipartite_report;
use pairinglab::randgen::{random_bipartite_state, RngState};

fn print(label: &str, bs: &BipartiteState) {
    let report = bipartite_report(bs, None).expect("valid state");
    println!("{label}");
    for (name, entry) in &report.entries {
        println!("  {name:<5} = {:.6}   ({})", entry.value, entry.formula);
    }
}

fn main() {
    let bell = DensityMatrix::pure(&bell_vector()).unwrap();
    print("Bell state", &BipartiteState::new(bell, 2, 2).unwrap());

    let rho = random_bipartite_state(3, 3, &mut RngState::new(1));
    print("random 3x3 state (seed 1)", &rho);
}
