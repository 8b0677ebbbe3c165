//! Run every randomized verification suite with a fixed seed.

use pairinglab::cli::{run_suite, SUITES};

fn main() {
    for suite in SUITES {
        let dims = if suite == "lowerbound" { Some([2, 4]) } else { None };
        let report = run_suite(suite, 200, 42, dims).expect("feasible suite");
        let worst = report.worst_gap.iter().map(|(k, v)| format!("{k}={v:.1e}")).collect::<Vec<_>>().join(", ");
        println!("{:<18} {} ({} trials) {worst}", suite, if report.passed() { "PASS" } else { "FAIL" }, report.trials);
    }
}
