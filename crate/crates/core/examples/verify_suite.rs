//! Self-checks in library form, including the corrupted-shrinking control.
//!
//! cargo run --release --example verify_suite

use cloning_qcb::verify::{self, VerifyOptions};

fn main() {
    let report = verify::run_verify(&VerifyOptions::default());
    for outcome in &report.checks {
        println!("{outcome}");
    }
    println!("all passed: {}", report.all_passed());

    let broken = verify::check_oracle(1.01);
    println!("with eta scaled by 1.01: {broken}");
}
