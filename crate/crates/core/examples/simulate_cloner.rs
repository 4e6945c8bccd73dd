//! Run the cloning isometry on phased symmetric states and compare the
//! reduced clone with the closed-form shrinking.
//!
//! cargo run --example simulate_cloner

use cloning_qcb::simulator;
use cloning_qcb::{CloneSpec, SpectralQubit};

fn main() -> cloning_qcb::Result<()> {
    let n3 = simulator::build_phased_state(3, 1, 1)?;
    println!("|2 up, 1 down>_1 amplitudes:");
    for (index, amp) in n3.amplitudes().iter().enumerate().filter(|(_, a)| a.norm() > 0.0) {
        println!("  |{index:03b}>  {:+.4} {:+.4}i", amp.re, amp.im);
    }

    let input = SpectralQubit::new(0.9, 0.1)?;
    for (n, m) in [(1, 2), (2, 3), (2, 5), (3, 6), (4, 8)] {
        let spec = CloneSpec::new(n, m)?;
        let report = simulator::oracle_check(&spec, &input)?;
        println!(
            "{n} -> {m}: simulated z = {:.12}, analytic z = {:.12}, deviation {:.1e}",
            report.simulated.bloch()[2],
            report.analytic.bloch()[2],
            report.max_deviation
        );
    }
    Ok(())
}
