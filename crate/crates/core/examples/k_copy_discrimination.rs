//! Exact error probability with k copies against the Chernoff rate.
//!
//! cargo run --release --example k_copy_discrimination

use cloning_qcb::chernoff::{self, DiscriminationTask};
use cloning_qcb::BlochQubit;

fn main() -> cloning_qcb::Result<()> {
    let rho = BlochQubit::along_z(0.6)?;
    let zeta = BlochQubit::along_z(0.2)?;
    let xi = chernoff::chernoff_bound(&rho, &zeta).xi;
    println!("xi = {xi:.6}");
    println!(" k   P_err        -ln(P)/k");
    for k in 1..=12 {
        let p = chernoff::min_error_probability(&DiscriminationTask::new(rho, zeta, k)?)?;
        println!("{k:>2}   {p:.4e}   {:.6}", -p.ln() / k as f64);
    }

    // pure states have a closed form in the overlap
    let p = chernoff::min_error_pure(0.25, 10)?;
    println!("pure states, |<a|b>|^2 = 0.25, 10 copies: {p:.4e}");
    Ok(())
}
