//! Chernoff bound, fidelity and trace distance for a pair of qubits.
//!
//! cargo run --example chernoff_pair

use cloning_qcb::chernoff::{self, DiscriminationTask};
use cloning_qcb::qubit::{self, BlochQubit};

fn main() -> cloning_qcb::Result<()> {
    let rho = BlochQubit::new(0.0, 0.0, 0.6)?;
    let zeta = BlochQubit::new(0.3, 0.0, 0.1)?;

    let res = chernoff::chernoff_bound(&rho, &zeta);
    let check = chernoff::verify_sandwich(&rho, &zeta);
    let diff = rho.to_operator().sub(&zeta.to_operator())?;

    println!("fidelity        {:.6}", qubit::fidelity(&rho, &zeta));
    println!("trace distance  {:.6}", 0.5 * qubit::trace_norm(&diff)?);
    println!("s*              {:.6}", res.s_star);
    println!("Q_min           {:.6}", res.q_min);
    println!("xi              {:.6}", res.xi);
    println!("F <= Q <= sqrt F: {}", check.holds);

    // error with k copies falls roughly like exp(-k xi)
    for k in [1, 2, 4, 6] {
        let p = chernoff::min_error_probability(&DiscriminationTask::new(rho, zeta, k)?)?;
        println!("k = {k}: P_err = {p:.3e}, -ln(P)/k = {:.4}", -p.ln() / k as f64);
    }
    Ok(())
}
