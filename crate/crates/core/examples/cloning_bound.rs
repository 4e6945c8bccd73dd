//! How well an N -> M clone can be told apart from its input.
//!
//! cargo run --example cloning_bound -- 2 10 0.9

use cloning_qcb::{cloning_chernoff, shrinking_factor, CloneSpec};

fn main() -> cloning_qcb::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let n = args.first().and_then(|s| s.parse().ok()).unwrap_or(2);
    let m = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(10);
    let r = args.get(2).and_then(|s| s.parse().ok()).unwrap_or(0.9);

    let spec = CloneSpec::new(n, m)?;
    let eta = shrinking_factor(&spec).value();
    let res = cloning_chernoff(&spec, r)?;
    println!("N = {n}, M = {m}, r = {r}");
    println!("shrinking factor {eta:.6}, clone length {:.6}", eta * r);
    println!("s* = {:.6}  Q_min = {:.9}  xi = {:.9}", res.s_star, res.q_min, res.xi);
    Ok(())
}
