//! The three standard sweeps, written as CSV into a temp directory.
//!
//! cargo run --release --example figure_sweeps

use cloning_qcb::sweep::{self, SweepConfig};

fn main() -> cloning_qcb::Result<()> {
    let dir = std::env::temp_dir().join("qcb-sweeps");
    std::fs::create_dir_all(&dir).map_err(|e| cloning_qcb::Error::Config(e.to_string()))?;

    let runs = [
        ("fixed_n.csv", sweep::run_fig1_sweep(&SweepConfig::fig1())?),
        ("fixed_m.csv", sweep::run_fig2_sweep(&SweepConfig::fig2())?),
        ("surface.csv", sweep::run_fig34_surface(&SweepConfig::surface(0.3))?),
    ];
    for (name, rows) in &runs {
        let path = dir.join(name);
        let file = std::fs::File::create(&path).map_err(|e| cloning_qcb::Error::Config(e.to_string()))?;
        sweep::write_csv(rows, sweep::DEFAULT_PRECISION, file)?;
        println!("{:>5} rows -> {}", rows.len(), path.display());
    }

    // more copies kept by the cloner means less to distinguish
    let fixed_n = &runs[0].1;
    for row in fixed_n.iter().filter(|row| (row.r - 0.8).abs() < 1e-9) {
        println!("r = 0.8, M = {:>6}: xi = {:.6e}", row.m, row.xi);
    }
    Ok(())
}
