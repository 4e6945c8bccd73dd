//! Self-check suite run by `qcb verify`.
//!
//! Each check reports its worst deviation against a fixed tolerance. A check
//! that hits a resource cap is reported as failed without stopping the rest.

use std::f64::consts::FRAC_PI_2;
use std::fmt;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::chernoff::{self, DiscriminationTask};
use crate::cloning::{self, CloneSpec};
use crate::error::Result;
use crate::minimize;
use crate::qubit::{BlochQubit, SpectralQubit};
use crate::simulator;

pub const ORACLE_TOL: f64 = 1e-10;
pub const ISOMETRY_TOL: f64 = 1e-12;
pub const PHASED_STATE_TOL: f64 = 1e-13;
pub const HALF_S_TOL: f64 = 1e-6;
pub const MINIMIZER_TOL: f64 = 1e-9;
pub const ASYMPTOTIC_GAP: f64 = 0.2;

/// Up-weights used by the oracle sweep.
pub const ORACLE_UP_WEIGHTS: [f64; 6] = [0.5, 0.6, 0.75, 0.9, 0.95, 1.0];

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    /// Multiplies η in the analytic side of the oracle check. Anything other
    /// than 1 is a deliberately broken model and must make verification fail.
    pub eta_scale: f64,
    pub sandwich_pairs: usize,
    pub minimizer_pairs: usize,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            eta_scale: 1.0,
            sandwich_pairs: 1000,
            minimizer_pairs: 20,
            seed: 0x5eed,
        }
    }
}

#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub max_deviation: f64,
    pub tolerance: f64,
    pub detail: String,
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {:<30} max deviation {:.3e} (tol {:.0e}){}",
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            self.max_deviation,
            self.tolerance,
            if self.detail.is_empty() { String::new() } else { format!("  {}", self.detail) }
        )
    }
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub checks: Vec<CheckOutcome>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

fn outcome(name: &'static str, tolerance: f64, res: Result<(f64, String)>) -> CheckOutcome {
    match res {
        Ok((max_deviation, detail)) => CheckOutcome {
            name,
            passed: max_deviation <= tolerance,
            max_deviation,
            tolerance,
            detail,
        },
        Err(e) => CheckOutcome {
            name,
            passed: false,
            max_deviation: f64::NAN,
            tolerance,
            detail: e.to_string(),
        },
    }
}

/// Uniform point in the Bloch ball; one in five lands on the sphere.
pub fn random_bloch<R: Rng>(rng: &mut R) -> BlochQubit {
    loop {
        let v: [f64; 3] = [rng.gen_range(-1.0..=1.0), rng.gen_range(-1.0..=1.0), rng.gen_range(-1.0..=1.0)];
        let len = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
        if len > 1.0 || len < 1e-9 {
            continue;
        }
        let v = if rng.gen_ratio(1, 5) { v.map(|c| c / len) } else { v };
        if let Ok(q) = BlochQubit::from_array(v) {
            return q;
        }
    }
}

/// Simulated versus closed-form clone over N <= 3, M <= 5.
pub fn check_oracle(eta_scale: f64) -> CheckOutcome {
    let run = || -> Result<(f64, String)> {
        let mut worst = 0.0f64;
        let mut cases = 0;
        for n in 1..=3 {
            for m in n..=5 {
                let spec = CloneSpec::new(n, m)?;
                for a in ORACLE_UP_WEIGHTS {
                    let input = SpectralQubit::from_up_weight(a)?;
                    let report = simulator::oracle_check_with(&spec, &input, |spec, q| {
                        let eta = cloning::shrinking_factor(spec).value() * eta_scale;
                        BlochQubit::from_array(q.bloch().map(|c| c * eta)).unwrap_or(*q)
                    })?;
                    worst = worst.max(report.max_deviation);
                    cases += 1;
                }
            }
        }
        Ok((worst, format!("{cases} cases")))
    };
    outcome("oracle equivalence", ORACLE_TOL, run())
}

/// `Σ_k β_mk² = 1` for N <= 6, M <= 12.
pub fn check_isometry() -> CheckOutcome {
    let run = || -> Result<(f64, String)> {
        let mut worst = 0.0f64;
        for n in 1..=simulator::MAX_SIM_INPUTS {
            for m_out in n..=simulator::MAX_SIM_OUTPUTS {
                let spec = CloneSpec::new(n, m_out)?;
                for m in 0..=n {
                    let mut total = 0.0;
                    for k in 0..=m_out - n {
                        total += simulator::beta_squared(&spec, m, k)?;
                    }
                    worst = worst.max((total - 1.0).abs());
                }
            }
        }
        Ok((worst, String::new()))
    };
    outcome("beta isometry", ISOMETRY_TOL, run())
}

/// The three N = 3, m = 1 phased states against their written-out form.
pub fn check_three_qubit_states() -> CheckOutcome {
    let run = || -> Result<(f64, String)> {
        let s = 1.0 / 3f64.sqrt();
        let omega = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0);
        let one = Complex64::new(1.0, 0.0);
        // amplitudes on ↑↑↓ (0b001), ↑↓↑ (0b010), ↓↑↑ (0b100)
        let expected = [[one, one, one], [one, omega, omega * omega], [one, omega * omega, omega]];
        let mut worst = 0.0f64;
        for (alpha, phases) in expected.iter().enumerate() {
            let state = simulator::build_phased_state(3, 1, alpha)?;
            let mut want = [Complex64::new(0.0, 0.0); 8];
            for (&idx, &ph) in [0b001usize, 0b010, 0b100].iter().zip(phases) {
                want[idx] = ph * s;
            }
            for (got, w) in state.amplitudes().iter().zip(want) {
                worst = worst.max((got - w).norm());
            }
        }
        Ok((worst, String::new()))
    };
    outcome("three-qubit phased states", PHASED_STATE_TOL, run())
}

/// Equal-length perpendicular Bloch vectors minimize at `s = 1/2`.
pub fn check_half_s() -> CheckOutcome {
    let run = || -> Result<(f64, String)> {
        let mut worst = 0.0f64;
        for i in 1..=9 {
            let r = i as f64 / 10.0;
            let rho = BlochQubit::new(0.0, 0.0, r)?;
            let zeta = BlochQubit::new(r * FRAC_PI_2.sin(), 0.0, r * FRAC_PI_2.cos())?;
            let res = chernoff::chernoff_bound(&rho, &zeta);
            worst = worst.max((res.s_star - 0.5).abs());
        }
        Ok((worst, String::new()))
    };
    outcome("s* = 1/2 for perpendicular", HALF_S_TOL, run())
}

/// `F <= Q <= √F` on random pairs; deviation is the worst violation.
pub fn check_sandwich(pairs: usize, seed: u64) -> CheckOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for _ in 0..pairs {
        let (a, b) = (random_bloch(&mut rng), random_bloch(&mut rng));
        let c = chernoff::verify_sandwich(&a, &b);
        worst = worst.max(c.fidelity - c.q).max(c.q - c.sqrt_fidelity);
    }
    outcome(
        "fidelity sandwich",
        chernoff::SANDWICH_SLACK,
        Ok((worst.max(0.0), format!("{pairs} pairs"))),
    )
}

/// Golden-section minimum against a dense grid scan.
pub fn check_minimizer(pairs: usize, seed: u64) -> CheckOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37);
    let mut worst = 0.0f64;
    for _ in 0..pairs {
        let (a, b) = (random_bloch(&mut rng), random_bloch(&mut rng));
        let q = chernoff::chernoff_bound(&a, &b).q_min;
        let scan = minimize::grid_scan(
            |s| chernoff::renyi_overlap(&a, &b, s).expect("s in range"),
            0.0,
            1.0,
            minimize::FINE_POINTS,
        );
        worst = worst.max((q - scan.value).abs());
    }
    outcome("minimizer vs grid scan", MINIMIZER_TOL, Ok((worst, format!("{pairs} pairs"))))
}

/// Worst ordering violation between consecutive curves over the 0.01 r grid.
fn curve_ordering(specs: &[CloneSpec]) -> Result<f64> {
    let mut worst = 0.0f64;
    for i in 0..=100 {
        let r = i as f64 / 100.0;
        let xis = specs
            .iter()
            .map(|s| cloning::cloning_chernoff(s, r).map(|c| c.xi))
            .collect::<Result<Vec<_>>>()?;
        for pair in xis.windows(2) {
            worst = worst.max(pair[0] - pair[1]);
        }
    }
    Ok(worst)
}

/// Chernoff bound grows with M at N = 2.
pub fn check_fig1_trend() -> CheckOutcome {
    let run = || -> Result<(f64, String)> {
        let specs = [CloneSpec::new(2, 5)?, CloneSpec::new(2, 10)?, CloneSpec::new(2, 50_000)?];
        Ok((curve_ordering(&specs)?, "M = 5, 10, 50000".into()))
    };
    outcome("xi non-decreasing in M", 0.0, run())
}

/// Chernoff bound shrinks with N at M = 10^6.
pub fn check_fig2_trend() -> CheckOutcome {
    let run = || -> Result<(f64, String)> {
        // reversed so that "non-increasing in N" reads as non-decreasing
        let specs = [
            CloneSpec::new(10, 1_000_000)?,
            CloneSpec::new(4, 1_000_000)?,
            CloneSpec::new(2, 1_000_000)?,
        ];
        Ok((curve_ordering(&specs)?, "N = 2, 4, 10".into()))
    };
    outcome("xi non-increasing in N", 0.0, run())
}

/// k-copy error exponent stays above ξ and ends within the gap at k = 12.
pub fn check_asymptotic() -> CheckOutcome {
    let run = || -> Result<(f64, String)> {
        let rho = BlochQubit::along_z(0.6)?;
        let zeta = BlochQubit::along_z(0.2)?;
        let xi = chernoff::chernoff_bound(&rho, &zeta).xi;
        let mut rates = Vec::new();
        for k in 1..=12 {
            let p = chernoff::min_error_probability(&DiscriminationTask::new(rho, zeta, k)?)?;
            rates.push(-p.ln() / k as f64);
        }
        let below = rates.iter().map(|r| xi - r).fold(0.0f64, f64::max);
        let rising = rates.windows(2).map(|w| w[1] - w[0]).fold(0.0f64, f64::max);
        let gap = rates[11] - xi;
        let ok = below == 0.0 && rising == 0.0;
        let deviation = if ok { gap } else { f64::INFINITY };
        Ok((deviation, format!("xi = {xi:.6}, rate(k=12) = {:.6}", rates[11])))
    };
    outcome("k-copy exponent approaches xi", ASYMPTOTIC_GAP, run())
}

/// Runs every check.
pub fn run_verify(options: &VerifyOptions) -> VerifyReport {
    VerifyReport {
        checks: vec![
            check_oracle(options.eta_scale),
            check_isometry(),
            check_three_qubit_states(),
            check_half_s(),
            check_sandwich(options.sandwich_pairs, options.seed),
            check_fig1_trend(),
            check_fig2_trend(),
            check_asymptotic(),
            check_minimizer(options.minimizer_pairs, options.seed),
        ],
    }
}
