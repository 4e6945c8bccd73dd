//! Acceptance criteria. Each test prints one `[PASS]`/`[FAIL]` line.
//!
//! Run with `cargo test -p cloning-qcb --test acceptance -- --nocapture` to
//! see the report.

use std::f64::consts::PI;
use std::time::{Duration, Instant};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use cloning_qcb::chernoff::{self, DiscriminationTask};
use cloning_qcb::cloning::{self, CloneSpec};
use cloning_qcb::simulator;
use cloning_qcb::sweep::{self, SweepConfig};
use cloning_qcb::{BlochQubit, SpectralQubit};

fn report(name: &str, ok: bool, detail: String) {
    println!("[{}] {name}: {detail}", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "{name}: {detail}");
}

fn within(name: &str, elapsed: Duration, budget: Duration) -> bool {
    let ok = elapsed <= budget;
    if !ok {
        println!("  {name} took {elapsed:?}, budget {budget:?}");
    }
    ok
}

/// Uniform in the ball, with a quarter of the samples pushed to the sphere.
fn random_state(rng: &mut ChaCha8Rng) -> BlochQubit {
    loop {
        let v: [f64; 3] = std::array::from_fn(|_| rng.gen_range(-1.0..=1.0));
        let len = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
        if len > 1.0 || len < 1e-6 {
            continue;
        }
        let v = if rng.gen_bool(0.25) { v.map(|c| c / len) } else { v };
        return BlochQubit::from_array(v).unwrap();
    }
}

/// Independent evaluation of Tr(ρ^s ζ^{1-s}) for the grid-scan oracle.
fn overlap_oracle(r: [f64; 3], p: [f64; 3], s: f64) -> f64 {
    let len = |v: [f64; 3]| (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
    let (rl, pl) = (len(r), len(p));
    let cos = if rl < 1e-14 || pl < 1e-14 {
        1.0
    } else {
        ((r[0] * p[0] + r[1] * p[1] + r[2] * p[2]) / (rl * pl)).clamp(-1.0, 1.0)
    };
    let pw = |x: f64, e: f64| if x <= 0.0 { 0.0 } else { x.powf(e) };
    let (l1, l2) = ((1.0 + rl) / 2.0, (1.0 - rl) / 2.0);
    let (m1, m2) = ((1.0 + pl) / 2.0, (1.0 - pl) / 2.0);
    let (c2, s2) = ((1.0 + cos) / 2.0, (1.0 - cos) / 2.0);
    (pw(l1, s) * pw(m1, 1.0 - s) + pw(l2, s) * pw(m2, 1.0 - s)) * c2
        + (pw(l1, s) * pw(m2, 1.0 - s) + pw(l2, s) * pw(m1, 1.0 - s)) * s2
}

#[test]
fn oracle_equivalence() {
    let start = Instant::now();
    let mut worst = 0.0f64;
    let mut cases = 0;
    for n in 1..=3 {
        for m in n..=5 {
            let spec = CloneSpec::new(n, m).unwrap();
            for a in [0.5, 0.6, 0.75, 0.9, 0.95, 1.0] {
                let input = SpectralQubit::from_up_weight(a).unwrap();
                let mix = simulator::simulate_broadcast(&spec, &input).unwrap();
                let simulated = simulator::reduce_to_single_clone(&mix, 0).unwrap();
                let analytic = cloning::clone_state(&spec, &input.to_bloch());
                for (x, y) in simulated.bloch().iter().zip(analytic.bloch()) {
                    worst = worst.max((x - y).abs());
                }
                cases += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    let ok = worst <= 1e-10 && within("oracle", elapsed, Duration::from_secs(10));
    report(
        "oracle equivalence (N<=3, M<=5)",
        ok,
        format!("{cases} cases, max deviation {worst:.3e} <= 1e-10, {elapsed:.2?}"),
    );
}

#[test]
fn beta_isometry() {
    let start = Instant::now();
    let mut worst = 0.0f64;
    for n in 1..=6 {
        for m_out in n..=12 {
            let spec = CloneSpec::new(n, m_out).unwrap();
            for m in 0..=n {
                let total: f64 = (0..=m_out - n)
                    .map(|k| simulator::beta_coefficient(&spec, m, k).unwrap().powi(2))
                    .sum();
                worst = worst.max((total - 1.0).abs());
            }
        }
    }
    let elapsed = start.elapsed();
    let ok = worst <= 1e-12 && within("isometry", elapsed, Duration::from_secs(1));
    report("isometry sum_k beta^2 = 1", ok, format!("max deviation {worst:.3e} <= 1e-12, {elapsed:.2?}"));
}

#[test]
fn three_qubit_phased_states() {
    let s = 1.0 / 3f64.sqrt();
    let w = Complex64::from_polar(1.0, 2.0 * PI / 3.0);
    let one = Complex64::new(1.0, 0.0);
    // |↑↑↓⟩ = 0b001, |↑↓↑⟩ = 0b010, |↓↑↑⟩ = 0b100
    let written: Vec<[Complex64; 8]> = [[one, one, one], [one, w, w * w], [one, w * w, w]]
        .iter()
        .map(|ph| {
            let mut v = [Complex64::new(0.0, 0.0); 8];
            v[0b001] = ph[0] * s;
            v[0b010] = ph[1] * s;
            v[0b100] = ph[2] * s;
            v
        })
        .collect();
    let built: Vec<_> = (0..3).map(|a| simulator::build_phased_state(3, 1, a).unwrap()).collect();
    let dist = |x: &[Complex64], y: &[Complex64]| x.iter().zip(y).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);

    // set equality: every written state is matched by some built state
    let set_worst = written
        .iter()
        .map(|target| built.iter().map(|b| dist(b.amplitudes(), target)).fold(f64::INFINITY, f64::min))
        .fold(0.0f64, f64::max);
    let label_worst = built
        .iter()
        .zip(&written)
        .map(|(b, t)| dist(b.amplitudes(), t))
        .fold(0.0f64, f64::max);
    report(
        "three-qubit phased states reproduce the written-out family",
        set_worst <= 1e-13 && label_worst <= 1e-13,
        format!("set match {set_worst:.3e}, label-wise {label_worst:.3e} <= 1e-13"),
    );
}

#[test]
fn perpendicular_equal_length_minimizes_at_half() {
    let start = Instant::now();
    let mut worst = 0.0f64;
    for i in 1..=9 {
        let r = i as f64 / 10.0;
        let rho = BlochQubit::new(0.0, 0.0, r).unwrap();
        let zeta = BlochQubit::new(r, 0.0, 0.0).unwrap();
        worst = worst.max((chernoff::chernoff_bound(&rho, &zeta).s_star - 0.5).abs());
    }
    let elapsed = start.elapsed();
    let ok = worst <= 1e-6 && within("s*", elapsed, Duration::from_secs(1));
    report("s* = 1/2 for r = p, theta = pi/2", ok, format!("max |s* - 0.5| = {worst:.3e} <= 1e-6, {elapsed:.2?}"));
}

#[test]
fn fidelity_sandwich_bounds() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    let mut worst = f64::NEG_INFINITY;
    let mut rank_deficient = 0;
    for _ in 0..1000 {
        let (a, b) = (random_state(&mut rng), random_state(&mut rng));
        if a.length() == 1.0 || b.length() == 1.0 {
            rank_deficient += 1;
        }
        let check = chernoff::verify_sandwich(&a, &b);
        assert!(check.holds, "{a:?} {b:?} {check:?}");
        worst = worst.max(check.fidelity - check.q).max(check.q - check.sqrt_fidelity);
    }
    let elapsed = start.elapsed();
    let ok = worst <= 1e-10 && rank_deficient > 0 && within("sandwich", elapsed, Duration::from_secs(5));
    report(
        "F <= Q <= sqrt(F) on 1000 random pairs",
        ok,
        format!("worst violation {worst:.3e} <= 1e-10, {rank_deficient} pairs with a pure state, {elapsed:.2?}"),
    );
}

#[test]
fn fig1_trend_in_m() {
    let rows = sweep::run_fig1_sweep(&SweepConfig::fig1()).unwrap();
    let mut violations = 0;
    let mut zero_ok = true;
    for chunk in rows.chunks(3) {
        assert_eq!([chunk[0].m, chunk[1].m, chunk[2].m], [5, 10, 50_000]);
        if !(chunk[0].xi <= chunk[1].xi && chunk[1].xi <= chunk[2].xi) {
            violations += 1;
        }
        if chunk[0].r == 0.0 {
            zero_ok &= chunk.iter().all(|row| row.xi == 0.0);
        }
    }
    report(
        "N = 2: xi non-decreasing across M = 5, 10, 50000",
        violations == 0 && zero_ok && rows.len() == 303,
        format!("{} r points, {violations} ordering violations, xi(r=0) = 0: {zero_ok}", rows.len() / 3),
    );
}

#[test]
fn fig2_trend_in_n() {
    let rows = sweep::run_fig2_sweep(&SweepConfig::fig2()).unwrap();
    let mut violations = 0;
    for chunk in rows.chunks(3) {
        assert_eq!([chunk[0].n, chunk[1].n, chunk[2].n], [2, 4, 10]);
        if !(chunk[0].xi >= chunk[1].xi && chunk[1].xi >= chunk[2].xi) {
            violations += 1;
        }
    }
    report(
        "M = 10^6: xi non-increasing across N = 2, 4, 10",
        violations == 0,
        format!("{} r points, {violations} ordering violations", rows.len() / 3),
    );
}

#[test]
fn surface_diagonal_and_dominance() {
    let low = sweep::run_fig34_surface(&SweepConfig::surface(0.3)).unwrap();
    let high = sweep::run_fig34_surface(&SweepConfig::surface(0.9)).unwrap();
    assert_eq!(low.len(), 210);
    let diagonal_zero = low.iter().chain(&high).filter(|r| r.n == r.m).all(|r| r.xi == 0.0);
    let mut off = 0;
    let mut dominated = 0;
    for (a, b) in low.iter().zip(&high) {
        assert_eq!((a.n, a.m), (b.n, b.m));
        if a.n != a.m {
            off += 1;
            if b.xi > a.xi {
                dominated += 1;
            }
        }
    }
    report(
        "(N, M) surface: zero diagonal, xi(r=0.9) > xi(r=0.3) off-diagonal",
        diagonal_zero && dominated == off,
        format!("diagonal zero: {diagonal_zero}, strict dominance {dominated}/{off}"),
    );
}

#[test]
fn k_copy_error_exponent_approaches_chernoff() {
    let start = Instant::now();
    let rho = BlochQubit::along_z(0.6).unwrap();
    let zeta = BlochQubit::along_z(0.2).unwrap();
    let xi = chernoff::chernoff_bound(&rho, &zeta).xi;
    let rates: Vec<f64> = (1..=12)
        .map(|k| {
            let p = chernoff::min_error_probability(&DiscriminationTask::new(rho, zeta, k).unwrap()).unwrap();
            -p.ln() / k as f64
        })
        .collect();
    let elapsed = start.elapsed();
    let decreasing = rates.windows(2).all(|w| w[1] <= w[0]);
    let above = rates.iter().all(|&r| r >= xi);
    let gap = rates[11] - xi;
    let ok = decreasing && above && gap <= 0.2 && within("k-copy", elapsed, Duration::from_secs(30));
    report(
        "-ln P_min^(k)/k approaches xi from above",
        ok,
        format!(
            "xi = {xi:.6}, rate(1) = {:.6}, rate(12) = {:.6}, gap {gap:.4} <= 0.2, monotone {decreasing}, {elapsed:.2?}",
            rates[0], rates[11]
        ),
    );
}

#[test]
fn minimizer_matches_dense_grid() {
    let mut rng = ChaCha8Rng::seed_from_u64(200);
    let pairs: Vec<_> = (0..200).map(|_| (random_state(&mut rng), random_state(&mut rng))).collect();
    let deviations: Vec<f64> = pairs
        .par_iter()
        .map(|(a, b)| {
            let q = chernoff::chernoff_bound(a, b).q_min;
            let (r, p) = (a.bloch(), b.bloch());
            let scan = (0..=1_000_000)
                .map(|i| overlap_oracle(r, p, i as f64 * 1e-6))
                .fold(f64::INFINITY, f64::min);
            (q - scan).abs()
        })
        .collect();
    let worst = deviations.iter().cloned().fold(0.0f64, f64::max);
    report(
        "golden-section q_min vs 10^6-point grid on 200 pairs",
        worst <= 1e-9,
        format!("max |q_min - grid| = {worst:.3e} <= 1e-9"),
    );
}
