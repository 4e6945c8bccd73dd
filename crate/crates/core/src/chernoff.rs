//! Quantum Chernoff bound between two qubit states.
//!
//! The Rényi overlap `Q_s = Tr(ρ^s ζ^{1-s})` is evaluated in closed form from
//! the two spectra and the angle between the Bloch vectors, then minimized
//! over `s ∈ [0, 1]`. Zero eigenvalues follow the support-projector
//! convention: `0^s = 0` for every `s ∈ [0, 1]`, including `s = 0`.

use crate::error::{Error, Result};
use crate::linalg::HermitianOperator;
use crate::minimize::{self, UnitMinimum};
use crate::qubit::{self, BlochQubit};

/// Bloch vectors shorter than this have no direction; the angle is taken as 0.
const DIRECTION_TOL: f64 = 1e-14;

/// Eigenvalues at or below this count as zero in the matrix-power route.
const SUPPORT_TOL: f64 = 1e-15;

/// Slack used when checking `F <= Q <= √F`.
pub const SANDWICH_SLACK: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChernoffResult {
    pub s_star: f64,
    pub q_min: f64,
    pub xi: f64,
}

impl ChernoffResult {
    /// Result for indistinguishable states.
    pub const IDENTICAL: ChernoffResult = ChernoffResult {
        s_star: 0.5,
        q_min: 1.0,
        xi: 0.0,
    };

    pub(crate) fn from_minimum(m: UnitMinimum) -> Self {
        let q_min = m.value.clamp(0.0, 1.0);
        let xi = if q_min > 0.0 { (-q_min.ln()).max(0.0) } else { f64::INFINITY };
        ChernoffResult {
            s_star: m.x,
            q_min,
            xi,
        }
    }
}

/// A pair of candidate states and the number of copies handed to the observer.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiscriminationTask {
    pub rho: BlochQubit,
    pub zeta: BlochQubit,
    pub k: usize,
}

impl DiscriminationTask {
    pub fn new(rho: BlochQubit, zeta: BlochQubit, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::out_of_range("k", 0.0, "[1, inf)"));
        }
        Ok(DiscriminationTask { rho, zeta, k })
    }
}

/// `x^e` with `0^e = 0` for all `e`, matching projection onto the support.
#[inline]
pub fn support_pow(x: f64, e: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else {
        x.powf(e)
    }
}

/// `(cos²(θ/2), sin²(θ/2))` for the angle between two Bloch vectors.
pub fn half_angle_weights(rho: &BlochQubit, zeta: &BlochQubit) -> (f64, f64) {
    let (r, p) = (rho.length(), zeta.length());
    if r < DIRECTION_TOL || p < DIRECTION_TOL {
        return (1.0, 0.0);
    }
    let cos_theta = (qubit::dot(rho.bloch(), zeta.bloch()) / (r * p)).clamp(-1.0, 1.0);
    (0.5 * (1.0 + cos_theta), 0.5 * (1.0 - cos_theta))
}

/// The four spectral pairings entering `Q_s`, as `(weight, x, y)` with each
/// term contributing `weight · x^s · y^{1-s}`.
fn overlap_terms(rho: &BlochQubit, zeta: &BlochQubit) -> [(f64, f64, f64); 4] {
    let (lam, lam_t) = rho.eigenvalues();
    let (mu, mu_t) = zeta.eigenvalues();
    let (cos2, sin2) = half_angle_weights(rho, zeta);
    [
        (cos2, lam, mu),
        (cos2, lam_t, mu_t),
        (sin2, lam, mu_t),
        (sin2, lam_t, mu),
    ]
}

fn eval_terms(terms: &[(f64, f64, f64)], s: f64) -> f64 {
    terms
        .iter()
        .filter(|(w, _, _)| *w != 0.0)
        .map(|&(w, x, y)| w * support_pow(x, s) * support_pow(y, 1.0 - s))
        .sum()
}

fn eval_terms_derivative(terms: &[(f64, f64, f64)], s: f64) -> f64 {
    terms
        .iter()
        .filter(|&&(w, x, y)| w != 0.0 && x > 0.0 && y > 0.0)
        .map(|&(w, x, y)| w * x.powf(s) * y.powf(1.0 - s) * (x / y).ln())
        .sum()
}

fn check_s(s: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&s) {
        return Err(Error::out_of_range("s", s, "[0, 1]"));
    }
    Ok(())
}

/// `Q_s(ρ, ζ) = Tr(ρ^s ζ^{1-s})` from the spectra and the Bloch angle.
pub fn renyi_overlap(rho: &BlochQubit, zeta: &BlochQubit, s: f64) -> Result<f64> {
    check_s(s)?;
    Ok(eval_terms(&overlap_terms(rho, zeta), s))
}

/// `dQ_s/ds`; `Q_s` is a positive combination of exponentials in `s`, so this
/// is non-decreasing.
pub fn renyi_overlap_derivative(rho: &BlochQubit, zeta: &BlochQubit, s: f64) -> Result<f64> {
    check_s(s)?;
    Ok(eval_terms_derivative(&overlap_terms(rho, zeta), s))
}

/// `Tr(ρ^s ζ^{1-s})` through explicit matrix powers of the 2x2 operators.
pub fn renyi_overlap_matrix(rho: &BlochQubit, zeta: &BlochQubit, s: f64) -> Result<f64> {
    check_s(s)?;
    let power = |state: &BlochQubit, e: f64| -> Result<HermitianOperator> {
        Ok(state
            .to_operator()
            .eigen()?
            .map_spectrum(|l| if l <= SUPPORT_TOL { 0.0 } else { l.powf(e) }))
    };
    let a = power(rho, s)?;
    let b = power(zeta, 1.0 - s)?;
    let prod = a.matmul(&b)?;
    Ok(prod[0].re + prod[3].re)
}

/// Minimizes `Q_s` over `[0, 1]`.
///
/// Constant `Q_s` (identical states, or orthogonal pure states) reports
/// `s_star = 0.5`.
pub fn chernoff_bound(rho: &BlochQubit, zeta: &BlochQubit) -> ChernoffResult {
    if rho == zeta {
        return ChernoffResult::IDENTICAL;
    }
    let terms = overlap_terms(rho, zeta);
    let f = |s: f64| eval_terms(&terms, s);
    let df = |s: f64| eval_terms_derivative(&terms, s);
    ChernoffResult::from_minimum(minimize::minimize_unit_interval(f, Some(&df)))
}

/// `P_min^{(k)} = (1 - ||ρ^{⊗k} - ζ^{⊗k}||_1 / 2) / 2` via a dense
/// eigendecomposition of the `2^k` difference operator.
pub fn min_error_probability(task: &DiscriminationTask) -> Result<f64> {
    let diff = qubit::tensor_power_difference(&task.rho, &task.zeta, task.k)?;
    let norm = diff.trace_norm()?;
    Ok((0.5 * (1.0 - 0.5 * norm)).clamp(0.0, 0.5))
}

/// Minimal error probability for two pure states with `|⟨Φ|Ψ⟩|² = overlap_sq`.
pub fn min_error_pure(overlap_sq: f64, k: usize) -> Result<f64> {
    if !(0.0..=1.0).contains(&overlap_sq) {
        return Err(Error::out_of_range("overlap_sq", overlap_sq, "[0, 1]"));
    }
    if k == 0 {
        return Err(Error::out_of_range("k", 0.0, "[1, inf)"));
    }
    let power = overlap_sq.powi(k.min(i32::MAX as usize) as i32);
    Ok(0.5 * (1.0 - (1.0 - power).max(0.0).sqrt()))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SandwichCheck {
    pub fidelity: f64,
    pub q: f64,
    pub sqrt_fidelity: f64,
    pub holds: bool,
}

/// Evaluates `F <= Q <= √F` with [`SANDWICH_SLACK`].
pub fn verify_sandwich(rho: &BlochQubit, zeta: &BlochQubit) -> SandwichCheck {
    let fidelity = qubit::fidelity(rho, zeta);
    let q = chernoff_bound(rho, zeta).q_min;
    let sqrt_fidelity = fidelity.sqrt();
    SandwichCheck {
        fidelity,
        q,
        sqrt_fidelity,
        holds: fidelity <= q + SANDWICH_SLACK && q <= sqrt_fidelity + SANDWICH_SLACK,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    fn z(r: f64) -> BlochQubit {
        BlochQubit::along_z(r).unwrap()
    }

    #[test]
    fn overlap_of_identical_states_is_one() {
        let q = BlochQubit::new(0.2, -0.3, 0.4).unwrap();
        for s in [0.0, 0.3, 1.0] {
            assert!((renyi_overlap(&q, &q, s).unwrap() - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn overlap_of_orthogonal_pure_states_vanishes() {
        assert_eq!(renyi_overlap(&z(1.0), &z(-1.0), 0.5).unwrap(), 0.0);
        assert_eq!(renyi_overlap(&z(1.0), &z(-1.0), 0.0).unwrap(), 0.0);
    }

    #[test]
    fn perpendicular_equal_length_overlap() {
        let rho = z(0.5);
        let zeta = BlochQubit::new(0.5 * FRAC_PI_2.cos() + 0.5, 0.0, 0.0).unwrap();
        let expected = 0.5 + (0.75f64 * 0.25).sqrt();
        assert!((renyi_overlap(&rho, &zeta, 0.5).unwrap() - expected).abs() < 1e-15);
        assert!((renyi_overlap_matrix(&rho, &zeta, 0.5).unwrap() - expected).abs() < 1e-13);
        assert!((expected - 0.933013).abs() < 1e-6);
    }

    #[test]
    fn rejects_s_outside_unit_interval() {
        assert!(renyi_overlap(&z(0.1), &z(0.2), 1.5).is_err());
        assert!(renyi_overlap(&z(0.1), &z(0.2), -0.1).is_err());
    }

    #[test]
    fn identical_states_report_tie_break() {
        let q = BlochQubit::new(0.1, 0.1, 0.1).unwrap();
        assert_eq!(chernoff_bound(&q, &q), ChernoffResult::IDENTICAL);
    }

    #[test]
    fn orthogonal_pure_states_have_zero_overlap() {
        let res = chernoff_bound(&z(1.0), &z(-1.0));
        assert_eq!(res.q_min, 0.0);
        assert!(res.xi.is_infinite());
        assert_eq!(res.s_star, 0.5);
    }

    #[test]
    fn pure_versus_mixed_minimum_sits_at_boundary() {
        // ρ pure: Q_s = μ^{1-s} for s > 0, Q_0 = ⟨ψ|ζ|ψ⟩ = μ.
        let res = chernoff_bound(&z(1.0), &z(0.4));
        assert_eq!(res.s_star, 0.0);
        assert!((res.q_min - 0.7).abs() < 1e-15);
    }

    #[test]
    fn min_error_examples() {
        let same = DiscriminationTask::new(z(0.3), z(0.3), 3).unwrap();
        assert!((min_error_probability(&same).unwrap() - 0.5).abs() < 1e-15);
        let orth = DiscriminationTask::new(z(1.0), z(-1.0), 1).unwrap();
        assert!(min_error_probability(&orth).unwrap().abs() < 1e-15);
        let pair = DiscriminationTask::new(z(0.6), z(0.2), 1).unwrap();
        assert!((min_error_probability(&pair).unwrap() - 0.4).abs() < 1e-15);
        let big = DiscriminationTask::new(z(0.6), z(0.2), 13).unwrap();
        assert!(matches!(min_error_probability(&big), Err(Error::ResourceCap(_))));
        assert!(DiscriminationTask::new(z(0.6), z(0.2), 0).is_err());
    }

    #[test]
    fn pure_state_error_examples() {
        assert_eq!(min_error_pure(0.0, 1).unwrap(), 0.0);
        assert_eq!(min_error_pure(1.0, 7).unwrap(), 0.5);
        let v = min_error_pure(0.5, 1).unwrap();
        assert!((v - (1.0 - 1.0 / 2f64.sqrt()) / 2.0).abs() < 1e-15);
        assert!((v - 0.146447).abs() < 1e-6);
        assert!(min_error_pure(1.2, 1).is_err());
    }

    #[test]
    fn pure_state_formula_matches_trace_norm() {
        // |↑⟩ vs cos(t)|↑⟩ + sin(t)|↓⟩ has |⟨Φ|Ψ⟩|² = cos²t
        let t: f64 = 0.4;
        let zeta = BlochQubit::new((2.0 * t).sin(), 0.0, (2.0 * t).cos()).unwrap();
        for k in 1..=4 {
            let task = DiscriminationTask::new(z(1.0), zeta, k).unwrap();
            let dense = min_error_probability(&task).unwrap();
            let closed = min_error_pure(t.cos().powi(2), k).unwrap();
            assert!((dense - closed).abs() < 1e-12, "k={k}: {dense} vs {closed}");
        }
    }

    #[test]
    fn sandwich_extremes() {
        let q = z(0.4);
        let same = verify_sandwich(&q, &q);
        assert!(same.holds);
        assert!((same.fidelity - 1.0).abs() < 1e-12 && (same.q - 1.0).abs() < 1e-12);
        let orth = verify_sandwich(&z(1.0), &z(-1.0));
        assert!(orth.holds);
        assert_eq!((orth.fidelity, orth.q, orth.sqrt_fidelity), (0.0, 0.0, 0.0));
    }
}
