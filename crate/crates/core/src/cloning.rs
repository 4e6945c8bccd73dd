//! Closed-form output of the optimal universal N→M qubit cloner and the
//! Chernoff bound between a clone and its original.
//!
//! Every clone is `η ρ + (1 - η) I / 2` with shrinking factor
//! `η = N(M + 2) / (M(N + 2))`, so in Bloch form the clone is the input
//! vector scaled by `η`.

use crate::chernoff::{self, support_pow, ChernoffResult};
use crate::error::{Error, Result};
use crate::minimize;
use crate::qubit::BlochQubit;

/// Number of input copies `N` and output clones `M`, with `M >= N >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CloneSpec {
    n_in: usize,
    m_out: usize,
}

impl CloneSpec {
    pub fn new(n_in: usize, m_out: usize) -> Result<Self> {
        if n_in == 0 || m_out < n_in {
            return Err(Error::InvalidCloneSpec { n: n_in, m: m_out });
        }
        Ok(CloneSpec { n_in, m_out })
    }

    pub fn n_in(&self) -> usize {
        self.n_in
    }

    pub fn m_out(&self) -> usize {
        self.m_out
    }

    /// `M == N`: the machine just passes the inputs through.
    pub fn is_identity(&self) -> bool {
        self.n_in == self.m_out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct ShrinkingFactor(f64);

impl ShrinkingFactor {
    pub fn value(&self) -> f64 {
        self.0
    }
}

/// `η = N(M + 2) / (M(N + 2))`.
///
/// Numerator and denominator are formed exactly in `u128` and reduced by
/// their gcd before the single floating division.
pub fn shrinking_factor(spec: &CloneSpec) -> ShrinkingFactor {
    let (n, m) = (spec.n_in as u128, spec.m_out as u128);
    let num = n * (m + 2);
    let den = m * (n + 2);
    let g = gcd(num, den);
    ShrinkingFactor((num / g) as f64 / (den / g) as f64)
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Single-clone state of the N→M machine.
pub fn clone_state(spec: &CloneSpec, input: &BlochQubit) -> BlochQubit {
    if spec.is_identity() {
        return *input;
    }
    input
        .shrink(shrinking_factor(spec).value())
        .expect("η <= 1 keeps the clone inside the ball")
}

/// 2→M clone state from `ρ_out = (M+2)/(2M) ρ + (M-2)/(4M) I`, built as a
/// density operator and read back as a Bloch vector.
pub fn clone_state_2to_m(m_out: usize, input: &BlochQubit) -> Result<BlochQubit> {
    if m_out < 2 {
        return Err(Error::InvalidCloneSpec { n: 2, m: m_out });
    }
    let m = m_out as f64;
    let weight = (m + 2.0) / (2.0 * m);
    let noise = (m - 2.0) / (4.0 * m);
    let rho = input.to_operator();
    let entries = rho
        .entries()
        .iter()
        .enumerate()
        .map(|(idx, &z)| {
            let diag = if idx == 0 || idx == 3 { noise } else { 0.0 };
            z * weight + diag
        })
        .collect();
    let out = crate::linalg::HermitianOperator::new(2, entries)?;
    BlochQubit::from_operator(&out)
}

fn check_length(r: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&r) {
        return Err(Error::out_of_range("r", r, "[0, 1]"));
    }
    Ok(())
}

/// Chernoff bound between an input of Bloch length `r` and its clone.
///
/// Delegates to the general [`chernoff::chernoff_bound`] on the collinear
/// pair `(0, 0, r)` and `(0, 0, η r)`.
pub fn cloning_chernoff(spec: &CloneSpec, r: f64) -> Result<ChernoffResult> {
    check_length(r)?;
    if r == 0.0 || spec.is_identity() {
        return Ok(ChernoffResult::IDENTICAL);
    }
    let input = BlochQubit::along_z(r)?;
    let clone = clone_state(spec, &input);
    Ok(chernoff::chernoff_bound(&input, &clone))
}

/// `λ^s μ^{1-s} + λ̃^s μ̃^{1-s}` for the collinear input/clone pair.
pub fn cloning_overlap(spec: &CloneSpec, r: f64, s: f64) -> Result<f64> {
    check_length(r)?;
    if !(0.0..=1.0).contains(&s) {
        return Err(Error::out_of_range("s", s, "[0, 1]"));
    }
    let p = shrinking_factor(spec).value() * r;
    Ok(two_term(r, p, s))
}

fn two_term(r: f64, p: f64, s: f64) -> f64 {
    let (lam, lam_t) = (0.5 * (1.0 + r), 0.5 * (1.0 - r));
    let (mu, mu_t) = (0.5 * (1.0 + p), 0.5 * (1.0 - p));
    support_pow(lam, s) * support_pow(mu, 1.0 - s) + support_pow(lam_t, s) * support_pow(mu_t, 1.0 - s)
}

/// Minimizes the two-term overlap directly. Used to cross-check
/// [`cloning_chernoff`].
pub fn cloning_chernoff_fast(spec: &CloneSpec, r: f64) -> Result<ChernoffResult> {
    check_length(r)?;
    if r == 0.0 || spec.is_identity() {
        return Ok(ChernoffResult::IDENTICAL);
    }
    let p = shrinking_factor(spec).value() * r;
    let f = |s: f64| two_term(r, p, s);
    Ok(ChernoffResult::from_minimum(minimize::minimize_unit_interval(f, None)))
}
