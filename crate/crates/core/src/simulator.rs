//! State-vector simulation of the N→M cloning isometry on mixed inputs.
//!
//! `ρ^{⊗N}` is expanded in phased symmetric states `|(N-m)↑, m↓⟩_α`, each
//! term is pushed through the cloning isometry, the ancilla is traced out
//! (its outputs are orthonormal labels), and one clone is kept by partial
//! trace. The result is compared against the closed-form clone in
//! [`oracle_check`].
//!
//! Basis convention: qubit 0 is the most significant bit of a basis index and
//! spin up is bit value 0. The configurations with `m` down spins are ranked
//! by increasing basis index; that rank is the `j - 1` in the phase
//! `exp(2πi α (j-1) / C(N, m))`.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::cloning::{self, CloneSpec};
use crate::error::{Error, Result};
use crate::qubit::{BlochQubit, SpectralQubit};

/// Largest register for a single phased state.
pub const MAX_QUBITS: usize = 12;
/// Input-copy cap for the simulator.
pub const MAX_SIM_INPUTS: usize = 6;
/// Output-clone cap for the simulator.
pub const MAX_SIM_OUTPUTS: usize = 12;

/// Exact binomial coefficient.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // exact at every step: acc * (n - i) is divisible by (i + 1)
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

#[derive(Debug, Clone, PartialEq)]
pub struct PhasedSymmetricState {
    n_qubits: usize,
    m_down: usize,
    alpha: usize,
    amplitudes: Vec<Complex64>,
}

impl PhasedSymmetricState {
    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn m_down(&self) -> usize {
        self.m_down
    }

    pub fn alpha(&self) -> usize {
        self.alpha
    }

    /// Amplitudes over the `2^n` computational basis.
    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn inner(&self, other: &PhasedSymmetricState) -> Complex64 {
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }
}

/// `|(n-m)↑, m↓⟩_α`; `alpha = 0` is the Dicke state.
pub fn build_phased_state(n: usize, m: usize, alpha: usize) -> Result<PhasedSymmetricState> {
    if n == 0 {
        return Err(Error::out_of_range("n", 0.0, "[1, 12]"));
    }
    if n > MAX_QUBITS {
        return Err(Error::ResourceCap(format!("{n} qubits exceed the state-vector cap of {MAX_QUBITS}")));
    }
    if m > n {
        return Err(Error::out_of_range("m", m as f64, "[0, n]"));
    }
    let count = binomial(n, m) as usize;
    if alpha >= count {
        return Err(Error::out_of_range("alpha", alpha as f64, "[0, C(n, m))"));
    }
    let norm = 1.0 / (count as f64).sqrt();
    let mut amplitudes = vec![Complex64::new(0.0, 0.0); 1 << n];
    let mut rank = 0usize;
    for (index, amp) in amplitudes.iter_mut().enumerate() {
        if index.count_ones() as usize == m {
            // reduce α·j mod C before scaling so the angle stays small
            let turn = ((alpha * rank) % count) as f64 / count as f64;
            *amp = Complex64::from_polar(norm, 2.0 * PI * turn);
            rank += 1;
        }
    }
    debug_assert_eq!(rank, count);
    Ok(PhasedSymmetricState {
        n_qubits: n,
        m_down: m,
        alpha,
        amplitudes,
    })
}

/// `β_mk²` as an exact ratio of integers:
/// `C(M-m-k, N-m) · C(m+k, k) / C(M+1, N+1)`.
pub fn beta_squared(spec: &CloneSpec, m: usize, k: usize) -> Result<f64> {
    let (n_in, m_out) = (spec.n_in(), spec.m_out());
    if m > n_in {
        return Err(Error::out_of_range("m", m as f64, "[0, N]"));
    }
    if k > m_out - n_in {
        return Err(Error::out_of_range("k", k as f64, "[0, M - N]"));
    }
    assert!(m + k <= m_out, "m + k = {} exceeds M = {m_out}", m + k);
    let num = binomial(m_out - m - k, n_in - m) * binomial(m + k, k);
    let den = binomial(m_out + 1, n_in + 1);
    Ok(num as f64 / den as f64)
}

/// Cloning amplitude `β_mk`.
pub fn beta_coefficient(spec: &CloneSpec, m: usize, k: usize) -> Result<f64> {
    beta_squared(spec, m, k).map(f64::sqrt)
}

/// Output label of the ancilla register. Distinct labels are orthonormal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AncillaLabel {
    pub k: usize,
    pub alpha: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CloningBranch {
    pub beta: f64,
    pub clone_state: PhasedSymmetricState,
    pub ancilla: AncillaLabel,
}

fn check_caps(spec: &CloneSpec) -> Result<()> {
    if spec.n_in() > MAX_SIM_INPUTS || spec.m_out() > MAX_SIM_OUTPUTS {
        return Err(Error::ResourceCap(format!(
            "simulator supports N <= {MAX_SIM_INPUTS}, M <= {MAX_SIM_OUTPUTS}; got N = {}, M = {}",
            spec.n_in(),
            spec.m_out()
        )));
    }
    Ok(())
}

/// Image of `|(N-m)↑, m↓⟩_α ⊗ |R⟩` under the cloning isometry, one branch per
/// `k = 0..=M-N`.
pub fn apply_cloning_unitary(spec: &CloneSpec, m: usize, alpha: usize) -> Result<Vec<CloningBranch>> {
    check_caps(spec)?;
    if m > spec.n_in() {
        return Err(Error::out_of_range("m", m as f64, "[0, N]"));
    }
    if alpha as u128 >= binomial(spec.n_in(), m) {
        return Err(Error::out_of_range("alpha", alpha as f64, "[0, C(N, m))"));
    }
    (0..=spec.m_out() - spec.n_in())
        .map(|k| {
            Ok(CloningBranch {
                beta: beta_coefficient(spec, m, k)?,
                clone_state: build_phased_state(spec.m_out(), m + k, alpha)?,
                ancilla: AncillaLabel { k, alpha },
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct MixtureTerm {
    pub weight: f64,
    pub m: usize,
    pub alpha: usize,
    pub k: usize,
    pub state: PhasedSymmetricState,
}

/// Ensemble of M-qubit clone states left after tracing out the ancilla.
#[derive(Debug, Clone, PartialEq)]
pub struct CloneOutputMixture {
    pub spec: CloneSpec,
    pub input: SpectralQubit,
    pub terms: Vec<MixtureTerm>,
}

impl CloneOutputMixture {
    pub fn total_weight(&self) -> f64 {
        self.terms.iter().map(|t| t.weight).sum()
    }
}

/// Runs every `(m, α)` term of `ρ^{⊗N}` through the isometry.
///
/// Terms with different `(m, α)` never interfere because the input is
/// diagonal in that basis; branches with different ancilla labels drop their
/// cross terms under the ancilla trace.
pub fn simulate_broadcast(spec: &CloneSpec, input: &SpectralQubit) -> Result<CloneOutputMixture> {
    check_caps(spec)?;
    let n = spec.n_in();
    let inputs: Vec<(usize, usize)> = (0..=n)
        .flat_map(|m| (0..binomial(n, m) as usize).map(move |alpha| (m, alpha)))
        .collect();
    let per_input: Result<Vec<Vec<MixtureTerm>>> = inputs
        .par_iter()
        .map(|&(m, alpha)| {
            let prior = input.a().powi((n - m) as i32) * input.b().powi(m as i32);
            Ok(apply_cloning_unitary(spec, m, alpha)?
                .into_iter()
                .map(|branch| MixtureTerm {
                    weight: prior * branch.beta * branch.beta,
                    m,
                    alpha,
                    k: branch.ancilla.k,
                    state: branch.clone_state,
                })
                .collect())
        })
        .collect();
    Ok(CloneOutputMixture {
        spec: *spec,
        input: *input,
        terms: per_input?.into_iter().flatten().collect(),
    })
}

/// Reduced state of clone `keep_index` (0-based, qubit 0 = most significant).
pub fn reduce_to_single_clone(mix: &CloneOutputMixture, keep_index: usize) -> Result<BlochQubit> {
    let m_out = mix.spec.m_out();
    if keep_index >= m_out {
        return Err(Error::out_of_range("keep_index", keep_index as f64, "[0, M)"));
    }
    let bit = 1usize << (m_out - 1 - keep_index);
    // ρ00, ρ11, ρ01
    let (mut up, mut down, mut coh) = (0.0, 0.0, Complex64::new(0.0, 0.0));
    for term in &mix.terms {
        if term.weight == 0.0 {
            continue;
        }
        let amps = term.state.amplitudes();
        let (mut t_up, mut t_down, mut t_coh) = (0.0, 0.0, Complex64::new(0.0, 0.0));
        for (index, amp) in amps.iter().enumerate() {
            if index & bit == 0 {
                t_up += amp.norm_sqr();
                t_coh += amp * amps[index | bit].conj();
            } else {
                t_down += amp.norm_sqr();
            }
        }
        up += term.weight * t_up;
        down += term.weight * t_down;
        coh += t_coh * term.weight;
    }
    let trace = up + down;
    BlochQubit::new(2.0 * coh.re / trace, -2.0 * coh.im / trace, (up - down) / trace)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleReport {
    pub analytic: BlochQubit,
    pub simulated: BlochQubit,
    pub max_deviation: f64,
}

/// Compares the simulated clone against the closed-form clone.
pub fn oracle_check(spec: &CloneSpec, input: &SpectralQubit) -> Result<OracleReport> {
    oracle_check_with(spec, input, |spec, q| cloning::clone_state(spec, q))
}

/// [`oracle_check`] with a substitute analytic model, for negative controls.
pub fn oracle_check_with<F>(spec: &CloneSpec, input: &SpectralQubit, analytic_model: F) -> Result<OracleReport>
where
    F: Fn(&CloneSpec, &BlochQubit) -> BlochQubit,
{
    let analytic = analytic_model(spec, &input.to_bloch());
    let simulated = reduce_to_single_clone(&simulate_broadcast(spec, input)?, 0)?;
    let max_deviation = analytic
        .bloch()
        .iter()
        .zip(simulated.bloch())
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    Ok(OracleReport {
        analytic,
        simulated,
        max_deviation,
    })
}
