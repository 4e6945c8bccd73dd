//! Distinguishability of mixed qubits from their universal clones.
//!
//! The crate measures how far the output of the optimal universal N→M qubit
//! cloner sits from its input using the quantum Chernoff bound
//! `ξ = -ln min_s Tr(ρ^s ζ^{1-s})`, and checks the closed-form clone state
//! against an exact state-vector simulation of the cloning isometry.
//!
//! * [`qubit`]: Bloch and spectral qubit states, fidelity, tensor powers.
//! * [`linalg`]: dense Hermitian operators and a Jacobi eigensolver.
//! * [`chernoff`]: Rényi overlaps, the Chernoff bound, k-copy error rates.
//! * [`cloning`]: shrinking factor, clone states, cloning Chernoff bound.
//! * [`simulator`]: phased symmetric states and the cloning isometry.
//! * [`sweep`]: parameter sweeps and CSV output used by the `qcb` binary.
//! * [`verify`]: the self-check suite behind `qcb verify`.

pub mod chernoff;
pub mod cloning;
pub mod error;
pub mod linalg;
pub mod minimize;
pub mod qubit;
pub mod simulator;
pub mod sweep;
pub mod verify;

pub use chernoff::{chernoff_bound, ChernoffResult, DiscriminationTask};
pub use cloning::{cloning_chernoff, shrinking_factor, CloneSpec, ShrinkingFactor};
pub use error::{Error, Result};
pub use linalg::HermitianOperator;
pub use qubit::{BlochQubit, SpectralQubit};
