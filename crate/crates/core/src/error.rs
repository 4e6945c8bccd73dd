use thiserror::Error;

/// Errors raised by state construction, metrics and the simulator.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("unphysical Bloch vector: length {0} exceeds 1")]
    Unphysical(f64),

    #[error("invalid spectral weights a = {a}, b = {b}: need a + b = 1 and a >= b >= 0")]
    InvalidSpectrum { a: f64, b: f64 },

    #[error("operator is not Hermitian (deviation {0:e})")]
    NotHermitian(f64),

    #[error("invalid clone spec: M = {m} must be >= N = {n} >= 1")]
    InvalidCloneSpec { n: usize, m: usize },

    #[error("{name} = {value} is outside {range}")]
    OutOfRange {
        name: &'static str,
        value: f64,
        range: &'static str,
    },

    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),

    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn out_of_range(name: &'static str, value: impl Into<f64>, range: &'static str) -> Self {
        Error::OutOfRange {
            name,
            value: value.into(),
            range,
        }
    }
}
