use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors produced by the simulator library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension must be at least 2, got {0}")]
    DimensionTooSmall(usize),

    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("state is not normalized: |norm² − 1| = {deviation:.3e}")]
    NotNormalized { deviation: f64 },

    #[error("matrix is not unitary within {tol:.1e}")]
    NotUnitary { tol: f64 },

    #[error("pulse with {photon_count} photons must carry a state iff non-empty")]
    InconsistentPulse { photon_count: u32 },

    #[error("{key}: {message}")]
    InvalidConfig { key: String, message: String },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("adversary `{strategy}` requires {requirement}")]
    UnsupportedStrategy { strategy: String, requirement: String },

    #[error("protocol abort at round {round}: {message}")]
    ProtocolAbort { round: u64, message: String },

    #[error("{0}")]
    InvalidArgument(String),
}

impl Error {
    pub fn config(key: impl Into<String>, message: impl Into<String>) -> Self {
        Error::InvalidConfig {
            key: key.into(),
            message: message.into(),
        }
    }
}
