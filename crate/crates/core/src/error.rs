use thiserror::Error;

/// Coarse classification used by front ends to pick exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Input outside the mathematical domain of an operation.
    Domain,
    /// Operation invoked with the wrong kind of input or contradictory options.
    Usage,
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("wave vector ({m}, {n}) is not admissible: {reason}")]
    InvalidWaveVector {
        m: i64,
        n: i64,
        reason: &'static str,
    },

    #[error("parameter `{name}` = {value} is out of range: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("amplitude bound undefined at (m, n) = ({m}, {n}): {reason}")]
    SingularBound {
        m: u32,
        n: u32,
        reason: &'static str,
    },

    #[error("exact triad search needs a rational-valued dispersion, `{kind}` is real-valued; use near-triad search with a threshold")]
    NotExact { kind: &'static str },

    #[error("{0}")]
    Usage(String),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::InvalidWaveVector { .. }
            | Error::InvalidParameter { .. }
            | Error::SingularBound { .. } => ErrorKind::Domain,
            Error::NotExact { .. } | Error::Usage(_) => ErrorKind::Usage,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
