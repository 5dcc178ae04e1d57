use thiserror::Error;

/// Errors produced by spectrum construction, bound evaluation and verification.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("geometry error: {0}")]
    Geometry(String),

    #[error("spectrum incomplete: requested {requested} but the enumeration is only complete below {cutoff}")]
    IncompleteSpectrum { requested: f64, cutoff: f64 },

    #[error("resource limit exceeded: {0}")]
    Resource(String),

    #[error("value out of range: {0}")]
    Range(String),

    #[error("inequality violated: {name} (margin {margin:e})")]
    InequalityViolation { name: String, margin: f64 },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("discretization error: {0}")]
    Discretization(String),

    #[error("eigensolver did not converge after {iterations} basis vectors (worst relative residual {residual:e})")]
    Convergence { iterations: usize, residual: f64 },

    #[error("malformed input: {0}")]
    Parse(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn arg(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }
}

impl Error {
    /// Process exit status: 1 for a violated inequality, 2 for bad input,
    /// 3 for resource, convergence or I/O failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InequalityViolation { .. } => 1,
            Error::Argument(_) | Error::Geometry(_) | Error::Range(_) | Error::Precondition(_) | Error::Parse(_) => 2,
            Error::IncompleteSpectrum { .. }
            | Error::Resource(_)
            | Error::Discretization(_)
            | Error::Convergence { .. }
            | Error::Io(_) => 3,
        }
    }
}
