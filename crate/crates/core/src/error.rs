use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("polynomials belong to different rings")]
    ContextMismatch,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },
    #[error("non-rational coefficient at column {column}: {message}")]
    NonRational { column: usize, message: String },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("operation requires a completed standard basis")]
    NotStandard,
    #[error("work limit exhausted after {0} reduction steps")]
    WorkLimit(u64),
    #[error("saturation did not stabilize within {0} iterations")]
    SaturationCap(usize),
    #[error("infinite-dimensional: {0}")]
    InfiniteDimension(String),
    #[error("1-form does not have an isolated zero: {0}")]
    NonIsolatedZero(String),
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

impl Error {
    /// Failures caused by the machine (caps and limits) rather than by the
    /// mathematics of the input.
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::WorkLimit(_) | Error::SaturationCap(_))
    }

    /// Failures where the input violates a mathematical precondition.
    pub fn is_precondition(&self) -> bool {
        matches!(self, Error::InfiniteDimension(_) | Error::NonIsolatedZero(_) | Error::InvalidInput(_))
    }
}

pub type Result<T> = core::result::Result<T, Error>;
