use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("char K = {p} is not allowed for socle degree {j}: need char K = 0 or char K > j")]
    CharacteristicTooSmall { p: u64, j: u32 },
    #[error("variable frame mismatch: {0}")]
    FrameMismatch(String),
    #[error("polynomial is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("degree {degree} out of range {range}")]
    DegreeOutOfRange { degree: i64, range: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("genericity failure after {attempts} draws (seed {seed}): {what}")]
    Genericity {
        attempts: usize,
        seed: u64,
        what: String,
    },
    #[error("verification failed: {0}")]
    Verification(String),
}

impl Error {
    /// Verification failures map to exit code 2; everything else is a domain error.
    pub fn is_verification(&self) -> bool {
        matches!(self, Error::Verification(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
