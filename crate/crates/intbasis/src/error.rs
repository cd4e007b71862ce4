use thiserror::Error;

/// Every failure the library reports. The CLI maps these onto exit codes.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("invalid input: {0}")]
    Input(String),
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("polynomial is inseparable (discriminant vanishes)")]
    Inseparable,
    #[error("polynomial is reducible or its irreducibility could not be certified")]
    Reducible,
    #[error("modulus {0} is not prime")]
    NotPrime(String),
    #[error("unfactored cofactor {0}; supply prime or factor hints")]
    Unfactored(String),
    #[error("precision insufficient: {0}")]
    Precision(String),
    #[error("certificate failed: {0}")]
    Certificate(String),
    #[error("outside desk-scale limits: {0}")]
    DeskScale(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code used by the command line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Precision(_) | Error::Certificate(_) | Error::Internal(_) => 3,
            Error::DeskScale(_) => 4,
            _ => 2,
        }
    }
}
