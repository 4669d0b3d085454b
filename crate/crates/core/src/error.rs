use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("{0} is not a prime modulus below 2^31")]
    NotPrime(u64),

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("simplex {0} is not a face of the ambient complex")]
    SimplexNotInComplex(String),

    #[error("coordinate {index} is zero; negative exponents are undefined there")]
    ZeroCoordinate { index: usize },

    #[error("value is not defined over the field: denominator divisible by {0}")]
    NotInField(u64),

    #[error("polynomial does not vanish at 1; the tangent cone at 1 is empty")]
    NotVanishingAtOne,

    #[error("{what} cap exceeded: size {size} > cap {cap}")]
    CapExceeded { what: &'static str, size: usize, cap: usize },

    #[error("character is zero")]
    ZeroCharacter,

    #[error("homomorphism is not surjective onto Z^{0}")]
    NotSurjective(usize),

    #[error("trivial monodromy cannot be verified combinatorially; pass the assumption flag")]
    MonodromyUnverified,

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("internal cross-check failed: {0}")]
    CrossCheck(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
