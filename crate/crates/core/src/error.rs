use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("arity mismatch: expected {expected} variables, got {found}")]
    Arity { expected: usize, found: usize },
    #[error("invalid monomial order: {0}")]
    InvalidOrder(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("input ideal is not homogeneous")]
    NotHomogeneous,
    #[error("characteristic 2 is not supported by {0}")]
    CharacteristicTwo(&'static str),
    #[error("{what}: {n} variables exceeds the exhaustive cap of {cap}")]
    CapExceeded { what: &'static str, n: usize, cap: usize },
    #[error("inverse system generators are linearly dependent")]
    DependentGenerators,
    #[error("inverse system generators must be nonzero forms of a common degree")]
    NotLevel,
    #[error("invalid argument: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
