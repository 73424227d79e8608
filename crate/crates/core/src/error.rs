use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    CompositeModulus(u64),
    #[error("modulus polynomial {0:?} is reducible over F_{1}")]
    ReducibleModulus(Vec<u64>, u64),
    #[error("invalid modulus polynomial: {0}")]
    InvalidModulus(String),
    #[error("{what} = {value} exceeds the configured limit {limit}")]
    LimitExceeded {
        what: &'static str,
        value: u128,
        limit: u128,
    },
    #[error("division by zero")]
    DivisionByZero,
    #[error("{d} does not divide {order}")]
    NotADivisor { d: u64, order: u64 },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("dimension {0} is odd; an even dimension is required")]
    OddDimension(usize),
    #[error("the set contains 0")]
    ZeroInSet,
    #[error("the set has {found} elements; at least {required} are required")]
    SetTooSmall { required: usize, found: usize },
    #[error("invalid set spec: {0}")]
    InvalidSpec(String),
    #[error("cannot produce a set of size {requested}: only {available} candidates")]
    SizeUnsatisfiable { requested: usize, available: u128 },
    #[error("suite mismatch: {0}")]
    SuiteMismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn limit(what: &'static str, value: u128, limit: u128) -> Self {
        Error::LimitExceeded { what, value, limit }
    }

    /// Whether this error stems from bad user input (CLI exit code 2).
    pub fn is_invalid_input(&self) -> bool {
        !matches!(self, Error::Io(_))
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
