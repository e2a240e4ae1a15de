use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("field of size {p}^{k} is too large")]
    FieldTooLarge { p: u64, k: u32 },
    #[error("cannot embed F_{{{src}}} into F_{{{dst}}}")]
    IncompatibleFields { src: String, dst: String },
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("constant polynomial")]
    ConstantPolynomial,
    #[error("expected {expected} variable(s), found {found}")]
    VariableCount { expected: String, found: usize },
    #[error("invalid degree split: {0}")]
    InvalidDegreeSplit(String),
    #[error("polynomial is decomposable, its spectrum is the whole field")]
    Decomposable,
    #[error("degenerate quadratic: 4*a02*a20 - a11^2 vanishes")]
    DegenerateQuadratic,
    #[error("unsupported characteristic {0}")]
    UnsupportedCharacteristic(u64),
    #[error("polynomial is not monic in y")]
    NotMonicInY,
    #[error("degenerate discriminant chain: {0}")]
    DegenerateChain(String),
    #[error("bad prime {0}")]
    BadPrime(u64),
    #[error("search space of {candidates} candidates exceeds the guard {guard}")]
    GuardExceeded { candidates: u128, guard: u128 },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
