use thiserror::Error;

/// Errors raised by the library. The variants fall into three families
/// (bad input, exhausted budget, failed verification) and
/// [`Error::kind`] reports which.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("modulus is invalid: {0}")]
    InvalidModulus(String),
    #[error("modulus is reducible over GF({0})")]
    ReducibleModulus(u64),
    #[error("field of size {p}^{r} exceeds the supported size")]
    FieldTooLarge { p: u64, r: u64 },
    #[error("digit {digit} out of range for a field of size {q}")]
    DigitOutOfRange { digit: u64, q: u64 },
    #[error("digit codec needs a log table; field of size {0} has none")]
    NoLogTable(u64),
    #[error("element does not belong to the field")]
    ForeignElement,
    #[error("operands belong to different fields or automorphisms")]
    Mismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("Frobenius exponent {s} must be below the extension degree {r}")]
    InvalidAutomorphism { s: u32, r: u32 },
    #[error("twist constant alpha must be nonzero")]
    ZeroAlpha,
    #[error("polynomial must be monic")]
    NotMonic,
    #[error("polynomial has zero constant term")]
    ZeroConstantTerm,
    #[error("polynomial is not a right divisor of x^{n} - alpha")]
    NotRightDivisor { n: usize },
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("zero matrix generates no code")]
    ZeroCode,
    #[error("the dual of a full-space code is the zero code")]
    FullCode,
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("malformed shorthand: {0}")]
    Shorthand(String),
    #[error("orbit of block {block} has projective length {found}, declared {declared}")]
    OrbitLengthMismatch {
        block: usize,
        found: usize,
        declared: usize,
    },
    #[error("There are not enough orbits of length {n} (need {needed}, found {found})")]
    NotEnoughOrbits {
        n: usize,
        needed: usize,
        found: usize,
    },
    #[error("point {0} has a coordinate outside the fixed field")]
    PointOutsideFixedField(usize),
    #[error("point {point}: coordinate {coord} is nonzero but theta^{coord} moves alpha")]
    TwistNotFixed { point: usize, coord: usize },
    #[error("size condition q^[k] - 1 >= [n] fails ({lhs} < {rhs})")]
    SizeCondition { lhs: u128, rhs: u128 },
    #[error("stride c = {c} is not coprime to {modulus}")]
    StrideNotCoprime { c: u64, modulus: u64 },
    #[error("bracket exponents need a nontrivial automorphism (s >= 1)")]
    DegenerateBracket,
    #[error("verification failed: {0}")]
    Verification(String),
}

/// Coarse classification used for process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    BadInput,
    Budget,
    Verification,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::BudgetExceeded(_) | Error::FieldTooLarge { .. } => ErrorKind::Budget,
            Error::Verification(_) => ErrorKind::Verification,
            _ => ErrorKind::BadInput,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
