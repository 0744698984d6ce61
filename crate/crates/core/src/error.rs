use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("characteristic 2 is not supported")]
    EvenCharacteristic,
    #[error("extension degree must be at least 1, got {0}")]
    BadDegree(i64),
    #[error("field of order {p}^{m} does not fit in 32 bits")]
    FieldTooLarge { p: u64, m: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands live over different fields or algebras")]
    ContextMismatch,
    #[error("matrix is singular")]
    Singular,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid field element: {0}")]
    InvalidElement(String),
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("s admits only the exponents 1 and -1, got {0}")]
    ExponentOnS(i64),
    #[error("exponent {0} is out of range")]
    ExponentBound(i64),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("{0} does not act as a scalar")]
    NotScalar(String),
    #[error("inconclusive after {0} attempts")]
    Inconclusive(usize),
    #[error("search budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("(BA)^p is not scalar on the {0} block")]
    NotScalarOnBlock(String),
    #[error("defining relations fail: {0}")]
    RelationFailed(String),
    #[error("malformed input: {0}")]
    Format(String),
}
