use thiserror::Error;

/// Failure modes shared by every arithmetic operation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("undefined: {0}")]
    Undefined(String),
    #[error("not representable below epsilon-zero: {0}")]
    NotRepresentable(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("not divisible: {0}")]
    NotDivisible(String),
    #[error("no archimedean witness: {0}")]
    NoWitness(String),
    #[error("invalid lambda: {0}")]
    InvalidLambda(String),
    #[error("out of field: {0}")]
    OutOfField(String),
    #[error("inconclusive: {0}")]
    Inconclusive(String),
    #[error("resource limit exceeded: {0}")]
    ResourceExceeded(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

impl ArithError {
    /// Stable machine-readable name of the variant.
    pub fn code(&self) -> &'static str {
        match self {
            ArithError::Undefined(_) => "Undefined",
            ArithError::NotRepresentable(_) => "NotRepresentable",
            ArithError::DivisionByZero => "DivisionByZero",
            ArithError::NotDivisible(_) => "NotDivisible",
            ArithError::NoWitness(_) => "NoWitness",
            ArithError::InvalidLambda(_) => "InvalidLambda",
            ArithError::OutOfField(_) => "OutOfField",
            ArithError::Inconclusive(_) => "Inconclusive",
            ArithError::ResourceExceeded(_) => "ResourceExceeded",
            ArithError::Unsupported(_) => "Unsupported",
        }
    }

    pub(crate) fn undefined(msg: impl Into<String>) -> Self {
        ArithError::Undefined(msg.into())
    }

    pub(crate) fn not_representable(msg: impl Into<String>) -> Self {
        ArithError::NotRepresentable(msg.into())
    }

    pub(crate) fn resource(msg: impl Into<String>) -> Self {
        ArithError::ResourceExceeded(msg.into())
    }
}

pub type ArithResult<T> = Result<T, ArithError>;

/// Bounds on the size of intermediate values.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximum bit length of any natural-number coefficient produced.
    pub max_bits: u64,
    /// Maximum number of terms (counted through all nesting levels) of a result.
    pub max_terms: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_bits: 1 << 20,
            max_terms: 100_000,
        }
    }
}
