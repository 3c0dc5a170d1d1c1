use thiserror::Error;

pub type Result<T, E = SpbwError> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpbwError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("duplicate variable name `{0}`")]
    DuplicateName(String),
    #[error("invalid identifier `{0}`")]
    InvalidName(String),
    #[error("invalid ideal generator: {0}")]
    InvalidIdealGenerator(String),
    #[error("elements belong to different rings")]
    MismatchedRing,
    #[error("arithmetic error: {0}")]
    Arithmetic(String),
    #[error("sigma_{index} does not respect the base ideal: {detail}")]
    EndoIdeal { index: usize, detail: String },
    #[error("delta_{index} is not a well-defined sigma-derivation: {detail}")]
    DerivationIncompatible { index: usize, detail: String },
    #[error("the constant c[{i}][{j}] is zero")]
    ZeroConstant { i: usize, j: usize },
    #[error("overlap {overlap} does not resolve: {left} vs {right}")]
    DivergentOverlap {
        overlap: String,
        left: String,
        right: String,
    },
    #[error("malformed presentation: {0}")]
    Malformed(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("unknown identifier `{0}`")]
    UnknownIdentifier(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invalid grading: {0}")]
    InvalidGrading(String),
    #[error("unsupported base ring: {0}")]
    UnsupportedBase(String),
    #[error("window error: {0}")]
    Window(String),
}

impl SpbwError {
    /// True for failures of the defining data of a presentation, as opposed to
    /// parse errors or unmet hypotheses of a downstream operation.
    pub fn is_validation_failure(&self) -> bool {
        matches!(
            self,
            SpbwError::NotPrime(_)
                | SpbwError::DuplicateName(_)
                | SpbwError::InvalidName(_)
                | SpbwError::InvalidIdealGenerator(_)
                | SpbwError::EndoIdeal { .. }
                | SpbwError::DerivationIncompatible { .. }
                | SpbwError::ZeroConstant { .. }
                | SpbwError::DivergentOverlap { .. }
                | SpbwError::Malformed(_)
        )
    }
}
