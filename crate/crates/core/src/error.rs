use thiserror::Error;

/// Errors raised by the library.
///
/// Variants fall into three groups, see [`ErrorClass`]: malformed text,
/// violated preconditions, and internal invariant failures that are
/// unreachable for correct inputs and a correct ring implementation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0} is not divisible by sqrt(2)")]
    Divisibility(String),
    #[error("{k} is not a denominator exponent (least exponent is {lde})")]
    Exponent { k: u32, lde: u32 },
    #[error("{0} is not real")]
    NotReal(String),
    #[error("matrix is not a Clifford operator")]
    NotClifford,
    #[error("matrix is not unitary")]
    NotUnitary,
    #[error("matrix is not orthogonal")]
    NotOrthogonal,
    #[error("matrix has determinant {0}, expected 1")]
    NotSpecial(String),
    #[error("invalid normal form: {0}")]
    InvalidForm(String),
    #[error("lemma hypothesis not satisfied: {0}")]
    Hypothesis(String),
    #[error("internal: parity matrix matches none of the syllable patterns")]
    NoMatch,
    #[error("internal: parity matrix matches more than one syllable pattern")]
    Ambiguity,
    #[error("internal: denominator exponent did not decrease (k = {0})")]
    KNotDecreased(u32),
    #[error("internal: residual phase is not a power of omega")]
    Phase,
    #[error("no residue node matches {0}")]
    NoNode(String),
}

/// Coarse classification of [`Error`], used for exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    Parse,
    Precondition,
    Internal,
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::Parse(_) => ErrorClass::Parse,
            Error::Divisibility(_)
            | Error::Exponent { .. }
            | Error::NotReal(_)
            | Error::NotClifford
            | Error::NotUnitary
            | Error::NotOrthogonal
            | Error::NotSpecial(_)
            | Error::InvalidForm(_)
            | Error::Hypothesis(_)
            | Error::NoNode(_) => ErrorClass::Precondition,
            Error::NoMatch | Error::Ambiguity | Error::KNotDecreased(_) | Error::Phase => {
                ErrorClass::Internal
            }
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
