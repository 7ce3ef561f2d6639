use thiserror::Error;

/// Errors raised by the set, number and stream operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Two operands of a strict disjoint union share labels.
    #[error("sets are not disjoint; common labels: {}", .common.join(", "))]
    DisjointnessViolation { common: Vec<String> },

    /// A rational outside the closed unit interval.
    #[error("{value} is outside [0,1]")]
    OutOfRange { value: String },

    #[error("cannot parse {input:?} at position {position}: {reason}")]
    ParseError {
        input: String,
        position: usize,
        reason: String,
    },

    /// `forward` was handed a stream that is not in B_X.
    #[error("{stream} is a trailing-1 duplicate and has no image under the forward map")]
    DomainViolation { stream: String },

    #[error("enumeration of {required} items exceeds the budget of {budget}")]
    BudgetExceeded { required: u128, budget: u64 },

    #[error("cardinal arithmetic overflowed: {0}")]
    Overflow(String),

    /// A law witness failed validation. Indicates a bug, never expected.
    #[error("law witness failed validation: {0}")]
    LawViolation(String),
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn name(&self) -> &'static str {
        match self {
            Error::DisjointnessViolation { .. } => "DisjointnessViolation",
            Error::OutOfRange { .. } => "OutOfRange",
            Error::ParseError { .. } => "ParseError",
            Error::DomainViolation { .. } => "DomainViolation",
            Error::BudgetExceeded { .. } => "BudgetExceeded",
            Error::Overflow(_) => "Overflow",
            Error::LawViolation(_) => "LawViolation",
        }
    }

    pub(crate) fn parse(input: &str, position: usize, reason: impl Into<String>) -> Self {
        Error::ParseError {
            input: input.to_owned(),
            position,
            reason: reason.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
