use thiserror::Error;

use crate::structure::ValidationReport;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("an ordered semigroup needs at least one element")]
    Empty,
    #[error("order {order} exceeds the supported maximum of {max}")]
    TooLarge { order: usize, max: usize },
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("table entry at ({row}, {col}) is {value}, outside 0..{order}")]
    OutOfRange { row: usize, col: usize, value: usize, order: usize },
    #[error("malformed structure document: {0}")]
    Parse(String),
    #[error("{0}")]
    Invalid(ValidationReport),
    #[error("unknown predicate `{0}`")]
    UnknownPredicate(String),
    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),
    #[error("{what} is limited to order {max}, got {order}")]
    SizeCap { what: &'static str, order: usize, max: usize },
    #[error("no structure found after {attempts} sampling attempts")]
    SamplingExhausted { attempts: usize },
    #[error("{0}")]
    Config(String),
}

impl Error {
    /// Input that could not be read as a table and relation at all, as
    /// opposed to data that breaks an axiom.
    pub fn is_parse_error(&self) -> bool {
        matches!(
            self,
            Error::Empty | Error::TooLarge { .. } | Error::SizeMismatch(_) | Error::OutOfRange { .. } | Error::Parse(_)
        )
    }
}
