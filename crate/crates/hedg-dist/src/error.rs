use thiserror::Error;

/// Errors reported by distribution constructors and oracles.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum DistError {
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("variable `{0}` appears more than once")]
    DuplicateVariable(String),
    #[error("domain of `{0}` must hold at least one value")]
    EmptyDomain(String),
    #[error("table has {got} cells but the domains call for {expected}")]
    TableSizeMismatch { got: usize, expected: usize },
    #[error("cell {index} holds {value}, which is not a finite nonnegative probability")]
    InvalidProbability { index: usize, value: f64 },
    #[error("probabilities sum to {sum}, not 1")]
    NotNormalized { sum: f64 },
    #[error("value {value} lies outside the {card}-value domain of `{var}`")]
    ValueOutOfRange { var: String, value: u8, card: usize },
    #[error("assignment lists {got} values but {expected} variables are in scope")]
    AssignmentLength { got: usize, expected: usize },
    #[error("variable `{var}` has {expected} values in the distribution but {got} in the factor")]
    DomainMismatch {
        var: String,
        expected: usize,
        got: usize,
    },
    #[error("cliques leave variable `{0}` uncovered")]
    UncoveredVariable(String),
}
