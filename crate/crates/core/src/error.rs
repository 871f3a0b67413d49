use thiserror::Error;

/// Errors produced by ingestion, the hull algorithms and the instance generators.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HullError {
    #[error("empty input")]
    EmptyInput,
    #[error("input is not sorted by x (position {position})")]
    NotSorted { position: usize },
    #[error("input of size {n} exceeds the brute-force limit {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("vertical line x={x0} does not separate the input")]
    NotSpanning { x0: i64 },
    #[error("points a and b share the x-coordinate {x}")]
    VerticalLine { x: i64 },
    #[error("coordinate {value} at position {position} is outside the supported range")]
    CoordinateOutOfRange { position: usize, value: i64 },
    #[error("general position violated: points {first} and {second} share {axis}-coordinate")]
    GeneralPosition { first: usize, second: usize, axis: char },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("hull has more than {budget} vertices")]
    BudgetExceeded { budget: usize },
    #[error("group straddles vertical line x={x0}")]
    GroupStraddles { x0: i64 },
}

pub type Result<T> = std::result::Result<T, HullError>;
