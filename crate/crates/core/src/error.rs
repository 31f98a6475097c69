use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial division leaves a nonzero remainder")]
    NotDivisible,
    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,
    #[error("index {index} outside 1..={bound}")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("shifted block leaves 1..={bound}")]
    ShiftOutOfRange { bound: usize },
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("more than one column holds nonconstant polynomials")]
    MultiplePolyColumns,
    #[error("{cols} columns do not fit in {rows} rows")]
    TooManyColumns { rows: usize, cols: usize },
    #[error("removing {removed} of {rows} rows leaves a non-square matrix with {cols} columns")]
    NotSquareAfterRemoval { rows: usize, cols: usize, removed: usize },
    #[error("removing {removed} rows from k={k} does not match {columns} columns")]
    InconsistentRemovalCount { k: usize, removed: usize, columns: usize },
    #[error("Schur ratio over an empty point set is undefined for k={0}")]
    EmptyPoints(usize),
    #[error("d={d} outside the degree window for m={m}, n={n}")]
    DegreeWindow { m: usize, n: usize, d: usize },
    #[error("{0} must be a set (every multiplicity 1)")]
    MultiplicityNotOne(&'static str),
    #[error("need at least {needed} elements, got {got}")]
    TooFewElements { needed: usize, got: usize },
    #[error("|E|={got} is below the bound {needed}")]
    CardinalityTooSmall { needed: usize, got: usize },
    #[error("expected {expected} variables, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("validation error: {0}")]
    Validation(String),
}
