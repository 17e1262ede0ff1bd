use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("matrix is not square: {rows} rows, row {row} has {cols} entries")]
    NonSquare {
        rows: usize,
        row: usize,
        cols: usize,
    },

    #[error("matrix order {0} is too small, need at least 2 criteria")]
    TooSmall(usize),

    #[error("entry ({row},{col}) = {value} is not a positive finite number")]
    NonPositiveEntry { row: usize, col: usize, value: f64 },

    #[error("diagonal entry ({index},{index}) = {value}, expected 1")]
    DiagonalNotOne { index: usize, value: f64 },

    #[error("label {label:?} appears more than once")]
    DuplicateLabel { label: String },

    #[error("empty criterion label at position {0}")]
    EmptyLabel(usize),

    #[error("entry ({row},{col}) = {value} is outside the 1-9 rating scale")]
    OffScaleEntry { row: usize, col: usize, value: f64 },

    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("ragged row at line {line}: expected {expected} entries, found {found}")]
    RaggedRow {
        line: usize,
        expected: usize,
        found: usize,
    },

    #[error("row labels {rows:?} do not match column labels {columns:?}")]
    HeaderMismatch {
        rows: Vec<String>,
        columns: Vec<String>,
    },

    #[error("no random index available for matrix order {0}")]
    RiUnavailable(usize),

    #[error("random index for order {n} must be positive, got {value}")]
    InvalidRandomIndex { n: usize, value: f64 },

    #[error("weight {index} is zero, principal value undefined")]
    DegenerateWeight { index: usize },

    #[error("series needs at least 2 points, got {0}")]
    SeriesTooShort(usize),

    #[error("series {name:?}: {what} has length {found}, expected {expected}")]
    LengthMismatch {
        name: String,
        what: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("no transitions to summarize")]
    NoObservations,

    #[error("epsilon must be a non-negative finite number, got {0}")]
    InvalidEpsilon(f64),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
