use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),

    #[error("CSV error: {0}")]
    Csv(#[from] csv::Error),

    #[error("row {row} has {found} fields, header has {expected}")]
    RaggedRow {
        row: usize,
        expected: usize,
        found: usize,
    },

    #[error("table has no data rows")]
    EmptyTable,

    #[error("table needs at least one conditional column and a decision column")]
    TooFewColumns,

    #[error("duplicate column name `{0}`")]
    DuplicateColumn(String),

    #[error("unknown column `{0}`")]
    UnknownColumn(String),

    #[error("value `{value}` in numeric column `{column}` (row {row}) is not a number")]
    NumericParse {
        column: String,
        row: usize,
        value: String,
    },

    #[error("attribute index {0} out of range")]
    AttributeOutOfRange(usize),

    #[error("attribute `{0}` is the decision attribute")]
    DecisionAttribute(String),

    #[error("attribute `{0}` is not numeric")]
    NotNumeric(String),

    #[error("conditional attribute `{0}` is numeric; discretize it first")]
    NumericConditional(String),

    #[error("bin count must be at least 1")]
    InvalidBins,

    #[error("value map for `{0}` is not a bijection of its value ids")]
    NotBijective(String),

    #[error("object index {index} out of range for a universe of {size}")]
    ObjectOutOfRange { index: usize, size: usize },

    #[error("both parts of a universe split must be non-empty")]
    EmptySplit,

    #[error("universe size mismatch: {left} vs {right}")]
    UniverseMismatch { left: usize, right: usize },

    #[error("invalid contingency table: {0}")]
    InvalidTable(&'static str),

    #[error("cell ({row}, {col}) outside a {rows}x{cols} table")]
    CellOutOfRange {
        row: usize,
        col: usize,
        rows: usize,
        cols: usize,
    },

    #[error("{count} conditional attributes exceed the enumeration cap of {cap}")]
    CapExceeded { count: usize, cap: usize },

    #[error("invalid fold count {k} for a universe of {size} objects")]
    InvalidFolds { k: usize, size: usize },

    #[error("prediction and truth lists differ in length ({predictions} vs {truths})")]
    LengthMismatch { predictions: usize, truths: usize },

    #[error("no predictions to score")]
    EmptyInput,

    #[error("row has {found} values but the model reads attribute {needed}")]
    MissingValue { needed: usize, found: usize },

    #[error("bad config line {line}: {reason}")]
    Config { line: usize, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
