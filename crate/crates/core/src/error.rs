//! Error type shared across the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("column `{0}` not found in dataset")]
    MissingColumn(String),

    #[error("column `{name}` is {found}, expected {expected}")]
    ColumnType {
        name: String,
        expected: &'static str,
        found: &'static str,
    },

    #[error("cannot parse cell at row {row}, column `{column}`: `{value}`")]
    ParseCell {
        row: usize,
        column: String,
        value: String,
    },

    #[error("dataset has no rows after ingestion ({rejected} rows rejected for missing values)")]
    EmptyDataset { rejected: usize },

    #[error("io error reading `{path}`: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),

    #[error("roles overlap on column `{0}` (set allow_overlap to permit this)")]
    RoleOverlap(String),

    #[error("response `{column}` outside the {family} domain at rows {rows:?}")]
    ResponseDomain {
        column: String,
        family: &'static str,
        rows: Vec<usize>,
    },

    #[error("design matrix is rank deficient; collinear columns: {columns:?}")]
    SingularDesign { columns: Vec<String> },

    #[error("partition label {label} has no observations")]
    DegeneratePartition { label: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("design columns {got:?} do not match the fitted model's {expected:?}")]
    DesignMismatch {
        expected: Vec<String>,
        got: Vec<String>,
    },

    #[error("not enough observations: n = {n} with {k} design columns")]
    NotEnoughRows { n: usize, k: usize },

    #[error("treatment column `{0}` is not part of the varying regressors")]
    TreatmentNotVarying(String),

    #[error("treatment column `{0}` does not vary (all observations identical)")]
    TreatmentConstant(String),

    #[error("invalid control setting: {0}")]
    InvalidControl(String),

    #[error("model fit failed: {0}")]
    FitFailed(String),
}
