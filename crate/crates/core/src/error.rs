use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },

    #[error("matrix is not positive semidefinite (eigenvalue {eigenvalue:e})")]
    NotPsd { eigenvalue: f64 },

    #[error("trace is {trace}, expected 1")]
    NotUnitTrace { trace: f64 },

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("column lengths differ: {features} feature values vs {labels} labels")]
    LengthMismatch { features: usize, labels: usize },

    #[error("contingency table has no observations")]
    AllZeroCounts,

    #[error("no candidate features to select from")]
    EmptyScoreList,

    #[error("cannot build a tree from an empty partition")]
    EmptyRootPartition,

    #[error("row has no value for feature {0}")]
    MissingFeatureValue(usize),

    #[error("malformed model: {0}")]
    MalformedModel(String),

    #[error("{path}:{line}: {message}")]
    Parse { path: PathBuf, line: u64, message: String },

    #[error("{path}:{line}: unknown label {label:?}")]
    UnknownLabel { path: PathBuf, line: u64, label: String },

    #[error("dataset {0} has no rows")]
    EmptyDataset(String),

    #[error("unknown dataset {0:?}")]
    UnknownDataset(String),

    #[error("split leaves {train} training and {test} test rows")]
    DegenerateSplit { train: usize, test: usize },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("{0} is undefined (zero denominator)")]
    UndefinedMetric(&'static str),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

/// Broad classes of failure, used by front ends to pick exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    Config,
    Data,
    Numerical,
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::InvalidConfig(_) | Error::UnknownDataset(_) => ErrorClass::Config,
            Error::NotSymmetric { .. }
            | Error::NotPsd { .. }
            | Error::NotUnitTrace { .. }
            | Error::DimensionMismatch { .. }
            | Error::AllZeroCounts
            | Error::EmptyScoreList
            | Error::UndefinedMetric(_) => ErrorClass::Numerical,
            _ => ErrorClass::Data,
        }
    }
}
