//! Decision trees whose split criterion compares the feature and class
//! registers of an amplitude-embedded contingency table.
//!
//! The usual entry points are [`build_tree`] for already categorical data and
//! [`run_experiment`] / [`run_benchmark`] for the split, discretize, fit and
//! evaluate pipeline on raw datasets.

pub mod criteria;
pub mod data;
pub mod embedding;
pub mod error;
pub mod evaluation;
pub mod linalg;
pub mod order;
pub mod tree;

pub use criteria::{select_best, CriterionKind, Direction, FeatureScore, TIE_TOLERANCE};
pub use data::{
    default_data_dir, discretize, load_csv, load_csv_inferred, prepare_builtin, train_test_split, BinStrategy, Builtin,
    CsvOptions, Dataset, DatasetSchema, Discretizer, FeatureKind, MissingPolicy, Row,
};
pub use embedding::{embed_state, AmplitudeMode, AmplitudeState, ContingencyTable};
pub use error::{Error, ErrorClass, Result};
pub use evaluation::{
    basic_metrics, clinical_metrics, confusion, emit_report, fit_model, run_benchmark, run_experiment, BenchmarkInput,
    ConfusionMatrix, EvaluationReport, Experiment, ReportFormat,
};
pub use linalg::{fidelity, partial_trace, von_neumann_entropy, DensityOperator, Subsystem, SymMatrix};
pub use tree::{build_tree, render, Model, SplitKind, SplitRule, TreeConfig, TreeNode, TreeStats};
