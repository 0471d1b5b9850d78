//! Batch front end: JSON analysis configs in, JSON reports and CSV plot
//! data out. All numerical work lives in the `fokyp` crate; this crate
//! owns file formats, dispatch, and exit-code policy.

pub mod config;
pub mod jsonfmt;
pub mod report;
pub mod run;

pub use config::{AnalysisConfig, Command};
pub use report::AnalysisReport;
pub use run::{emit_eigs_csv, emit_sweep_csv, run_analysis, CliError, EXIT_INVALID_INPUT,
    EXIT_NUMERICAL, EXIT_OK, EXIT_UNDETERMINED};
