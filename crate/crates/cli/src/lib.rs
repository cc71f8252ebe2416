//! Batch front end: scenario files in, JSON or text reports out.
//!
//! Three pipelines share one loader: [`pipeline::run_compute`],
//! [`pipeline::run_verify`] and [`pipeline::run_tables`].

pub mod pipeline;
pub mod report;
pub mod scenario;
pub mod text;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("validation error: {0}")]
    Validation(String),
    #[error("computation failed: {0}")]
    Compute(String),
}

impl CliError {
    /// Process exit code: 2 for bad input, 1 for a failed computation.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Validation(_) => 2,
            CliError::Compute(_) => 1,
        }
    }
}

pub use pipeline::{run_compute, run_tables, run_verify, Pipeline};
pub use report::CohomologyReport;
pub use scenario::{builtin, load_scenario, load_scenario_str, Overrides, Scenario};
