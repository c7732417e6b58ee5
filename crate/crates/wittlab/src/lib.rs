//! Command-line front end for `wittlab-core`: input parsing, graph files,
//! JSON report types and the command implementations behind the `wittlab`
//! binary.

pub mod commands;
pub mod config;
pub mod input;
pub mod report;

use thiserror::Error;
use wittlab_core::Error as CoreError;

pub use config::{OutputFormat, RunConfig};

/// Process exit codes.
pub mod exit {
    pub const OK: u8 = 0;
    pub const INPUT: u8 = 2;
    pub const RESOURCE: u8 = 3;
    pub const NO_CONVERGENCE: u8 = 4;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    ResourceLimit(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn input(msg: impl Into<String>) -> Self {
        CliError::Input(msg.into())
    }

    pub fn from_core(e: CoreError) -> Self {
        match e {
            CoreError::TooManyVertices { .. } => CliError::ResourceLimit(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) | CliError::Io(_) => exit::INPUT,
            CliError::ResourceLimit(_) => exit::RESOURCE,
        }
    }
}

/// A rendered command result: the table text, the JSON record and the exit code.
#[derive(Debug)]
pub struct Output {
    pub table: String,
    pub json: serde_json::Value,
    pub code: u8,
}

impl Output {
    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Table => self.table.clone(),
            OutputFormat::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("JSON values serialize");
                s.push('\n');
                s
            }
        }
    }
}
