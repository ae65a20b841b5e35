//! Library behind the `ordkit` binary: argument types, command runners and
//! the JSON documents they emit.

pub mod args;
mod commands;
mod dispatch;
pub mod output;
mod svg;

use args::Cli;
use ordkit_core::circular::CircularError;
use ordkit_core::orders::OrderError;
use ordkit_core::realization::RealizationError;
use ordkit_core::GroupError;
use output::{schema, ErrorDoc};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Order(#[from] OrderError),
    #[error(transparent)]
    Circular(#[from] CircularError),
    #[error(transparent)]
    Realization(#[from] RealizationError),
    #[error("{message}")]
    Domain { kind: String, message: String },
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
}

fn variant_name(debug: String) -> String {
    debug
        .split(|c: char| !c.is_alphanumeric())
        .next()
        .unwrap_or_default()
        .to_string()
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }

    /// Machine-readable kind, the name of the underlying error variant.
    pub fn kind(&self) -> String {
        match self {
            CliError::Usage(_) => "Usage".into(),
            CliError::Group(e) => variant_name(format!("{e:?}")),
            CliError::Order(OrderError::Group(e)) => variant_name(format!("{e:?}")),
            CliError::Order(e) => variant_name(format!("{e:?}")),
            CliError::Circular(CircularError::Order(e)) => variant_name(format!("{e:?}")),
            CliError::Circular(e) => variant_name(format!("{e:?}")),
            CliError::Realization(e) => variant_name(format!("{e:?}")),
            CliError::Domain { kind, .. } => kind.clone(),
            CliError::Io(_) => "Io".into(),
            CliError::Csv(_) => "Csv".into(),
        }
    }

    pub fn to_doc(&self) -> ErrorDoc {
        ErrorDoc {
            schema: schema("error"),
            kind: self.kind(),
            message: self.to_string(),
        }
    }
}

/// Runs a parsed command line and returns its primary output.
pub fn run(cli: &Cli) -> Result<String, CliError> {
    commands::run(cli)
}
