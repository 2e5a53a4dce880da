//! Command-line front end for the `qcag` verification engine.

pub mod commands;
pub mod parser;
mod selftest;

use thiserror::Error;

pub use commands::{run, Cli, Output};
pub use parser::{parse_any, parse_expr, ExprAST, ParseError};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    /// A request that would exceed the supported symbolic sizes.
    #[error("refused: {0}")]
    Refused(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Core(#[from] qcag::Error),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}
