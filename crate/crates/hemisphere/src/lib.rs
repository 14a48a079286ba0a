//! Command-line front end and file formats for `hemisphere-core`.
//!
//! Every command renders to a string so the same code path serves the binary
//! and the golden-output tests.

pub mod commands;
pub mod config;
pub mod format;
pub mod records;

pub use commands::{run, RunError};
pub use config::{Cli, CommandKind, OutputFormat, RunConfig};
