//! File formats, JSON/CSV reports and the command driver for `gridcycle-core`.

pub mod commands;
pub mod formats;
pub mod report;

pub use commands::{run, Cli, CliError};
