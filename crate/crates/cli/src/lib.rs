//! Command-line front end, expression syntax and report formats.

pub mod commands;
pub mod expr;
pub mod report;

pub use commands::{run_command, Cli, CliError, Command};
pub use expr::{parse_element, parse_polynomial, ParseError};
pub use report::{emit_report, Format, ReportDocument};
