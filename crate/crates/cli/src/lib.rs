//! Command-line front end: expression parsing, dispatch and JSON reports.

pub mod cli;
pub mod parse;
pub mod report;

pub use cli::{run, Cli, CliError};
pub use parse::{parse_list, parse_polynomial, ParseError};
pub use report::Report;
