//! Command-line front end for the `starcolor` library: the coloring file
//! format, value tables and the subcommands behind the `starcolor` binary.

pub mod commands;
pub mod file_format;
pub mod report;
pub mod table;

pub use commands::{run, Cli, Command, CommandOutput};
pub use report::{Outcome, Report};
