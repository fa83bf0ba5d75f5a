//! Parsing, command execution and report assembly for the `pns-lab` binary.

pub mod commands;
pub mod parser;
pub mod report;

pub use commands::{run, CliError, Exit};
pub use parser::{parse_element, parse_ring_expr, ParseError, RingExpr};
pub use report::CommandReport;
