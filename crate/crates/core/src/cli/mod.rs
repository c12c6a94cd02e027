//! Model documents, command dispatch and reports behind the `rbsys` binary.

mod commands;
mod document;
mod report;

pub use commands::{digest, exit_code, run_command, run_text, CliError, Command, Options};
pub use document::{emit_model, parse_model, DocumentError, ModelDocument, NamedTensor, TwoTermSpec};
pub use report::{Check, Format, Report};
