//! Library half of the CLI: output schemas and command implementations,
//! separated from the binary so integration tests can exercise them directly.

pub mod commands;
pub mod output;
