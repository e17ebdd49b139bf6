//! Command-line surface for the exact Witt/Virasoro structure library:
//! the scalar-literal grammar, the JSON table format, and the command
//! implementations behind the `prelie-witt` binary.

pub mod commands;
pub mod error;
pub mod literal;
pub mod table;

pub use error::CliError;
