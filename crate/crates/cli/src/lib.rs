//! Graph I/O, search drivers and the claim verification registry behind
//! the `wiener` binary.

pub mod claims;
pub mod commands;
pub mod error;
pub mod graph6;
pub mod io;
pub mod report;

pub use claims::{ClaimResult, Settings, Status, REGISTRY};
pub use error::{CliError, CliResult};
