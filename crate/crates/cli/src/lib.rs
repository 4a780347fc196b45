//! Command-line driver: configuration, subcommands, structured reports and the
//! verification harness.

pub mod commands;
pub mod config;
pub mod report;
pub mod verify;

pub use commands::run;
pub use config::{Cli, Command, RunConfig};
pub use report::{Check, Claim, Provenance, Report, Status, Verdict};
