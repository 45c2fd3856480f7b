//! Command-line driver for `fn3-core`: JSON file formats, the `fn3`
//! subcommands and the seeded verification suites.

pub mod cli;
pub mod commands;
pub mod config;
pub mod dto;
pub mod error;
pub mod suites;

pub use config::RunConfig;
pub use error::{CliError, Result};
