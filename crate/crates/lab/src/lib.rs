//! Command-line runner and artifact formats for `bohr-core`.

pub mod commands;
pub mod config;
pub mod formats;
pub mod theorems;

pub use config::{Cli, Command, Settings, UsageError};
