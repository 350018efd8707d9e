//! IO, JSON serialization, configuration, verification suites and the
//! numeric representation checks on top of `toruschar-core`.

mod cli;
pub mod config;
pub mod json;
pub mod repnum;
pub mod table;
pub mod verify;

pub use cli::run;
pub use toruschar_core as core;
