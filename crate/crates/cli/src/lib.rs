//! Command-line front end for `encone-core`: orbit listings, Hasse diagrams
//! and polynomial tables as JSON, CSV or DOT, plus a verification harness
//! that checks the exact tables against finite-field enumeration.
//!
//! Tables are memoized per `n` in a [`TableCache`]; orbit enumeration is
//! split into chunks and run on the rayon pool.

pub mod app;
pub mod commands;
pub mod config;
pub mod error;
pub mod memo;
pub mod output;
pub mod parallel;
pub mod verify;

pub use app::run;
pub use commands::{cmd_hasse, cmd_qn, cmd_tables, Which};
pub use config::{Format, RunConfig};
pub use error::CliError;
pub use memo::TableCache;
pub use verify::{cmd_verify, Outcome, Status, VerifyReport};
