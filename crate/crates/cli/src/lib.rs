//! Command-line front end: single values, tables, polynomial extraction, verification suites,
//! conjecture scans, and a persistent memo cache.

pub mod app;
pub mod cache;
mod error;
pub mod output;
pub mod suites;

pub use error::CliError;
