//! Command-line front end: exact-value serialization, analysis reports,
//! verification suites and catalog processing.

pub mod catalog_io;
pub mod cli;
pub mod exact;
pub mod report;
pub mod suites;
