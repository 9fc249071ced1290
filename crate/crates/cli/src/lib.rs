//! Verification suites and command plumbing for `pnil`.

pub mod io;
pub mod properties;
pub mod report;
pub mod suites;

pub use report::{Record, SuiteReport, Verdict};
pub use suites::{run_suite, Params, SuiteError};
