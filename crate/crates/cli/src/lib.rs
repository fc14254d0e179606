//! Verification suites, table emission and argument parsing for the `qb`
//! command-line tool.

pub mod args;
pub mod error;
pub mod report;
pub mod table;
pub mod verify;

pub use error::{CliError, CliResult};
pub use report::IdentityReport;
pub use verify::{run_verify_suite, Suite, SuiteConfig};
