//! Configuration, suite orchestration and JSON reporting for the `cqg` tool.
//!
//! A run is described by a [`RunConfig`], a single JSON document whose
//! fields can be overridden from the command line.  [`run_suite`] validates
//! the configuration before any check runs, executes the selected
//! verification suites and assembles a [`Report`].  Check records are sorted
//! by name, so identical configurations produce byte-identical reports up to
//! the `runtime_ms` fields.  The one-shot computations behind the
//! `normalform`, `coproduct`, `antipode`, `membership` and `limit`
//! subcommands live in [`oneshot`].

pub mod config;
pub mod error;
pub mod oneshot;
pub mod report;
pub mod suites;

pub use config::{Overrides, RunConfig, Suite};
pub use error::{CliError, Result};
pub use report::{CheckRecord, Conventions, Report, Status, Summary};
pub use suites::run_suite;
