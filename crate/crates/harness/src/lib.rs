//! Orchestration layer: deserializable instance descriptions, the named
//! verification suites, and newline-delimited JSON report output.
//!
//! The core library knows nothing about files or processes; this crate turns
//! an [`instance::InstanceSpec`] into concrete spaces/functionals/forms,
//! runs the requested [`suites::SuiteName`], and serializes
//! [`nhilbert_core::report::PropertyReport`] lines a CI system can diff.

pub mod instance;
pub mod report_io;
pub mod suites;

pub use instance::{generate_instance, GeneratedInstance, InstanceSpec};
pub use report_io::RunHeader;
pub use suites::{run_suite, SuiteName};
