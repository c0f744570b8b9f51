//! Command line, reports and verification drivers on top of `trebly-core`.
//!
//! * [`verifier`] runs the exhaustive theorem and corollary checks, the
//!   appendix identity suite and the seeded property suites, each returning
//!   a [`verifier::Report`] that serializes to JSON or a text table.
//! * [`cli`] implements the `trebly` binary.

pub mod cli;
pub mod verifier;

pub use trebly_core as core;
