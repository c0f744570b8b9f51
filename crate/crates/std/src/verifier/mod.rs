//! Exhaustive and sampled checks of the spectral extremal results, each
//! producing a [`Report`].

mod appendix;
mod claims;
mod corollary;
mod enumerate;
mod parallel;
mod properties;
mod report;
pub mod sampling;
mod theorem;

use trebly_core::graph::Family;
use trebly_core::Graph;

pub use appendix::{verify_appendix, PRINTED_VALUES};
pub use claims::{check_claims, ClaimBounds, ClaimTally};
pub use corollary::{replay_corollary, verify_corollary, CorollaryOptions};
pub use enumerate::{enumerate_graphs, Constraints, Enumeration, MAX_ENUMERATION_ORDER};
pub use parallel::default_jobs;
pub use properties::{property_suite, PropertyOptions, SUITES};
pub use report::{diff_reports, Detail, Report, COUNTEREXAMPLE_CAP};
pub use theorem::{replay_theorem, verify_theorem_main, TheoremOptions};

/// Float gaps below this are settled by exact root comparison.
pub const NEAR_TIE: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum VerifyError {
    #[error("n = {n} is not supported here (supported: {supported})")]
    UnsupportedOrder { n: usize, supported: &'static str },
    #[error("n = 8 needs the explicit opt-in")]
    NeedsOptIn,
    #[error("invalid range {lo}..={hi} (need {need})")]
    InvalidRange {
        lo: usize,
        hi: usize,
        need: &'static str,
    },
    #[error("trials must be at least 1")]
    NoTrials,
}

/// The graph the theorem singles out at order `n`.
pub fn extremal_graph(n: usize) -> Graph {
    let family = if n == 6 {
        Family::K1JoinK4UnionK1
    } else {
        Family::K11n2Plus { n }
    };
    family
        .graph()
        .expect("extremal graph is defined for n >= 6")
}

fn elapsed_ms(start: std::time::Instant) -> u64 {
    start.elapsed().as_millis() as u64
}
