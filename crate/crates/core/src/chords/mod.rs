//! Cycles with many chords: witness searches and a checker.
//!
//! A chord of a cycle `C` is an edge of `G` joining two vertices of `C` that
//! are not consecutive on it. "At least `k` chords" is the reading used
//! throughout.

mod apex;
mod certificate;
mod general;
mod longest;
mod verify;

pub use apex::{find_k_chords_at, find_k_chords_at_apex};
pub use certificate::{Certificate, CertificateParseError};
pub use general::find_chorded_cycle;
pub use longest::{longest_cycle, max_path_order, SearchError, SUBSET_LIMIT};
pub use verify::verify_certificate;

#[cfg(test)]
mod tests;
