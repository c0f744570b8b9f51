//! Algorithmic core for studying signless Laplacian index conditions that
//! force trebly chorded cycles.
//!
//! The crate is `no_std` and only needs `alloc`. It contains:
//!
//! * [`graph`]: bit-set graphs on up to [`graph::MAX_VERTICES`] vertices, the
//!   named extremal families, apex partitions, pairwise isomorphism and the
//!   graph6 codec.
//! * [`spectral`]: the signless Laplacian `Q(G) = A(G) + D(G)`, its spectral
//!   radius by shifted power iteration, exact characteristic polynomials,
//!   equitable quotient matrices, the `eta` degree bound and the closed-form
//!   polynomials of the extremal families.
//! * [`chords`]: certificate searches for cycles with `k` chords at a common
//!   vertex and for generally chorded cycles, plus an independent checker.
//!
//! IO, reports and the command line live in the companion `trebly` crate.

#![cfg_attr(not(test), no_std)]
#![allow(clippy::needless_range_loop)]

extern crate alloc;

pub mod chords;
pub mod graph;
pub mod spectral;

#[cfg(any(test, feature = "oracle"))]
pub mod oracle;

pub use chords::Certificate;
pub use graph::{Graph, GraphError, VertexSet};
pub use spectral::{IntPolynomial, SpectralResult};
