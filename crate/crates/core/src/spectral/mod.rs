//! Signless Laplacian spectra: numeric index, exact characteristic
//! polynomials, root isolation and quotient matrices.

pub mod appendix;
mod charpoly;
mod compare;
mod eta;
mod matrix;
mod poly;
mod power;
mod quotient;
mod roots;

pub use charpoly::charpoly;
pub use compare::{q_charpoly, q_compare_rational, q_exact_compare};
pub use eta::{eta, max_eta, IsolatedVertex};
pub use matrix::{signless_laplacian, IntMatrix, SymMatrix};
pub use poly::{IntPolynomial, PolyParseError};
pub use power::{
    q_index, q_index_capped, q_value, SpectralError, SpectralResult, DEFAULT_TOLERANCE,
    MAX_ITERATIONS,
};
pub use quotient::{quotient_matrix, PartitionError, QuotientMatrix};
pub use roots::{
    compare_largest_roots, compare_largest_roots_in, largest_root_f64, LargestRoot, SturmSequence,
};
