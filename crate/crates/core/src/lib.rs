//! Exact combinatorial and polyhedral tools for the total matching polytope.
//!
//! A *total matching* of a graph is a set of pairwise non-adjacent vertices and
//! edges. This crate enumerates and optimizes total matchings, generates the
//! known valid inequality families for their convex hull, lifts coefficients
//! sequentially, and certifies facets and complete linear descriptions with
//! exact rational arithmetic.
//!
//! Every vector in the crate uses the same coordinate order: the `n` vertices
//! first, then the `m` edges sorted lexicographically by endpoints.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![deny(rustdoc::broken_intra_doc_links)]

extern crate alloc;

mod bitset;
mod dd;
mod error;
pub mod generators;
pub mod graph;
pub mod ineq;
pub mod linalg;
pub mod polylab;
pub mod separation;
pub mod totalmatch;

pub use error::Error;
pub use graph::{Biclique, Element, Graph};
pub use ineq::{Family, LinearInequality, NormalizedInequality};
pub use linalg::RationalMatrix;
pub use polylab::{CompletenessReport, PolytopeRep};
pub use separation::{SeparationResult, Violation};
pub use totalmatch::TotalMatching;

/// Arbitrary-precision rational number.
pub type Rational = num_rational::BigRational;

/// Exact point or coefficient vector in element space.
pub type RationalVector = alloc::vec::Vec<Rational>;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Size caps for the exhaustive routines.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest `n + m` accepted by total matching enumeration.
    pub max_elements: usize,
    /// Largest ambient dimension accepted by the double description routines.
    pub max_hull_dim: usize,
    /// Largest biclique side scanned by separation and family generation.
    pub max_side: usize,
}

impl Limits {
    pub const DEFAULT_MAX_ELEMENTS: usize = 24;
    pub const DEFAULT_MAX_HULL_DIM: usize = 12;
    pub const DEFAULT_MAX_SIDE: usize = 4;

    /// Enumeration works on 64-bit element masks.
    pub const HARD_MAX_ELEMENTS: usize = 64;
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_elements: Self::DEFAULT_MAX_ELEMENTS,
            max_hull_dim: Self::DEFAULT_MAX_HULL_DIM,
            max_side: Self::DEFAULT_MAX_SIDE,
        }
    }
}
