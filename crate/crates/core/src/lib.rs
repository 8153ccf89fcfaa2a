//! Exact enumeration of tensions, flows and complementary tension-flows of
//! multigraphs, together with the polynomials they generate.
//!
//! The crate computes the modular and integral complementary polynomials
//! `κ`, `κ_ℤ` and their duals `κ̄`, `κ̄_ℤ` by brute-force lattice counting
//! followed by exact interpolation, and checks them against the Tutte and
//! rank-generating polynomials computed independently by deletion-contraction
//! and subset expansion.
//!
//! ```
//! use tfpoly::{example_graph, tutte};
//!
//! let g = example_graph();
//! assert_eq!(tutte(&g).to_string(), "y^3+x^2+2*x*y+2*y^2+x+y");
//! ```

pub mod count;
pub mod error;
pub mod example;
pub mod graph;
pub mod group;
mod lattice;
pub mod orientation;
pub mod poly;
pub mod polys;
pub mod tfspace;
pub mod tutte;
pub mod verify;

pub use count::{count, CountQuery, Family};
pub use error::{Error, Result};
pub use example::{example_graph, example_report};
pub use graph::{parse_graph, Edge, EdgeSet, ForestData, GraphStats, MultiGraph};
pub use group::GroupShape;
pub use orientation::{
    classify, coupling, enumerate_classes, equivalent, indicator, minty_partition, ClassPartition, Filter,
    MintyPartition, Orientation, OrientationClassification, Relation,
};
pub use poly::{interpolate, BivariatePolynomial};
pub use polys::{counting_polynomial, local_polynomial, PolynomialReport};
pub use tfspace::{EdgeVector, TensionFlowPair};
pub use tutte::{rank_generating, tutte};
pub use verify::{verify_corpus, verify_graph, IdentityEntry, IdentityReport, Status};

/// Limits on the exhaustive sweeps. Every enumerator checks its share up
/// front and fails with [`Error::BudgetExceeded`] instead of running away.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Largest edge count for which all `2^|E|` orientations are scanned.
    pub max_orientation_edges: usize,
    /// Largest edge count for pairwise equivalence-class construction.
    pub max_class_edges: usize,
    /// Largest edge count for subset expansions over `2^|E|` edge sets.
    pub max_subset_edges: usize,
    /// Largest number of candidate lattice points in one box enumeration.
    pub max_candidates: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_orientation_edges: 20, max_class_edges: 12, max_subset_edges: 20, max_candidates: 200_000_000 }
    }
}
