//! Construction, composition, and certification of complete-graph edge
//! colorings that witness multicolor Ramsey lower bounds, plus capacity
//! lower bounds `alpha(G^n)^(1/n)` from exact independence-number search on
//! strong graph powers.
//!
//! Everything here is exact and deterministic: solvers return witnesses
//! that re-validate by direct pair checking, constructions document their
//! vertex orders, and serialized objects and certificates are byte-stable
//! across runs. All types are immutable after construction and every
//! operation is a pure function, safe to call from any number of threads.

mod bitset;

pub mod capacity;
pub mod catalog;
pub mod coloring;
pub mod config;
pub mod error;
pub mod graph;
pub mod io;
pub mod products;
pub mod solvers;

pub use capacity::{BoundReport, CapacityBound, CapacityRow, MajorityNeighborhood};
pub use coloring::{ColorMaxClique, ColoringSpec, EdgeColoring, VerificationReport};
pub use config::Config;
pub use error::{Error, Result};
pub use graph::Graph;
pub use products::ProductVertex;
pub use solvers::SearchResult;
