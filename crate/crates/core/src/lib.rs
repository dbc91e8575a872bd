//! Exact deciders for modulo-3 orientations (nowhere-zero 3-flows),
//! Z3-connectivity and Z3-reductions of small loopless multigraphs.
//!
//! The crate is organised bottom-up:
//!
//! - [`graph`]: the multigraph model with stable vertex and edge ids,
//!   cuts, contraction and lifting.
//! - [`connectivity`]: edge, odd and essential edge-connectivity and the
//!   independence number.
//! - [`orientation`]: prescribed-imbalance orientations, mod-3
//!   orientations, Z3 boundaries and Z3-connectivity.
//! - [`reduction`]: Z3-subgraph search, Z3-reduction, wheels,
//!   W-contraction and vertex splitting.
//! - [`catalog`]: named graphs and families with their known properties.
//! - [`verify`]: the r(n, Z3) table, family predicates and seeded sweeps.
//!
//! Searches that fan out over independent candidates use rayon when the
//! `parallel` feature is on (the default); results never depend on the
//! schedule.

pub mod canon;
pub mod catalog;
pub mod connectivity;
pub mod error;
pub mod gen;
pub mod graph;
pub mod io;
pub mod maxflow;
pub mod orientation;
pub mod par;
pub mod reduction;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Edge, EdgeId, Multigraph, Orientation, ReductionTrace, VertexId, VertexSet};
