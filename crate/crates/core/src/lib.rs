//! Rainbow k-connectivity of random bipartite graphs `G(m, n, p)`.
//!
//! The crate samples random bipartite graphs, colors their edges, decides
//! whether every vertex pair is joined by `k` internally vertex-disjoint
//! rainbow paths, grows the leveled trees that certify many disjoint paths
//! of a fixed length, evaluates the closed-form threshold quantities and
//! runs seeded Monte Carlo sweeps around the predicted thresholds.
//!
//! Module map:
//!
//! - [`graph`]: bipartite graphs, `G(m, n, p)` sampling, BFS and diameter.
//! - [`coloring`]: edge colorings and their text format.
//! - [`rainbow`]: rainbow path predicates and the rainbow k-connectivity checker.
//! - [`tree`]: the leveled tree-growing process and disjoint path extraction.
//! - [`thresholds`]: threshold functions, regime predicates and tail bounds.
//! - [`experiments`]: the sweep harness, CSV/JSON persistence and crossing estimates.

pub mod coloring;
pub mod error;
pub mod experiments;
pub mod graph;
pub mod rainbow;
pub mod rng;
pub mod thresholds;
pub mod tree;

pub use coloring::{random_coloring, EdgeColoring};
pub use error::{Error, Result};
pub use graph::{sample_gnp, BipartiteGraph, Path, Side, Vertex};
