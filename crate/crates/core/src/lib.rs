//! Spanning tree congestion of connected plane graphs.
//!
//! The crate computes `ec(G:T)` for a spanning tree `T` in two independent
//! ways, bounds `s(G) = min_T ec(G:T)` from below with center-tail systems in
//! the dual graph and from above with breadth-first dual trees, and finds
//! `s(G)` exactly for small graphs. Generators cover triangular,
//! rectangular and hexagonal grids and the spiderweb graph.
//!
//! ```
//! use planar_stc::grids::{canonical_cts, closed_form};
//! use planar_stc::dual_bounds::{bfs_upper_bound, congestion_indicator};
//!
//! let (grid, system) = canonical_cts(5).unwrap();
//! let lower = congestion_indicator(&grid.graph, &system).unwrap().value.unwrap();
//! let upper = bfs_upper_bound(&grid.graph).ec;
//! assert_eq!((lower, upper), (6, 6));
//! assert_eq!(closed_form(5), 6);
//! ```

pub mod congestion;
pub mod dual_bounds;
pub mod exact;
pub mod format;
pub mod grids;
pub mod plane_graph;
pub mod random;
pub mod render;

pub use congestion::{
    branch_decomposition, dual_tree, edge_congestion, edge_congestion_cuts, edge_congestion_dual,
    verify_tree, BranchDecomposition, CongestionReport, DualTree, SpanningTree, TreeError,
};
pub use dual_bounds::{
    absolute_index, best_lower_bound, bfs_upper_bound, congestion_indicator, index_table,
    validate_cts, CenterTailSystem, CongestionIndicator,
};
pub use exact::{exact_stc, Budget, ExactError, ExactOutcome};
pub use plane_graph::{Dart, DualGraph, EdgeId, Face, FaceId, GraphError, PlaneGraph, VertexId};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/plane-graphs.md")]
    mod plane_graphs {}
    #[doc = include_str!("../../../book/src/congestion.md")]
    mod congestion {}
    #[doc = include_str!("../../../book/src/bounds.md")]
    mod bounds {}
    #[doc = include_str!("../../../book/src/triangular-grids.md")]
    mod triangular_grids {}
    #[doc = include_str!("../../../book/src/exact-search.md")]
    mod exact_search {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
