//! Exact combinatorics for hereditary graph classes: invariants (ω, χ, α,
//! girth, matchings, perfection), witnessing-partition machinery, structured
//! part-class counting and uniform sampling, the pattern/extension random
//! model, and the colour-class merging algorithm, together with the exhaustive
//! small-n censuses that back the experiment CLI.

mod bits;

pub mod catalog;
pub mod families;
pub mod graph;
pub mod invariants;
pub mod merge;
pub mod partitions;
pub mod sampling;

pub use graph::{are_isomorphic, induced_subgraph, Graph, GraphError, VertexSet};
