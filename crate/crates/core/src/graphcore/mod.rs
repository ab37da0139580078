//! Graphs on `{0, .., n-1}` and the combinatorial enumerations the cone
//! descriptions are indexed by: neighbourhoods, induced cliques, connected and
//! biconnected subsets, acyclic orientations.

mod graph;
mod mask;
mod orientation;

pub use graph::{
    vertex_pairs, Graph, MAX_CLIQUE_SEARCH, MAX_ORIENTATION_SEARCH, MAX_VERTICES,
};
pub use mask::{SubsetMask, Submasks, Vertices};
pub use orientation::Orientation;
pub(crate) use orientation::permutation_positions;
