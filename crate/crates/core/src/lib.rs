//! Exact vertex and edge stability numbers of small graphs.
//!
//! The centrepiece is `vs_χ′(G)`, the fewest vertices whose deletion changes
//! the chromatic index (or leaves no edges). Everything is computed by
//! complete search on graphs of at most 64 vertices:
//!
//! - [`graph`]: bitset graphs, families, operators and elementary invariants;
//! - [`coloring`]: exact edge coloring, chromatic index, class, `t*`;
//! - [`stability`]: generic `vs_ρ` / `es_ρ` engines, `γ(V_Δ)`, closed forms;
//! - [`verify`]: a catalogue of stated results checked over graph corpora;
//! - [`io`]: graph6, edge lists and witness certificates;
//! - [`cli`]: the `chromstab` command line.

pub mod cli;
pub mod coloring;
pub mod graph;
pub mod io;
pub mod stability;
pub mod verify;

pub use coloring::{
    chromatic_index, edge_colorable, graph_class, t_star, verify_coloring, ClassLabel, EdgeColoring,
};
pub use graph::{FamilySpec, Graph, GraphError, VertexSet};
pub use stability::{es, vs, InvariantDescriptor, StabilityResult, Witness};
