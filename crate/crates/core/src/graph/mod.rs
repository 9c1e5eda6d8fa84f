//! Small simple undirected graphs on at most 64 vertices.
//!
//! Adjacency is stored as one `u64` row per vertex so vertex sets, closed
//! neighbourhoods and induced subgraphs are word operations. Every
//! [`Graph`] is immutable once built; the operators in [`ops`] return new
//! values.

pub mod enumerate;
pub mod families;
pub mod ops;
pub mod props;

use std::fmt;

use thiserror::Error;

pub use enumerate::{enumerate_labeled_graphs, labeled_corpus, LabeledGraphs, ENUMERATION_CAP};
pub use families::{generate, FamilySpec};
pub use ops::{complement, corona, delete_edges, delete_vertices, join, union};
pub use props::{
    components, connectivity, is_bipartite, is_complete, is_connected, is_overfull, max_degree,
    max_degree_vertices, min_degree, Components,
};

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph would have {0} vertices; at most {MAX_VERTICES} are supported")]
    TooManyVertices(usize),
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    EndpointOutOfRange { u: usize, v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("vertex set {set} is not a subset of 0..{n}")]
    NotASubset { set: VertexSet, n: usize },
    #[error("edge ({0}, {1}) is not an edge of the graph")]
    MissingEdge(usize, usize),
    #[error("malformed family spec: {0}")]
    MalformedFamily(String),
    #[error("operation needs at least one vertex")]
    NoVertices,
}

/// A set of vertices, bit `v` set iff vertex `v` is a member.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    /// All vertices `0..n`.
    pub fn full(n: usize) -> Self {
        VertexSet(low_mask(n))
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// True iff every member lies in `0..n`.
    pub fn fits(self, n: usize) -> bool {
        self.is_subset(VertexSet::full(n))
    }

    /// Members in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        BitIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("]")
    }
}

struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Immutable simple undirected graph on vertices `0..n`.
///
/// `edges` is the canonical edge list: pairs `(u, v)` with `u < v`, sorted
/// lexicographically. Edge indices used by colorings refer to this order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting anything that is not a
    /// simple graph.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::EndpointOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if adj[u] >> v & 1 == 1 {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            adj[u] |= 1u64 << v;
            adj[v] |= 1u64 << u;
        }
        Ok(Graph::from_rows(adj))
    }

    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        Graph::new(n, &[])
    }

    /// Builds from adjacency rows that are already symmetric and loop-free.
    pub(crate) fn from_rows(adj: Vec<u64>) -> Graph {
        let n = adj.len();
        debug_assert!(n <= MAX_VERTICES);
        let mut edges = Vec::new();
        for (u, &row) in adj.iter().enumerate() {
            debug_assert_eq!(row >> u & 1, 0, "self-loop at {u}");
            for v in BitIter(row & !low_mask(u + 1)) {
                debug_assert_eq!(adj[v] >> u & 1, 1, "asymmetric row {u}-{v}");
                edges.push((u, v));
            }
        }
        Graph { n, adj, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Whether the edge set is empty.
    pub fn is_edgeless(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v] | 1u64 << v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Index of `{u, v}` in the canonical edge list.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    pub(crate) fn rows(&self) -> &[u64] {
        &self.adj
    }

    /// Subgraph induced by `keep`, relabelled to `0..|keep|` preserving order.
    pub fn induced(&self, keep: VertexSet) -> Graph {
        let keep = keep.bits() & low_mask(self.n);
        let rows = BitIter(keep)
            .map(|v| compress(self.adj[v] & keep, keep))
            .collect();
        Graph::from_rows(rows)
    }

    /// Same vertex set, only the edges whose indices are not in `removed`.
    pub(crate) fn without_edge_indices(&self, removed: &[usize]) -> Graph {
        let mut adj = self.adj.clone();
        for &i in removed {
            let (u, v) = self.edges[i];
            adj[u] &= !(1u64 << v);
            adj[v] &= !(1u64 << u);
        }
        Graph::from_rows(adj)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// Packs the bits of `x` selected by `mask` into the low bits.
fn compress(x: u64, mask: u64) -> u64 {
    let mut out = 0u64;
    for (i, v) in BitIter(mask).enumerate() {
        out |= (x >> v & 1) << i;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn make_graph_examples() {
        let k2 = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(k2.m(), 1);
        let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.edges(), &[(0, 1), (1, 2)]);
        assert_eq!(p3.degree(1), 2);
        assert_eq!(
            Graph::new(3, &[(0, 1), (1, 1)]),
            Err(GraphError::SelfLoop(1))
        );
    }

    #[test]
    fn make_graph_rejects_bad_input() {
        assert_eq!(
            Graph::new(2, &[(0, 2)]),
            Err(GraphError::EndpointOutOfRange { u: 0, v: 2, n: 2 })
        );
        assert_eq!(
            Graph::new(3, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert_eq!(Graph::new(65, &[]), Err(GraphError::TooManyVertices(65)));
    }

    #[test]
    fn edges_are_canonical() {
        let g = Graph::new(4, &[(3, 1), (2, 0), (1, 0)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 3)]);
        assert_eq!(g.edge_index(3, 1), Some(2));
        assert_eq!(g.edge_index(2, 3), None);
    }

    #[test]
    fn induced_relabels_in_order() {
        // path 0-1-2-3, keep {0, 2, 3}
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let h = g.induced(VertexSet::from_iter([0, 2, 3]));
        assert_eq!(h.n(), 3);
        assert_eq!(h.edges(), &[(1, 2)]);
    }

    #[test]
    fn sixty_four_vertices_fit() {
        let edges: Vec<_> = (0..63).map(|i| (i, i + 1)).collect();
        let g = Graph::new(64, &edges).unwrap();
        assert_eq!(g.m(), 63);
        assert_eq!(g.degree(63), 1);
        assert_eq!(g.induced(VertexSet::full(64)), g);
    }

    #[test]
    fn vertex_set_display() {
        let s = VertexSet::from_iter([4, 0, 2]);
        assert_eq!(s.to_string(), "[0, 2, 4]");
        assert_eq!(s.len(), 3);
        assert!(s.fits(5));
        assert!(!s.fits(4));
    }
}
