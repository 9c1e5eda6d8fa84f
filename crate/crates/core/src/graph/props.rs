//! Elementary invariants.

use itertools::Itertools;

use super::{Graph, GraphError, VertexSet};

pub fn max_degree(g: &Graph) -> usize {
    (0..g.n()).map(|v| g.degree(v)).max().unwrap_or(0)
}

pub fn min_degree(g: &Graph) -> usize {
    (0..g.n()).map(|v| g.degree(v)).min().unwrap_or(0)
}

/// Vertices of maximum degree.
pub fn max_degree_vertices(g: &Graph) -> VertexSet {
    let d = max_degree(g);
    (0..g.n()).filter(|&v| g.degree(v) == d).collect()
}

/// Component count and vertex partition, parts ordered by smallest member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Components {
    pub parts: Vec<VertexSet>,
}

impl Components {
    pub fn count(&self) -> usize {
        self.parts.len()
    }
}

fn reach(g: &Graph, start: usize, alive: u64) -> u64 {
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0u64;
        for v in VertexSet::from_bits(frontier).iter() {
            next |= g.rows()[v];
        }
        next &= alive & !seen;
        seen |= next;
        frontier = next;
    }
    seen
}

fn parts_within(g: &Graph, alive: u64) -> Vec<VertexSet> {
    let mut left = alive;
    let mut parts = Vec::new();
    while left != 0 {
        let start = left.trailing_zeros() as usize;
        let comp = reach(g, start, alive);
        parts.push(VertexSet::from_bits(comp));
        left &= !comp;
    }
    parts
}

pub fn components(g: &Graph) -> Components {
    Components {
        parts: parts_within(g, g.vertices().bits()),
    }
}

/// The graph on zero vertices counts as disconnected.
pub fn is_connected(g: &Graph) -> bool {
    g.n() > 0 && reach(g, 0, g.vertices().bits()) == g.vertices().bits()
}

pub fn is_complete(g: &Graph) -> bool {
    g.m() * 2 == g.n() * g.n().saturating_sub(1)
}

pub fn is_bipartite(g: &Graph) -> bool {
    let mut side = vec![None::<bool>; g.n()];
    for root in 0..g.n() {
        if side[root].is_some() {
            continue;
        }
        side[root] = Some(false);
        let mut stack = vec![root];
        while let Some(u) = stack.pop() {
            let s = side[u].expect("assigned before push");
            for v in g.neighbors(u).iter() {
                match side[v] {
                    None => {
                        side[v] = Some(!s);
                        stack.push(v);
                    }
                    Some(t) if t == s => return false,
                    Some(_) => {}
                }
            }
        }
    }
    true
}

/// Odd order and more than `Δ·(n−1)/2` edges.
pub fn is_overfull(g: &Graph) -> bool {
    let n = g.n();
    n % 2 == 1 && 2 * g.m() > max_degree(g) * (n - 1)
}

/// Vertex connectivity: the fewest vertices whose removal leaves a
/// disconnected graph or `K_1`.
///
/// `κ(K_n) = n − 1`, and a disconnected graph has `κ = 0`. Otherwise the
/// smallest vertex cut is found by trying removal sets of increasing size.
pub fn connectivity(g: &Graph) -> Result<usize, GraphError> {
    let n = g.n();
    if n == 0 {
        return Err(GraphError::NoVertices);
    }
    if is_complete(g) {
        return Ok(n - 1);
    }
    if !is_connected(g) {
        return Ok(0);
    }
    let all = g.vertices().bits();
    // a non-complete graph has two non-adjacent vertices, so a cut of size ≤ n−2 exists
    for k in 1..=n - 2 {
        for cut in (0..n).combinations(k) {
            let alive = all & !VertexSet::from_iter(cut).bits();
            let start = alive.trailing_zeros() as usize;
            if reach(g, start, alive) != alive {
                return Ok(k);
            }
        }
    }
    unreachable!("non-complete connected graph without a vertex cut")
}
