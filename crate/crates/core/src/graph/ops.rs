//! Graph operators: disjoint union, join, corona, complement, deletions.

use super::{low_mask, Graph, GraphError, VertexSet, MAX_VERTICES};

fn check_size(n: usize) -> Result<(), GraphError> {
    if n > MAX_VERTICES {
        Err(GraphError::TooManyVertices(n))
    } else {
        Ok(())
    }
}

/// Places `h` after `g`: rows for a graph on `n(g) + n(h)` vertices.
fn stacked_rows(g: &Graph, h: &Graph) -> Result<Vec<u64>, GraphError> {
    let n = g.n() + h.n();
    check_size(n)?;
    let shift = g.n();
    let mut rows = g.rows().to_vec();
    rows.extend(h.rows().iter().map(|&r| r << shift));
    Ok(rows)
}

/// Disjoint union; `h`'s vertices become `n(g)..n(g)+n(h)`.
pub fn union(g: &Graph, h: &Graph) -> Result<Graph, GraphError> {
    Ok(Graph::from_rows(stacked_rows(g, h)?))
}

/// Disjoint union plus every edge between the two sides.
pub fn join(g: &Graph, h: &Graph) -> Result<Graph, GraphError> {
    let mut rows = stacked_rows(g, h)?;
    let left = low_mask(g.n());
    let right = low_mask(g.n() + h.n()) & !left;
    for (v, row) in rows.iter_mut().enumerate() {
        *row |= if v < g.n() { right } else { left };
    }
    Ok(Graph::from_rows(rows))
}

/// Corona `g ∘ h`: vertex `i` of `g` is joined to all of copy `i` of `h`.
///
/// Copy `i` occupies vertices `n(g) + i·n(h) .. n(g) + (i+1)·n(h)`.
pub fn corona(g: &Graph, h: &Graph) -> Result<Graph, GraphError> {
    let (ng, nh) = (g.n(), h.n());
    let n = ng
        .checked_mul(nh + 1)
        .ok_or(GraphError::TooManyVertices(usize::MAX))?;
    check_size(n)?;
    let mut rows = vec![0u64; n];
    rows[..ng].copy_from_slice(g.rows());
    for i in 0..ng {
        let base = ng + i * nh;
        let copy = low_mask(nh) << base;
        rows[i] |= copy;
        for (j, &hrow) in h.rows().iter().enumerate() {
            rows[base + j] = hrow << base | 1u64 << i;
        }
    }
    Ok(Graph::from_rows(rows))
}

pub fn complement(g: &Graph) -> Graph {
    let all = low_mask(g.n());
    let rows = g
        .rows()
        .iter()
        .enumerate()
        .map(|(v, &r)| !r & all & !(1u64 << v))
        .collect();
    Graph::from_rows(rows)
}

/// Induced subgraph on `V ∖ s`, relabelled to `0..n−|s|`.
///
/// The returned map sends each old vertex to its new label, or `None` if it
/// was removed.
pub fn delete_vertices(g: &Graph, s: VertexSet) -> Result<(Graph, Vec<Option<usize>>), GraphError> {
    if !s.fits(g.n()) {
        return Err(GraphError::NotASubset { set: s, n: g.n() });
    }
    let keep = g.vertices().difference(s);
    let mut map = vec![None; g.n()];
    for (new, old) in keep.iter().enumerate() {
        map[old] = Some(new);
    }
    Ok((g.induced(keep), map))
}

/// Removes the listed edges, keeping every vertex.
pub fn delete_edges(g: &Graph, f: &[(usize, usize)]) -> Result<Graph, GraphError> {
    let mut idx = Vec::with_capacity(f.len());
    for &(u, v) in f {
        match g.edge_index(u, v) {
            Some(i) => idx.push(i),
            None => return Err(GraphError::MissingEdge(u, v)),
        }
    }
    Ok(g.without_edge_indices(&idx))
}
