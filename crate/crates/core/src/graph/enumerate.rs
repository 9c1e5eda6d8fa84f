//! Every labelled simple graph on `n` vertices, in edge-mask order.

use super::{Graph, GraphError};

/// Largest `n` accepted by [`enumerate_labeled_graphs`] (`2^21` graphs).
pub const ENUMERATION_CAP: usize = 7;

/// Iterator over the `2^C(n,2)` labelled graphs on `n` vertices.
///
/// Graph `i` contains the `j`-th pair of `(0,1), (0,2), (1,2), (0,3), …`
/// iff bit `j` of `i` is set, the same pair order graph6 uses.
#[derive(Debug, Clone)]
pub struct LabeledGraphs {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next: u64,
    end: u64,
}

impl Iterator for LabeledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.next >= self.end {
            return None;
        }
        let mask = self.next;
        self.next += 1;
        let mut rows = vec![0u64; self.n];
        for (j, &(u, v)) in self.pairs.iter().enumerate() {
            if mask >> j & 1 == 1 {
                rows[u] |= 1 << v;
                rows[v] |= 1 << u;
            }
        }
        Some(Graph::from_rows(rows))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for LabeledGraphs {}

/// Pairs `(u, v)`, `u < v`, ordered by `v` then `u`.
pub(crate) fn column_pairs(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect()
}

pub fn enumerate_labeled_graphs(n: usize) -> Result<LabeledGraphs, GraphError> {
    if n > ENUMERATION_CAP {
        return Err(GraphError::MalformedFamily(format!(
            "labelled enumeration is capped at n = {ENUMERATION_CAP}, got {n}"
        )));
    }
    let pairs = column_pairs(n);
    Ok(LabeledGraphs {
        n,
        end: 1u64 << pairs.len(),
        pairs,
        next: 0,
    })
}

/// Labelled graphs on `1..=max_n` vertices, smallest order first.
pub fn labeled_corpus(max_n: usize) -> Result<Vec<Graph>, GraphError> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(enumerate_labeled_graphs(n)?);
    }
    Ok(out)
}
