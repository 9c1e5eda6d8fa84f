//! Exact domination of a target vertex set.

use itertools::Itertools;

use crate::graph::{props::max_degree_vertices, Graph, VertexSet};

use super::StabilityError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominationResult {
    pub value: usize,
    pub witness: VertexSet,
}

fn closed_cover(g: &Graph, s: VertexSet) -> VertexSet {
    s.iter().fold(VertexSet::EMPTY, |acc, v| {
        acc.union(g.closed_neighborhood(v))
    })
}

fn open_cover(g: &Graph, s: VertexSet) -> VertexSet {
    s.iter()
        .fold(VertexSet::EMPTY, |acc, v| acc.union(g.neighbors(v)))
}

/// Smallest `Γ` with `target ⊆ N[Γ]`, lexicographically first among ties.
pub fn dominate(g: &Graph, target: VertexSet) -> DominationResult {
    for k in 0..=g.n() {
        let hit = (0..g.n())
            .combinations(k)
            .map(VertexSet::from_iter)
            .find(|&s| target.is_subset(closed_cover(g, s)));
        if let Some(witness) = hit {
            return DominationResult { value: k, witness };
        }
    }
    unreachable!("the full vertex set dominates every target")
}

/// Ordinary domination number `γ(G)`.
pub fn domination_number(g: &Graph) -> usize {
    dominate(g, g.vertices()).value
}

/// `γ(V_Δ)`: fewest vertices whose closed neighbourhoods cover every
/// maximum-degree vertex.
pub fn domination_of_max_degree(g: &Graph) -> Result<DominationResult, StabilityError> {
    if g.is_edgeless() {
        return Err(StabilityError::EmptyGraph);
    }
    Ok(dominate(g, max_degree_vertices(g)))
}

/// Fewest `Γ` with open neighbourhood union exactly `V_Δ`, or `None` when
/// no set has that neighbourhood.
pub fn open_domination_of_max_degree(g: &Graph) -> Option<usize> {
    let target = max_degree_vertices(g);
    (0..=g.n()).find(|&k| {
        (0..g.n())
            .combinations(k)
            .any(|c| open_cover(g, VertexSet::from_iter(c)) == target)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, FamilySpec};

    fn gen(spec: FamilySpec) -> Graph {
        generate(&spec).unwrap()
    }

    #[test]
    fn examples() {
        let r = domination_of_max_degree(&gen(FamilySpec::Complete(2))).unwrap();
        assert_eq!((r.value, r.witness), (1, VertexSet::singleton(0)));
        assert_eq!(
            domination_of_max_degree(&gen(FamilySpec::Cycle(6)))
                .unwrap()
                .value,
            2
        );
        let r = domination_of_max_degree(&gen(FamilySpec::Path(8))).unwrap();
        assert_eq!(r.value, 2);
        assert_eq!(r.witness.to_vec(), vec![2, 5]);
        assert_eq!(
            domination_of_max_degree(&Graph::empty(3).unwrap()),
            Err(StabilityError::EmptyGraph)
        );
    }

    #[test]
    fn ordinary_domination() {
        for n in 1..10 {
            assert_eq!(domination_number(&gen(FamilySpec::Path(n))), n.div_ceil(3));
        }
        assert_eq!(domination_number(&Graph::empty(3).unwrap()), 3);
    }

    #[test]
    fn open_reading_fails_on_k2() {
        // N(Γ) = V_Δ = {0, 1} needs Γ = {0, 1}; the closed reading needs one vertex
        assert_eq!(
            open_domination_of_max_degree(&gen(FamilySpec::Complete(2))),
            Some(2)
        );
        // K_{1,2}: V_Δ = {0}; N({1}) = {0}
        assert_eq!(
            open_domination_of_max_degree(&gen(FamilySpec::CompleteBipartite(1, 2))),
            Some(1)
        );
    }
}
