//! Vertex and edge stability numbers.
//!
//! `vs_ρ(G)` is the fewest vertices whose deletion changes `ρ` or leaves no
//! edges; `es_ρ(G)` is the same over edge deletions. Both engines try
//! removal sets by increasing size, and within one size in lexicographic
//! order, so the reported witness is the lexicographically smallest among
//! the minimum ones. An edgeless input has value 0 and an empty witness.

pub mod closed_form;
pub mod domination;
pub mod registry;

use itertools::Itertools;
use thiserror::Error;

use crate::graph::{components, connectivity, Graph, VertexSet};

pub use closed_form::closed_form_vs_chi_prime;
pub use domination::{
    dominate, domination_number, domination_of_max_degree, open_domination_of_max_degree,
    DominationResult,
};
pub use registry::{lookup, registry, Composition, InvariantDescriptor, Monotonicity};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StabilityError {
    #[error("graph has no edges")]
    EmptyGraph,
    #[error("unknown invariant `{0}`")]
    UnknownInvariant(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Vertices(VertexSet),
    /// Edges of the input graph, canonical order.
    Edges(Vec<(usize, usize)>),
}

impl Witness {
    pub fn len(&self) -> usize {
        match self {
            Witness::Vertices(s) => s.len(),
            Witness::Edges(e) => e.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilityResult {
    pub value: usize,
    pub witness: Witness,
    pub rho_before: usize,
    pub rho_after: usize,
    /// The search stopped because the remainder had no edges while `ρ`
    /// was unchanged.
    pub emptied: bool,
    /// Every smaller removal set was tried and failed.
    pub exhaustive_below: bool,
}

/// Evaluates one removal: `Some((ρ(H), emptied))` if `H` qualifies.
fn qualifies(h: &Graph, rho: &InvariantDescriptor, before: usize) -> Option<(usize, bool)> {
    let after = rho.evaluate(h);
    if after != before {
        Some((after, false))
    } else if h.is_edgeless() {
        Some((after, true))
    } else {
        None
    }
}

fn trivial(rho_before: usize, witness: Witness) -> StabilityResult {
    StabilityResult {
        value: 0,
        witness,
        rho_before,
        rho_after: rho_before,
        emptied: true,
        exhaustive_below: true,
    }
}

/// Lexicographically first vertex set of exactly `k` vertices whose removal
/// qualifies, with `(ρ(g − S), emptied)`.
pub fn vertex_removal_of_size(
    g: &Graph,
    rho: &InvariantDescriptor,
    k: usize,
) -> Option<(VertexSet, usize, bool)> {
    let before = rho.evaluate(g);
    vertex_removal_with_baseline(g, rho, before, k)
}

fn vertex_removal_with_baseline(
    g: &Graph,
    rho: &InvariantDescriptor,
    before: usize,
    k: usize,
) -> Option<(VertexSet, usize, bool)> {
    let all = g.vertices();
    (0..g.n()).combinations(k).find_map(|combo| {
        let s = VertexSet::from_iter(combo);
        let h = g.induced(all.difference(s));
        qualifies(&h, rho, before).map(|(after, emptied)| (s, after, emptied))
    })
}

/// `vs_ρ(g)` with a minimum witness.
pub fn vs(g: &Graph, rho: &InvariantDescriptor) -> StabilityResult {
    let before = rho.evaluate(g);
    if g.is_edgeless() {
        return trivial(before, Witness::Vertices(VertexSet::EMPTY));
    }
    // deleting every vertex empties the edge set, so the loop returns
    for k in 1..=g.n() {
        if let Some((s, after, emptied)) = vertex_removal_with_baseline(g, rho, before, k) {
            return StabilityResult {
                value: k,
                witness: Witness::Vertices(s),
                rho_before: before,
                rho_after: after,
                emptied,
                exhaustive_below: true,
            };
        }
    }
    unreachable!("removing all vertices always qualifies")
}

/// Lexicographically first set of exactly `k` edge indices whose removal
/// qualifies.
pub fn edge_removal_of_size(
    g: &Graph,
    rho: &InvariantDescriptor,
    k: usize,
) -> Option<(Vec<usize>, usize, bool)> {
    let before = rho.evaluate(g);
    edge_removal_with_baseline(g, rho, before, k)
}

fn edge_removal_with_baseline(
    g: &Graph,
    rho: &InvariantDescriptor,
    before: usize,
    k: usize,
) -> Option<(Vec<usize>, usize, bool)> {
    (0..g.m()).combinations(k).find_map(|combo| {
        let h = g.without_edge_indices(&combo);
        qualifies(&h, rho, before).map(|(after, emptied)| (combo, after, emptied))
    })
}

/// `es_ρ(g)` with a minimum witness.
pub fn es(g: &Graph, rho: &InvariantDescriptor) -> StabilityResult {
    let before = rho.evaluate(g);
    if g.is_edgeless() {
        return trivial(before, Witness::Edges(Vec::new()));
    }
    for k in 1..=g.m() {
        if let Some((idx, after, emptied)) = edge_removal_with_baseline(g, rho, before, k) {
            return StabilityResult {
                value: k,
                witness: Witness::Edges(idx.iter().map(|&i| g.edges()[i]).collect()),
                rho_before: before,
                rho_after: after,
                emptied,
                exhaustive_below: true,
            };
        }
    }
    unreachable!("removing all edges always qualifies")
}

/// `vs_ω(g) = min κ(H)` over components `H` other than `K_1`.
///
/// This agrees with `vs(g, components)` on connected graphs. On a
/// disconnected graph whose cheapest component is complete the generic
/// engine can be larger: cutting `K_j` down to `K_1` leaves `ω` unchanged
/// while other components still carry edges.
pub fn vs_omega(g: &Graph) -> Result<usize, StabilityError> {
    if g.is_edgeless() {
        return Err(StabilityError::EmptyGraph);
    }
    let value = components(g)
        .parts
        .into_iter()
        .filter(|p| p.len() > 1)
        .map(|p| connectivity(&g.induced(p)).expect("component is nonempty"))
        .min()
        .expect("a graph with an edge has a nontrivial component");
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, union, FamilySpec};

    fn gen(spec: FamilySpec) -> Graph {
        generate(&spec).unwrap()
    }

    fn chi() -> InvariantDescriptor {
        InvariantDescriptor::chi_prime()
    }

    #[test]
    fn vs_chi_prime_examples() {
        let r = vs(&gen(FamilySpec::Cycle(5)), &chi());
        assert_eq!(r.value, 1);
        assert_eq!(r.witness, Witness::Vertices(VertexSet::singleton(0)));
        assert_eq!((r.rho_before, r.rho_after, r.emptied), (3, 2, false));
        assert_eq!(vs(&gen(FamilySpec::Complete(4)), &chi()).value, 2);
        assert_eq!(vs(&gen(FamilySpec::Path(7)), &chi()).value, 2);
    }

    #[test]
    fn vs_min_degree_triangle() {
        let r = vs(
            &gen(FamilySpec::Complete(3)),
            &InvariantDescriptor::min_degree(),
        );
        assert_eq!(r.value, 1);
        assert_eq!((r.rho_before, r.rho_after), (2, 1));
    }

    #[test]
    fn empty_graph_is_zero() {
        let r = vs(&Graph::empty(3).unwrap(), &chi());
        assert_eq!(r.value, 0);
        assert!(r.witness.is_empty());
        let r = es(&Graph::empty(3).unwrap(), &chi());
        assert_eq!(r.value, 0);
        assert_eq!(r.witness, Witness::Edges(vec![]));
    }

    #[test]
    fn emptied_clause() {
        // K2 minus a vertex: χ′ changes 1 → 0, so this is a ρ change
        let r = vs(&gen(FamilySpec::Complete(2)), &chi());
        assert_eq!((r.value, r.rho_after, r.emptied), (1, 0, false));
        // components of K2: removing one vertex leaves K1, ω unchanged but no edges
        let r = vs(
            &gen(FamilySpec::Complete(2)),
            &InvariantDescriptor::components(),
        );
        assert_eq!(
            (r.value, r.rho_before, r.rho_after, r.emptied),
            (1, 1, 1, true)
        );
    }

    #[test]
    fn es_examples() {
        let r = es(&gen(FamilySpec::Cycle(5)), &chi());
        assert_eq!(r.value, 1);
        assert_eq!(r.witness, Witness::Edges(vec![(0, 1)]));
        assert_eq!(
            es(&gen(FamilySpec::CompleteBipartite(3, 3)), &chi()).value,
            3
        );
    }

    #[test]
    fn witness_is_lexicographically_first() {
        let r = vs(&gen(FamilySpec::Complete(4)), &chi());
        assert_eq!(r.witness, Witness::Vertices(VertexSet::from_iter([0, 1])));
        // P5 = 0-1-2-3-4: V_Δ = {1,2,3}; {0,3} and {1,3} work but {2} is the
        // unique single vertex dominating all three
        let r = vs(
            &gen(FamilySpec::Path(5)),
            &InvariantDescriptor::max_degree(),
        );
        assert_eq!(r.witness, Witness::Vertices(VertexSet::singleton(2)));
        // C6: the three dominating pairs are {0,3}, {1,4}, {2,5}
        let r = vs(&gen(FamilySpec::Cycle(6)), &chi());
        assert_eq!(r.witness, Witness::Vertices(VertexSet::from_iter([0, 3])));
    }

    #[test]
    fn no_smaller_removal_exists() {
        let g = gen(FamilySpec::GadgetChain(3));
        let r = vs(&g, &chi());
        assert_eq!(r.value, 3);
        for k in 0..r.value {
            assert!(vertex_removal_of_size(&g, &chi(), k).is_none());
        }
    }

    #[test]
    fn vs_omega_examples() {
        assert_eq!(vs_omega(&gen(FamilySpec::Cycle(5))), Ok(2));
        let k2 = gen(FamilySpec::Complete(2));
        let k3 = gen(FamilySpec::Complete(3));
        assert_eq!(vs_omega(&union(&k2, &k3).unwrap()), Ok(1));
        let k1 = Graph::empty(1).unwrap();
        assert_eq!(
            vs_omega(&union(&k1, &gen(FamilySpec::Complete(4))).unwrap()),
            Ok(3)
        );
        assert_eq!(
            vs_omega(&Graph::empty(2).unwrap()),
            Err(StabilityError::EmptyGraph)
        );
    }

    #[test]
    fn vs_omega_matches_engine_when_connected() {
        let omega = InvariantDescriptor::components();
        for spec in [
            FamilySpec::Cycle(5),
            FamilySpec::Path(5),
            FamilySpec::Complete(4),
            FamilySpec::Wheel(5),
            FamilySpec::CompleteBipartite(2, 3),
        ] {
            let g = gen(spec);
            assert_eq!(vs(&g, &omega).value, vs_omega(&g).unwrap());
        }
    }

    #[test]
    fn vs_omega_disagrees_on_two_k2() {
        // removing one vertex of a K2 leaves K1 ∪ K2: still two components
        let k2 = gen(FamilySpec::Complete(2));
        let g = union(&k2, &k2).unwrap();
        assert_eq!(vs_omega(&g), Ok(1));
        assert_eq!(vs(&g, &InvariantDescriptor::components()).value, 2);
    }
}
