//! Named integer invariants with their monotonicity and union behaviour.

use std::fmt;
use std::sync::Arc;

use crate::coloring::{chromatic_index, graph_class};
use crate::graph::{components, max_degree, min_degree, Graph};

use super::StabilityError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Monotonicity {
    /// `H ⊆ G ⇒ ρ(H) ≤ ρ(G)`.
    Increasing,
    /// `H ⊆ G ⇒ ρ(H) ≥ ρ(G)`.
    Decreasing,
    None,
}

/// How the invariant of a disjoint union relates to the parts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Composition {
    Maxing,
    Additive,
    None,
}

type Evaluator = Arc<dyn Fn(&Graph) -> usize + Send + Sync>;

#[derive(Clone)]
pub struct InvariantDescriptor {
    name: String,
    evaluate: Evaluator,
    pub monotone: Monotonicity,
    pub composition: Composition,
}

impl InvariantDescriptor {
    /// A user-supplied invariant; its metadata is taken on trust.
    pub fn custom<F>(name: &str, monotone: Monotonicity, composition: Composition, f: F) -> Self
    where
        F: Fn(&Graph) -> usize + Send + Sync + 'static,
    {
        InvariantDescriptor {
            name: name.to_string(),
            evaluate: Arc::new(f),
            monotone,
            composition,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn evaluate(&self, g: &Graph) -> usize {
        (self.evaluate)(g)
    }

    pub fn chi_prime() -> Self {
        Self::custom(
            "chi_prime",
            Monotonicity::Increasing,
            Composition::Maxing,
            chromatic_index,
        )
    }

    pub fn max_degree() -> Self {
        Self::custom(
            "max_degree",
            Monotonicity::Increasing,
            Composition::Maxing,
            max_degree,
        )
    }

    /// Not monotone under vertex deletion: removing a neighbour lowers a
    /// degree, removing the minimum-degree vertex can raise `δ`.
    pub fn min_degree() -> Self {
        Self::custom(
            "min_degree",
            Monotonicity::None,
            Composition::None,
            min_degree,
        )
    }

    /// `ω`, the number of components. Vertex deletion can raise it (cuts) or
    /// lower it (deleting a whole component).
    pub fn components() -> Self {
        Self::custom(
            "components",
            Monotonicity::None,
            Composition::Additive,
            |g: &Graph| components(g).count(),
        )
    }

    pub fn class() -> Self {
        Self::custom(
            "class",
            Monotonicity::None,
            Composition::None,
            |g: &Graph| graph_class(g).value(),
        )
    }
}

impl fmt::Debug for InvariantDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("InvariantDescriptor")
            .field("name", &self.name)
            .field("monotone", &self.monotone)
            .field("composition", &self.composition)
            .finish_non_exhaustive()
    }
}

/// The built-in invariants.
pub fn registry() -> Vec<InvariantDescriptor> {
    vec![
        InvariantDescriptor::chi_prime(),
        InvariantDescriptor::max_degree(),
        InvariantDescriptor::min_degree(),
        InvariantDescriptor::components(),
        InvariantDescriptor::class(),
    ]
}

pub fn lookup(name: &str) -> Result<InvariantDescriptor, StabilityError> {
    registry()
        .into_iter()
        .find(|d| d.name() == name)
        .ok_or_else(|| StabilityError::UnknownInvariant(name.to_string()))
}
