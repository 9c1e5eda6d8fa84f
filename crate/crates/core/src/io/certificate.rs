//! JSON witness certificates for vertex stability numbers.
//!
//! Field order is fixed by the struct declaration and is part of the format:
//!
//! ```text
//! input_graph, invariant, stability_value, removal_set,
//! rho_before, rho_after, coloring, max_cardinality_fully_searched
//! ```

use itertools::Itertools;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::{edge_colorable, verify_coloring, EdgeColoring};
use crate::graph::{delete_vertices, Graph, VertexSet};
use crate::stability::{lookup, vs, InvariantDescriptor, Witness};

use super::graph6::{format_graph6, parse_graph6, Graph6Error};

/// A proper colouring of the reduced graph, indexed by its canonical edges.
pub type CertificateColoring = EdgeColoring;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessCertificate {
    /// graph6 of the input graph.
    pub input_graph: String,
    pub invariant: String,
    pub stability_value: usize,
    /// Removed vertices, ascending.
    pub removal_set: Vec<usize>,
    pub rho_before: usize,
    pub rho_after: usize,
    /// Present iff `invariant` is `chi_prime`; uses `rho_after` colours on
    /// `input − removal_set` with vertices relabelled in order.
    pub coloring: Option<CertificateColoring>,
    /// Every removal set of at most this many vertices was tried and failed;
    /// `None` when the value is 0.
    pub max_cardinality_fully_searched: Option<usize>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CertificateError {
    #[error("input graph: {0}")]
    Graph(#[from] Graph6Error),
    #[error("unknown invariant `{0}`")]
    UnknownInvariant(String),
    #[error("removal set is not a sorted list of distinct vertices of the input")]
    BadRemovalSet,
    #[error("removal set has {found} vertices but the stability value is {value}")]
    SizeMismatch { value: usize, found: usize },
    #[error("{which} is {claimed} but re-evaluation gives {actual}")]
    WrongValue {
        which: &'static str,
        claimed: usize,
        actual: usize,
    },
    #[error("the removal neither changes the invariant nor empties the edge set")]
    NotARemoval,
    #[error("coloring is missing, improper, or does not use rho_after colours")]
    BadColoring,
    #[error("exhaustiveness claim does not match the stability value")]
    BadExhaustiveness,
    #[error("a smaller removal set {0:?} also qualifies")]
    NotMinimal(Vec<usize>),
}

impl WitnessCertificate {
    /// Runs the vertex stability search and packages the result.
    pub fn build(g: &Graph, rho: &InvariantDescriptor) -> Result<Self, Graph6Error> {
        let input_graph = format_graph6(g)?;
        let r = vs(g, rho);
        let removal = match r.witness {
            Witness::Vertices(s) => s,
            Witness::Edges(_) => unreachable!("vs reports vertex witnesses"),
        };
        let coloring = (rho.name() == "chi_prime").then(|| {
            let (h, _) = delete_vertices(g, removal).expect("witness lies inside the graph");
            edge_colorable(&h, r.rho_after).expect("χ′(h) colours suffice")
        });
        Ok(WitnessCertificate {
            input_graph,
            invariant: rho.name().to_string(),
            stability_value: r.value,
            removal_set: removal.to_vec(),
            rho_before: r.rho_before,
            rho_after: r.rho_after,
            coloring,
            max_cardinality_fully_searched: r.value.checked_sub(1),
        })
    }

    /// Checks the certificate from scratch: re-parses the graph, re-deletes
    /// the removal set, re-evaluates the invariant, checks the colouring and
    /// confirms no smaller removal set qualifies.
    pub fn revalidate(&self) -> Result<(), CertificateError> {
        let g = parse_graph6(&self.input_graph)?;
        let rho = lookup(&self.invariant)
            .map_err(|_| CertificateError::UnknownInvariant(self.invariant.clone()))?;
        let sorted = self.removal_set.windows(2).all(|w| w[0] < w[1]);
        if !sorted || self.removal_set.iter().any(|&v| v >= g.n()) {
            return Err(CertificateError::BadRemovalSet);
        }
        if self.removal_set.len() != self.stability_value {
            return Err(CertificateError::SizeMismatch {
                value: self.stability_value,
                found: self.removal_set.len(),
            });
        }
        let before = rho.evaluate(&g);
        if before != self.rho_before {
            return Err(CertificateError::WrongValue {
                which: "rho_before",
                claimed: self.rho_before,
                actual: before,
            });
        }
        let s: VertexSet = self.removal_set.iter().copied().collect();
        let (h, _) = delete_vertices(&g, s).map_err(|_| CertificateError::BadRemovalSet)?;
        let after = rho.evaluate(&h);
        if after != self.rho_after {
            return Err(CertificateError::WrongValue {
                which: "rho_after",
                claimed: self.rho_after,
                actual: after,
            });
        }
        let qualifies = |h: &Graph| h.is_edgeless() || rho.evaluate(h) != before;
        if !g.is_edgeless() && !qualifies(&h) {
            return Err(CertificateError::NotARemoval);
        }
        match (&self.coloring, self.invariant == "chi_prime") {
            (None, false) => {}
            (Some(c), true) if c.k() == after && verify_coloring(&h, c) => {}
            _ => return Err(CertificateError::BadColoring),
        }
        if self.max_cardinality_fully_searched != self.stability_value.checked_sub(1) {
            return Err(CertificateError::BadExhaustiveness);
        }
        if g.is_edgeless() {
            return Ok(());
        }
        for k in 1..self.stability_value {
            for combo in (0..g.n()).combinations(k) {
                let (h, _) = delete_vertices(&g, combo.iter().copied().collect())
                    .expect("subset of the vertex set");
                if qualifies(&h) {
                    return Err(CertificateError::NotMinimal(combo));
                }
            }
        }
        Ok(())
    }
}
