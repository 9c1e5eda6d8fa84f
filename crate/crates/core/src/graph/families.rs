//! Named graph families.

use std::fmt;

use super::{ops, Graph, GraphError, MAX_VERTICES};

/// A named family member with its integer parameters.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    /// `P_n`, `n` vertices.
    Path(usize),
    /// `C_n`, `n ≥ 3`.
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    /// Part sizes, ascending.
    CompleteMultipartite(Vec<usize>),
    /// `W_n = C_n ∨ K_1`: rim `0..n`, hub `n`.
    Wheel(usize),
    /// `G_k` on `3k` vertices: `x_i = 3i`, `y_i = 3i+1`, `z_i = 3i+2`;
    /// `x_1 y_1 x_2 y_2 … x_k y_k` is a path and `z_i` is adjacent to `x_i`, `y_i`.
    GadgetChain(usize),
    /// `K_n` on `0..n` plus vertex `w = n` adjacent to `0..d`.
    CompletePlusApex {
        n: usize,
        d: usize,
    },
}

impl FamilySpec {
    pub const TAGS: [&'static str; 8] = [
        "path",
        "cycle",
        "complete",
        "complete_bipartite",
        "complete_multipartite",
        "wheel",
        "gadget_chain",
        "complete_plus_apex",
    ];

    /// Builds a spec from a family tag and its parameter list.
    pub fn from_tag(tag: &str, params: &[usize]) -> Result<FamilySpec, GraphError> {
        let arity = |k: usize| -> Result<(), GraphError> {
            if params.len() == k {
                Ok(())
            } else {
                Err(GraphError::MalformedFamily(format!(
                    "{tag} takes {k} parameter(s), got {}",
                    params.len()
                )))
            }
        };
        let spec = match tag {
            "path" => {
                arity(1)?;
                FamilySpec::Path(params[0])
            }
            "cycle" => {
                arity(1)?;
                FamilySpec::Cycle(params[0])
            }
            "complete" => {
                arity(1)?;
                FamilySpec::Complete(params[0])
            }
            "complete_bipartite" => {
                arity(2)?;
                FamilySpec::CompleteBipartite(params[0], params[1])
            }
            "complete_multipartite" => FamilySpec::CompleteMultipartite(params.to_vec()),
            "wheel" => {
                arity(1)?;
                FamilySpec::Wheel(params[0])
            }
            "gadget_chain" => {
                arity(1)?;
                FamilySpec::GadgetChain(params[0])
            }
            "complete_plus_apex" => {
                arity(2)?;
                FamilySpec::CompletePlusApex {
                    n: params[0],
                    d: params[1],
                }
            }
            other => {
                return Err(GraphError::MalformedFamily(format!(
                    "unknown family `{other}`"
                )))
            }
        };
        spec.validate()?;
        Ok(spec)
    }

    /// Number of vertices of the generated graph.
    pub fn order(&self) -> usize {
        match self {
            FamilySpec::Path(n) | FamilySpec::Cycle(n) | FamilySpec::Complete(n) => *n,
            FamilySpec::CompleteBipartite(a, b) => a + b,
            FamilySpec::CompleteMultipartite(parts) => parts.iter().sum(),
            FamilySpec::Wheel(n) => n + 1,
            FamilySpec::GadgetChain(k) => 3 * k,
            FamilySpec::CompletePlusApex { n, .. } => n + 1,
        }
    }

    pub fn validate(&self) -> Result<(), GraphError> {
        let bad = |msg: String| Err(GraphError::MalformedFamily(msg));
        match self {
            FamilySpec::Path(0) | FamilySpec::Complete(0) => return bad(format!("{self}: n ≥ 1")),
            FamilySpec::Cycle(n) | FamilySpec::Wheel(n) if *n < 3 => {
                return bad(format!("{self}: n ≥ 3"))
            }
            FamilySpec::CompleteBipartite(a, b) if *a == 0 || *b == 0 => {
                return bad(format!("{self}: part sizes must be positive"))
            }
            FamilySpec::CompleteMultipartite(parts) => {
                if parts.is_empty() || parts.contains(&0) {
                    return bad(format!("{self}: part sizes must be positive"));
                }
                if parts.windows(2).any(|w| w[0] > w[1]) {
                    return bad(format!("{self}: part sizes must be ascending"));
                }
            }
            FamilySpec::GadgetChain(0) => return bad(format!("{self}: k ≥ 1")),
            FamilySpec::CompletePlusApex { n, d } if *n == 0 || d > n => {
                return bad(format!("{self}: need n ≥ 1 and 0 ≤ d ≤ n"))
            }
            _ => {}
        }
        // saturating: huge parameters must not overflow before the cap check
        let order = match self {
            FamilySpec::CompleteMultipartite(parts) => {
                parts.iter().fold(0usize, |acc, &p| acc.saturating_add(p))
            }
            FamilySpec::GadgetChain(k) => k.saturating_mul(3),
            FamilySpec::CompleteBipartite(a, b) => a.saturating_add(*b),
            FamilySpec::Wheel(n) | FamilySpec::CompletePlusApex { n, .. } => n.saturating_add(1),
            other => other.order(),
        };
        if order > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(order));
        }
        Ok(())
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path(n) => write!(f, "path({n})"),
            FamilySpec::Cycle(n) => write!(f, "cycle({n})"),
            FamilySpec::Complete(n) => write!(f, "complete({n})"),
            FamilySpec::CompleteBipartite(a, b) => write!(f, "complete_bipartite({a},{b})"),
            FamilySpec::CompleteMultipartite(parts) => {
                let p: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "complete_multipartite({})", p.join(","))
            }
            FamilySpec::Wheel(n) => write!(f, "wheel({n})"),
            FamilySpec::GadgetChain(k) => write!(f, "gadget_chain({k})"),
            FamilySpec::CompletePlusApex { n, d } => write!(f, "complete_plus_apex({n},{d})"),
        }
    }
}

fn complete_multipartite(parts: &[usize]) -> Graph {
    let mut edges = Vec::new();
    let mut starts = Vec::with_capacity(parts.len());
    let mut offset = 0;
    for &p in parts {
        starts.push(offset);
        offset += p;
    }
    for (i, (&si, &pi)) in starts.iter().zip(parts).enumerate() {
        for (&sj, &pj) in starts.iter().zip(parts).skip(i + 1) {
            for u in si..si + pi {
                for v in sj..sj + pj {
                    edges.push((u, v));
                }
            }
        }
    }
    Graph::new(offset, &edges).expect("valid multipartite edge list")
}

/// Generates the family member described by `spec`.
pub fn generate(spec: &FamilySpec) -> Result<Graph, GraphError> {
    spec.validate()?;
    let g = match *spec {
        FamilySpec::Path(n) => {
            let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            Graph::new(n, &edges)?
        }
        FamilySpec::Cycle(n) => {
            let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            edges.push((0, n - 1));
            Graph::new(n, &edges)?
        }
        FamilySpec::Complete(n) => complete_multipartite(&vec![1; n]),
        FamilySpec::CompleteBipartite(a, b) => complete_multipartite(&[a, b]),
        FamilySpec::CompleteMultipartite(ref parts) => complete_multipartite(parts),
        FamilySpec::Wheel(n) => ops::join(&generate(&FamilySpec::Cycle(n))?, &Graph::empty(1)?)?,
        FamilySpec::GadgetChain(k) => {
            let mut edges = Vec::with_capacity(4 * k - 1);
            for i in 0..k {
                let (x, y, z) = (3 * i, 3 * i + 1, 3 * i + 2);
                edges.extend([(x, y), (x, z), (y, z)]);
                if i + 1 < k {
                    edges.push((y, 3 * (i + 1)));
                }
            }
            Graph::new(3 * k, &edges)?
        }
        FamilySpec::CompletePlusApex { n, d } => {
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    edges.push((u, v));
                }
            }
            edges.extend((0..d).map(|v| (v, n)));
            Graph::new(n + 1, &edges)?
        }
    };
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{max_degree, union};

    fn gen(spec: FamilySpec) -> Graph {
        generate(&spec).unwrap()
    }

    #[test]
    fn edge_counts() {
        for n in 1..9 {
            assert_eq!(gen(FamilySpec::Path(n)).m(), n - 1);
            assert_eq!(gen(FamilySpec::Complete(n)).m(), n * (n - 1) / 2);
        }
        for n in 3..9 {
            assert_eq!(gen(FamilySpec::Cycle(n)).m(), n);
            assert_eq!(gen(FamilySpec::Wheel(n)).m(), 2 * n);
        }
        assert_eq!(gen(FamilySpec::CompleteBipartite(3, 4)).m(), 12);
        assert_eq!(
            gen(FamilySpec::CompleteMultipartite(vec![1, 2, 3])).m(),
            2 + 3 + 6
        );
        for k in 1..6 {
            let g = gen(FamilySpec::GadgetChain(k));
            assert_eq!((g.n(), g.m()), (3 * k, (2 * k - 1) + 2 * k));
        }
    }

    #[test]
    fn wheel_3_is_k4() {
        assert_eq!(gen(FamilySpec::Wheel(3)), gen(FamilySpec::Complete(4)));
    }

    #[test]
    fn gadget_chain_1_is_triangle() {
        assert_eq!(
            gen(FamilySpec::GadgetChain(1)),
            gen(FamilySpec::Complete(3))
        );
    }

    #[test]
    fn gadget_chain_layout() {
        let g = gen(FamilySpec::GadgetChain(3));
        // x1 y1 x2 y2 x3 y3 = 0 1 3 4 6 7
        for (u, v) in [(0, 1), (1, 3), (3, 4), (4, 6), (6, 7)] {
            assert!(g.has_edge(u, v), "path edge {u}-{v}");
        }
        for i in 0..3 {
            assert!(g.has_edge(3 * i + 2, 3 * i) && g.has_edge(3 * i + 2, 3 * i + 1));
            assert_eq!(g.degree(3 * i + 2), 2);
        }
        assert_eq!(max_degree(&g), 3);
    }

    #[test]
    fn apex_examples() {
        let k3 = gen(FamilySpec::Complete(3));
        let k1 = Graph::empty(1).unwrap();
        assert_eq!(
            gen(FamilySpec::CompletePlusApex { n: 3, d: 0 }),
            union(&k3, &k1).unwrap()
        );
        assert_eq!(
            gen(FamilySpec::CompletePlusApex { n: 3, d: 3 }),
            gen(FamilySpec::Complete(4))
        );
        let g = gen(FamilySpec::CompletePlusApex { n: 4, d: 2 });
        assert_eq!(g.degree(4), 2);
        assert!(g.has_edge(0, 4) && g.has_edge(1, 4) && !g.has_edge(2, 4));
    }

    #[test]
    fn malformed_specs() {
        assert!(generate(&FamilySpec::Cycle(2)).is_err());
        assert!(generate(&FamilySpec::Wheel(2)).is_err());
        assert!(generate(&FamilySpec::Path(0)).is_err());
        assert!(generate(&FamilySpec::CompleteBipartite(0, 2)).is_err());
        assert!(generate(&FamilySpec::CompleteMultipartite(vec![2, 1])).is_err());
        assert!(generate(&FamilySpec::CompleteMultipartite(vec![])).is_err());
        assert!(generate(&FamilySpec::CompletePlusApex { n: 3, d: 4 }).is_err());
        assert!(generate(&FamilySpec::GadgetChain(22)).is_err());
        assert!(generate(&FamilySpec::Complete(usize::MAX)).is_err());
    }

    #[test]
    fn from_tag_round_trip() {
        assert_eq!(
            FamilySpec::from_tag("complete_plus_apex", &[4, 3]).unwrap(),
            FamilySpec::CompletePlusApex { n: 4, d: 3 }
        );
        assert_eq!(
            FamilySpec::from_tag("complete_multipartite", &[1, 2, 2]).unwrap(),
            FamilySpec::CompleteMultipartite(vec![1, 2, 2])
        );
        assert!(FamilySpec::from_tag("wheel", &[3, 4]).is_err());
        assert!(FamilySpec::from_tag("petersen", &[]).is_err());
        assert!(FamilySpec::from_tag("cycle", &[2]).is_err());
    }
}
