//! Plain edge lists: a header `n m` followed by `m` pairs `u v`.
//!
//! Tokens may be split across lines arbitrarily; errors report the line of
//! the offending token.

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EdgeListError {
    #[error("line {line}: expected a non-negative integer, found `{token}`")]
    NotANumber { line: usize, token: String },
    #[error("missing `n m` header")]
    MissingHeader,
    #[error("line {line}: header announces {expected} edges but {found} follow")]
    CountMismatch {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("line {line}: dangling endpoint without a partner")]
    DanglingEndpoint { line: usize },
    #[error("line {line}: {source}")]
    Invalid { line: usize, source: GraphError },
}

pub fn parse_edgelist(text: &str) -> Result<Graph, EdgeListError> {
    let mut tokens = Vec::new();
    for (i, line) in text.lines().enumerate() {
        for tok in line.split_whitespace() {
            let value = tok
                .parse::<usize>()
                .map_err(|_| EdgeListError::NotANumber {
                    line: i + 1,
                    token: tok.to_string(),
                })?;
            tokens.push((i + 1, value));
        }
    }
    if tokens.len() < 2 {
        return Err(EdgeListError::MissingHeader);
    }
    let (header_line, n) = tokens[0];
    let m = tokens[1].1;
    let body = &tokens[2..];
    if body.len() % 2 == 1 {
        return Err(EdgeListError::DanglingEndpoint {
            line: body[body.len() - 1].0,
        });
    }
    if body.len() / 2 != m {
        let line = body.last().map_or(header_line, |t| t.0);
        return Err(EdgeListError::CountMismatch {
            line,
            expected: m,
            found: body.len() / 2,
        });
    }
    if n > crate::graph::MAX_VERTICES {
        return Err(EdgeListError::Invalid {
            line: header_line,
            source: GraphError::TooManyVertices(n),
        });
    }
    // add edges one at a time so a failure can name its line
    let mut edges = Vec::with_capacity(m);
    for pair in body.chunks(2) {
        let (line, u) = pair[0];
        let v = pair[1].1;
        edges.push((u, v));
        if let Err(source) = Graph::new(n, &edges) {
            return Err(EdgeListError::Invalid { line, source });
        }
    }
    Ok(Graph::new(n, &edges).expect("validated incrementally"))
}

/// Header line then one edge per line, canonical order, no trailing newline.
pub fn format_edgelist(g: &Graph) -> String {
    let mut out = format!("{} {}", g.n(), g.m());
    for &(u, v) in g.edges() {
        out.push_str(&format!("\n{u} {v}"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, FamilySpec};

    #[test]
    fn parse_path() {
        let g = parse_edgelist("3 2\n0 1\n1 2").unwrap();
        assert_eq!(g, generate(&FamilySpec::Path(3)).unwrap());
        let g = parse_edgelist("  3 2 0 1\n\n 1   2\n").unwrap();
        assert_eq!(g.m(), 2);
    }

    #[test]
    fn duplicate_edge() {
        assert_eq!(
            parse_edgelist("2 1\n0 1\n0 1"),
            Err(EdgeListError::CountMismatch {
                line: 3,
                expected: 1,
                found: 2
            })
        );
        assert_eq!(
            parse_edgelist("2 2\n0 1\n1 0"),
            Err(EdgeListError::Invalid {
                line: 3,
                source: GraphError::DuplicateEdge(0, 1)
            })
        );
    }

    #[test]
    fn other_errors() {
        assert_eq!(
            parse_edgelist("3 1\n1 1"),
            Err(EdgeListError::Invalid {
                line: 2,
                source: GraphError::SelfLoop(1)
            })
        );
        assert_eq!(
            parse_edgelist("3 1\n0 x"),
            Err(EdgeListError::NotANumber {
                line: 2,
                token: "x".into()
            })
        );
        assert_eq!(parse_edgelist("3"), Err(EdgeListError::MissingHeader));
        assert_eq!(
            parse_edgelist("3 1\n0 1 2"),
            Err(EdgeListError::DanglingEndpoint { line: 2 })
        );
        assert!(matches!(
            parse_edgelist("2 1\n0 5"),
            Err(EdgeListError::Invalid { line: 2, .. })
        ));
    }

    #[test]
    fn format_k3() {
        let k3 = generate(&FamilySpec::Complete(3)).unwrap();
        assert_eq!(format_edgelist(&k3), "3 3\n0 1\n0 2\n1 2");
        assert_eq!(parse_edgelist(&format_edgelist(&k3)).unwrap(), k3);
    }
}
