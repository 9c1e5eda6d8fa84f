//! graph6, short form only (`n ≤ 62`).
//!
//! One size byte `n + 63`, then the upper triangle `x(0,1), x(0,2), x(1,2),
//! x(0,3), …` packed six bits per byte, most significant first, each byte
//! offset by 63. Padding bits must be zero.

use thiserror::Error;

use crate::graph::{enumerate::column_pairs, Graph};

/// Largest order representable in the one-byte size form.
pub const SHORT_FORM_MAX: usize = 62;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("character {ch:?} at byte {pos} is outside '?'..='~'")]
    BadCharacter { pos: usize, ch: char },
    #[error("only orders up to {SHORT_FORM_MAX} are supported (long size form)")]
    LongForm,
    #[error("expected {expected} data bytes for n = {n}, found {found}")]
    BadLength {
        n: usize,
        expected: usize,
        found: usize,
    },
    #[error("padding bits in the last byte are not zero")]
    TrailingBits,
    #[error("graph has {0} vertices; graph6 short form holds at most {SHORT_FORM_MAX}")]
    TooLarge(usize),
}

pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.trim();
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (pos, ch) in text.char_indices() {
        if !('?'..='~').contains(&ch) {
            return Err(Graph6Error::BadCharacter { pos, ch });
        }
    }
    let n = (bytes[0] - 63) as usize;
    if n > SHORT_FORM_MAX {
        return Err(Graph6Error::LongForm);
    }
    let pairs = column_pairs(n);
    let expected = pairs.len().div_ceil(6);
    let data = &bytes[1..];
    if data.len() != expected {
        return Err(Graph6Error::BadLength {
            n,
            expected,
            found: data.len(),
        });
    }
    let bit = |j: usize| (data[j / 6] - 63) >> (5 - j % 6) & 1 == 1;
    if (pairs.len()..expected * 6).any(bit) {
        return Err(Graph6Error::TrailingBits);
    }
    let edges: Vec<(usize, usize)> = pairs
        .iter()
        .enumerate()
        .filter(|&(j, _)| bit(j))
        .map(|(_, &p)| p)
        .collect();
    Ok(Graph::new(n, &edges).expect("graph6 pairs are distinct and in range"))
}

pub fn format_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.n();
    if n > SHORT_FORM_MAX {
        return Err(Graph6Error::TooLarge(n));
    }
    let pairs = column_pairs(n);
    let mut out = String::with_capacity(1 + pairs.len().div_ceil(6));
    out.push((n as u8 + 63) as char);
    for chunk in pairs.chunks(6) {
        let mut byte = 0u8;
        for (i, &(u, v)) in chunk.iter().enumerate() {
            if g.has_edge(u, v) {
                byte |= 1 << (5 - i);
            }
        }
        out.push((byte + 63) as char);
    }
    Ok(out)
}
