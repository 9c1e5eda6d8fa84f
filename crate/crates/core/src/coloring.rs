//! Exact proper edge coloring.
//!
//! [`edge_colorable`] is a complete backtracking search: `None` is a proof
//! that no proper `k`-edge-coloring exists. The next edge is the uncoloured
//! one with the fewest admissible colours, ties broken by descending
//! endpoint-degree sum and then edge index. A colour index may only be used
//! once every smaller index already appears, which removes the `k!` colour
//! renamings from the search tree. A branch dies as soon as some vertex has
//! more uncoloured edges than usable colours, or when the parity of some
//! colour class forces more vertices to miss colours than their slack allows.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{low_mask, max_degree, Graph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColoringError {
    #[error("graph has no edges")]
    EmptyGraph,
}

/// Colour of every edge, indexed like [`Graph::edges`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeColoring {
    colors: Vec<usize>,
    k: usize,
}

impl EdgeColoring {
    pub fn new(colors: Vec<usize>, k: usize) -> Self {
        EdgeColoring { colors, k }
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    /// Number of colours available (not necessarily all used).
    pub fn k(&self) -> usize {
        self.k
    }

    /// Size of each colour class `0..k`.
    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.k];
        for &c in &self.colors {
            if c < self.k {
                sizes[c] += 1;
            }
        }
        sizes
    }
}

/// `class(G) = χ′(G) − Δ(G) + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassLabel {
    One,
    Two,
}

impl ClassLabel {
    pub fn value(self) -> usize {
        match self {
            ClassLabel::One => 1,
            ClassLabel::Two => 2,
        }
    }
}

struct Backtracker {
    ends: Vec<(usize, usize)>,
    // static tie-break rank of each edge
    rank: Vec<usize>,
    used: Vec<u64>,
    // uncoloured edges at each vertex
    left: Vec<usize>,
    assign: Vec<usize>,
    k: usize,
}

impl Backtracker {
    fn new(g: &Graph, k: usize) -> Self {
        let mut order: Vec<usize> = (0..g.m()).collect();
        order.sort_by_key(|&i| {
            let (u, v) = g.edges()[i];
            (std::cmp::Reverse(g.degree(u) + g.degree(v)), i)
        });
        let mut rank = vec![0; g.m()];
        for (r, &i) in order.iter().enumerate() {
            rank[i] = r;
        }
        Backtracker {
            ends: g.edges().to_vec(),
            rank,
            used: vec![0; g.n()],
            left: (0..g.n()).map(|v| g.degree(v)).collect(),
            assign: vec![usize::MAX; g.m()],
            k,
        }
    }

    /// Uncoloured edge with the fewest admissible colours, ties by rank.
    /// `Dead` when some vertex can no longer finish: it has more open edges
    /// than colours its open edges could take, or it must use every free
    /// colour but one of them fits none of its open edges.
    fn pick(&self, introduced: usize) -> Step {
        let full = low_mask(self.k);
        let limit = low_mask((introduced + 1).min(self.k));
        let mut avail = vec![0u64; self.used.len()];
        let mut best: Option<(usize, u64, u32)> = None;
        for (e, &(u, v)) in self.ends.iter().enumerate() {
            if self.assign[e] != usize::MAX {
                continue;
            }
            let fits = !(self.used[u] | self.used[v]) & full;
            avail[u] |= fits;
            avail[v] |= fits;
            let free = fits & limit;
            // colours at or above `introduced` count once: they are interchangeable
            let fresh = free.checked_shr(introduced as u32).unwrap_or(0) != 0;
            let distinct = (free & low_mask(introduced)).count_ones() + u32::from(fresh);
            let better = match best {
                None => true,
                Some((b, _, d)) => (distinct, self.rank[e]) < (d, self.rank[b]),
            };
            if better {
                best = Some((e, free, distinct));
            }
        }
        let Some((e, free, distinct)) = best else {
            return Step::Done;
        };
        if distinct == 0 {
            return Step::Dead;
        }
        let mut tight = 0u64;
        let mut slack_total = 0;
        for (x, &open) in self.left.iter().enumerate() {
            let free_here = !self.used[x] & full;
            let slots = free_here.count_ones() as usize;
            if open > (avail[x] & free_here).count_ones() as usize {
                return Step::Dead;
            }
            if open == slots {
                if free_here & !avail[x] != 0 {
                    return Step::Dead;
                }
                tight |= 1 << x;
            }
            slack_total += slots - open;
        }
        // Colour c ends as a matching, so the vertices missing c keep the
        // parity of those currently free of c. Unreachable vertices miss it
        // for sure, and an odd set of reachable ones leaves one more out.
        let everyone = low_mask(self.used.len());
        let mut forced_misses = 0;
        for c in 0..self.k {
            let bit = 1u64 << c;
            let mut free_of_c = 0u64;
            let mut reach = 0u64;
            for (x, &used) in self.used.iter().enumerate() {
                if used & bit == 0 {
                    free_of_c |= 1 << x;
                    if avail[x] & bit != 0 {
                        reach |= 1 << x;
                    }
                }
            }
            let unreachable = (free_of_c & !reach & everyone).count_ones() as usize;
            let odd = reach.count_ones() % 2 == 1;
            if odd && reach & !tight == 0 {
                return Step::Dead;
            }
            forced_misses += unreachable + usize::from(odd);
        }
        if forced_misses > slack_total {
            return Step::Dead;
        }
        Step::Edge(e, free)
    }

    fn search(&mut self, introduced: usize) -> bool {
        let (e, mut free) = match self.pick(introduced) {
            Step::Done => return true,
            Step::Dead => return false,
            Step::Edge(e, free) => (e, free),
        };
        let (u, v) = self.ends[e];
        self.left[u] -= 1;
        self.left[v] -= 1;
        while free != 0 {
            let c = free.trailing_zeros() as usize;
            free &= free - 1;
            let bit = 1u64 << c;
            self.used[u] |= bit;
            self.used[v] |= bit;
            self.assign[e] = c;
            if self.search(introduced.max(c + 1)) {
                return true;
            }
            self.used[u] &= !bit;
            self.used[v] &= !bit;
        }
        self.assign[e] = usize::MAX;
        self.left[u] += 1;
        self.left[v] += 1;
        false
    }
}

enum Step {
    Done,
    Dead,
    Edge(usize, u64),
}

/// A proper `k`-edge-coloring of `g`, or `None` if none exists.
pub fn edge_colorable(g: &Graph, k: usize) -> Option<EdgeColoring> {
    if g.is_edgeless() {
        return Some(EdgeColoring::new(Vec::new(), k));
    }
    let delta = max_degree(g);
    if k < delta {
        return None;
    }
    // every colour class is a matching among the non-isolated vertices
    let active = (0..g.n()).filter(|&v| g.degree(v) > 0).count();
    if g.m() > k.saturating_mul(active / 2) {
        return None;
    }
    // more than Δ+1 colours are never needed; bitmasks hold at most 64
    let palette = k.min(delta + 1);
    let mut bt = Backtracker::new(g, palette);
    if bt.search(0) {
        Some(EdgeColoring::new(bt.assign, k))
    } else {
        None
    }
}

/// `χ′(g)`: `Δ` if a `Δ`-coloring exists, otherwise `Δ + 1`.
pub fn chromatic_index(g: &Graph) -> usize {
    if g.is_edgeless() {
        return 0;
    }
    let delta = max_degree(g);
    if edge_colorable(g, delta).is_some() {
        delta
    } else {
        delta + 1
    }
}

/// `χ′(g)` together with an optimal coloring.
pub fn optimal_coloring(g: &Graph) -> EdgeColoring {
    let delta = max_degree(g);
    edge_colorable(g, delta)
        .or_else(|| edge_colorable(g, delta + 1))
        .expect("Δ+1 colours always suffice")
}

/// Edgeless graphs are class 1 by convention.
pub fn graph_class(g: &Graph) -> ClassLabel {
    if chromatic_index(g) > max_degree(g) {
        ClassLabel::Two
    } else {
        ClassLabel::One
    }
}

/// Calls `visit` on every matching of exactly `size` edges (as sorted edge
/// indices) until it returns `true`.
fn for_each_matching<F>(g: &Graph, size: usize, visit: &mut F) -> bool
where
    F: FnMut(&[usize]) -> bool,
{
    fn rec<F: FnMut(&[usize]) -> bool>(
        g: &Graph,
        from: usize,
        covered: u64,
        size: usize,
        chosen: &mut Vec<usize>,
        visit: &mut F,
    ) -> bool {
        if chosen.len() == size {
            return visit(chosen);
        }
        let need = size - chosen.len();
        for i in from..g.m() {
            if g.m() - i < need {
                break;
            }
            let (u, v) = g.edges()[i];
            let ends = 1u64 << u | 1u64 << v;
            if covered & ends != 0 {
                continue;
            }
            chosen.push(i);
            if rec(g, i + 1, covered | ends, size, chosen, visit) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    rec(g, 0, 0, size, &mut Vec::with_capacity(size), visit)
}

/// A `χ′`-coloring whose last colour class is as small as possible.
///
/// A colour class is a matching `M` with `χ′(g − M) ≤ χ′ − 1`; conversely
/// such an `M` plus any `(χ′−1)`-coloring of `g − M` is a `χ′`-coloring.
/// Matchings are tried by increasing size.
pub fn min_class_coloring(g: &Graph) -> Result<EdgeColoring, ColoringError> {
    if g.is_edgeless() {
        return Err(ColoringError::EmptyGraph);
    }
    let chi = chromatic_index(g);
    let half = g.n() / 2;
    // the other χ′−1 classes hold at most ⌊n/2⌋ edges each
    let lower = g.m().saturating_sub((chi - 1) * half).max(1);
    for size in lower..=g.m() {
        let mut found = None;
        for_each_matching(g, size, &mut |m: &[usize]| {
            let rest = g.without_edge_indices(m);
            match edge_colorable(&rest, chi - 1) {
                Some(c) => {
                    found = Some((m.to_vec(), c));
                    true
                }
                None => false,
            }
        });
        if let Some((matching, rest)) = found {
            // `rest` has the same vertex set, so edge order differs only by
            // the removed edges
            let mut colors = Vec::with_capacity(g.m());
            let mut rest_colors = rest.colors().iter();
            for i in 0..g.m() {
                if matching.binary_search(&i).is_ok() {
                    colors.push(chi - 1);
                } else {
                    colors.push(*rest_colors.next().expect("one colour per kept edge"));
                }
            }
            return Ok(EdgeColoring::new(colors, chi));
        }
    }
    unreachable!("the last class of an optimal coloring is a qualifying matching")
}

/// `t*(g)`: the smallest colour class over all `χ′(g)`-colorings.
pub fn t_star(g: &Graph) -> Result<usize, ColoringError> {
    let c = min_class_coloring(g)?;
    Ok(c.class_sizes()[c.k() - 1])
}

/// True iff `c` colours every edge of `g` with a colour below `c.k()` and
/// adjacent edges differ.
pub fn verify_coloring(g: &Graph, c: &EdgeColoring) -> bool {
    if c.colors().len() != g.m() {
        return false;
    }
    let mut seen = vec![vec![false; c.k()]; g.n()];
    for (&(u, v), &col) in g.edges().iter().zip(c.colors()) {
        if col >= c.k() || seen[u][col] || seen[v][col] {
            return false;
        }
        seen[u][col] = true;
        seen[v][col] = true;
    }
    true
}
