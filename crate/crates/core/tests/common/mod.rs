//! Reference implementations shared by the integration tests. They avoid the
//! library's search code entirely and only use `Graph::new` and accessors.

#![allow(dead_code)]

use std::collections::VecDeque;

use chromstab::Graph;
use rand::Rng;

pub fn degrees(n: usize, edges: &[(usize, usize)]) -> Vec<usize> {
    let mut d = vec![0; n];
    for &(u, v) in edges {
        d[u] += 1;
        d[v] += 1;
    }
    d
}

/// Subgraph induced by the vertices outside `removed`, relabelled in order.
pub fn remove_vertices(g: &Graph, removed: u64) -> Graph {
    let keep: Vec<usize> = (0..g.n()).filter(|&v| removed >> v & 1 == 0).collect();
    let pos = |v: usize| keep.iter().position(|&k| k == v);
    let edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .filter_map(|&(u, v)| Some((pos(u)?, pos(v)?)))
        .collect();
    Graph::new(keep.len(), &edges).unwrap()
}

fn colorable(edges: &[(usize, usize)], k: usize, colors: &mut Vec<usize>) -> bool {
    let i = colors.len();
    if i == edges.len() {
        return true;
    }
    let (u, v) = edges[i];
    for c in 0..k {
        let clash = edges[..i]
            .iter()
            .zip(colors.iter())
            .any(|(&(a, b), &col)| col == c && (a == u || a == v || b == u || b == v));
        if !clash {
            colors.push(c);
            if colorable(edges, k, colors) {
                return true;
            }
            colors.pop();
        }
    }
    false
}

/// Chromatic index by plain backtracking in edge-index order, trying every
/// `k` upward from the maximum degree.
pub fn brute_chi(g: &Graph) -> usize {
    let delta = degrees(g.n(), g.edges()).into_iter().max().unwrap_or(0);
    (delta..)
        .find(|&k| colorable(g.edges(), k, &mut Vec::new()))
        .unwrap()
}

pub fn brute_max_degree(g: &Graph) -> usize {
    degrees(g.n(), g.edges()).into_iter().max().unwrap_or(0)
}

/// Every proper colouring of `g` with colours `0..k`, as colour vectors.
pub fn all_colorings(g: &Graph, k: usize) -> Vec<Vec<usize>> {
    let m = g.m();
    let mut out = Vec::new();
    let total = k.pow(m as u32);
    'next: for code in 0..total {
        let mut c = Vec::with_capacity(m);
        let mut x = code;
        for _ in 0..m {
            c.push(x % k);
            x /= k;
        }
        for i in 0..m {
            for j in i + 1..m {
                let (a, b) = g.edges()[i];
                let (p, q) = g.edges()[j];
                if c[i] == c[j] && (a == p || a == q || b == p || b == q) {
                    continue 'next;
                }
            }
        }
        out.push(c);
    }
    out
}

/// `t*` by enumerating every `χ′`-colouring.
pub fn brute_t_star(g: &Graph) -> usize {
    let k = brute_chi(g);
    all_colorings(g, k)
        .iter()
        .map(|c| {
            (0..k)
                .map(|col| c.iter().filter(|&&x| x == col).count())
                .min()
                .unwrap()
        })
        .min()
        .unwrap()
}

/// `vs_ρ` straight from the definition: smallest removal by popcount, over
/// every vertex subset.
pub fn brute_vs(g: &Graph, rho: impl Fn(&Graph) -> usize) -> usize {
    if g.m() == 0 {
        return 0;
    }
    let before = rho(g);
    (0u64..1 << g.n())
        .filter(|&s| {
            let h = remove_vertices(g, s);
            h.m() == 0 || rho(&h) != before
        })
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap()
}

pub fn brute_es(g: &Graph, rho: impl Fn(&Graph) -> usize) -> usize {
    if g.m() == 0 {
        return 0;
    }
    let before = rho(g);
    (0u64..1 << g.m())
        .filter(|&s| {
            let kept: Vec<(usize, usize)> = g
                .edges()
                .iter()
                .enumerate()
                .filter(|&(i, _)| s >> i & 1 == 0)
                .map(|(_, &e)| e)
                .collect();
            let h = Graph::new(g.n(), &kept).unwrap();
            h.m() == 0 || rho(&h) != before
        })
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap()
}

/// Fewest vertices whose closed neighbourhoods cover every maximum-degree
/// vertex.
pub fn brute_gamma_max_degree(g: &Graph) -> usize {
    let d = degrees(g.n(), g.edges());
    let delta = d.iter().copied().max().unwrap();
    let target: u64 = (0..g.n()).filter(|&v| d[v] == delta).map(|v| 1 << v).sum();
    let closed = |v: usize| -> u64 {
        let mut m = 1u64 << v;
        for &(a, b) in g.edges() {
            if a == v {
                m |= 1 << b;
            }
            if b == v {
                m |= 1 << a;
            }
        }
        m
    };
    (0u64..1 << g.n())
        .filter(|&s| {
            let cover = (0..g.n())
                .filter(|&v| s >> v & 1 == 1)
                .fold(0, |acc, v| acc | closed(v));
            target & !cover == 0
        })
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap()
}

/// Vertex connectivity via unit-capacity max flow on the split graph:
/// `κ = min` over non-adjacent pairs of the number of internally disjoint
/// paths, and `n − 1` for complete graphs.
pub fn flow_connectivity(g: &Graph) -> usize {
    let n = g.n();
    if g.m() == n * (n - 1) / 2 {
        return n - 1;
    }
    let mut best = usize::MAX;
    for s in 0..n {
        for t in s + 1..n {
            if !g.has_edge(s, t) {
                best = best.min(disjoint_paths(g, s, t));
            }
        }
    }
    best
}

fn disjoint_paths(g: &Graph, s: usize, t: usize) -> usize {
    // node v splits into v_in = 2v and v_out = 2v + 1
    let size = 2 * g.n();
    let mut cap = vec![vec![0i32; size]; size];
    for v in 0..g.n() {
        cap[2 * v][2 * v + 1] = if v == s || v == t { i32::MAX / 4 } else { 1 };
    }
    for &(u, v) in g.edges() {
        cap[2 * u + 1][2 * v] = i32::MAX / 4;
        cap[2 * v + 1][2 * u] = i32::MAX / 4;
    }
    let (src, sink) = (2 * s + 1, 2 * t);
    let mut flow = 0;
    loop {
        let mut prev = vec![usize::MAX; size];
        prev[src] = src;
        let mut queue = VecDeque::from([src]);
        while let Some(x) = queue.pop_front() {
            for y in 0..size {
                if prev[y] == usize::MAX && cap[x][y] > 0 {
                    prev[y] = x;
                    queue.push_back(y);
                }
            }
        }
        if prev[sink] == usize::MAX {
            return flow;
        }
        let mut y = sink;
        while y != src {
            let x = prev[y];
            cap[x][y] -= 1;
            cap[y][x] += 1;
            y = x;
        }
        flow += 1;
    }
}

/// graph6 decoder written from the format description.
pub fn decode_graph6(s: &str) -> Graph {
    let bytes: Vec<u8> = s.bytes().map(|b| b - 63).collect();
    let n = bytes[0] as usize;
    let mut bits = bytes[1..]
        .iter()
        .flat_map(|&b| (0..6).rev().map(move |i| b >> i & 1 == 1));
    let mut edges = Vec::new();
    for v in 1..n {
        for u in 0..v {
            if bits.next().unwrap() {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    let edges: Vec<(usize, usize)> = edges
        .into_iter()
        .map(|(a, b)| (a.min(b), a.max(b)))
        .collect();
    Graph::new(10, &edges).unwrap()
}
