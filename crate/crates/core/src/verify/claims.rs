//! The claim catalogue.

use std::sync::LazyLock;

use itertools::Itertools;

use crate::coloring::{chromatic_index, graph_class, t_star, ClassLabel};
use crate::graph::FamilySpec::{self, *};
use crate::graph::{
    complement, components, corona, generate, is_bipartite, is_connected, is_overfull, join,
    max_degree, Graph, VertexSet,
};
use crate::stability::{
    closed_form_vs_chi_prime, domination_number, domination_of_max_degree, es,
    open_domination_of_max_degree, vs, vs_omega, InvariantDescriptor,
};

use super::corpus::{coronas, family, joins, labeled, labeled_upto, partitions};
use super::{Claim, Instance, Outcome, Scale};

static CHI: LazyLock<InvariantDescriptor> = LazyLock::new(InvariantDescriptor::chi_prime);
static DELTA: LazyLock<InvariantDescriptor> = LazyLock::new(InvariantDescriptor::max_degree);
static MIN_DEGREE: LazyLock<InvariantDescriptor> = LazyLock::new(InvariantDescriptor::min_degree);
static OMEGA: LazyLock<InvariantDescriptor> = LazyLock::new(InvariantDescriptor::components);
static CLASS: LazyLock<InvariantDescriptor> = LazyLock::new(InvariantDescriptor::class);

// subgraph enumeration in C3 is quadratic in 2^n
const SUBGRAPH_CORPUS_CAP: usize = 5;

fn vs_chi(g: &Graph) -> usize {
    vs(g, &CHI).value
}

fn vs_delta(g: &Graph) -> usize {
    vs(g, &DELTA).value
}

fn graph(i: &Instance) -> &Graph {
    match i {
        Instance::Graph(g) => g,
        other => panic!("expected a single graph, got {other}"),
    }
}

fn spec(i: &Instance) -> (&FamilySpec, Graph) {
    match i {
        Instance::Family(s) => (s, generate(s).expect("corpus specs are well formed")),
        other => panic!("expected a family member, got {other}"),
    }
}

fn pair(i: &Instance) -> (&Graph, &Graph, Graph) {
    match i {
        Instance::Corona(g, h) => (g, h, corona(g, h).expect("factors are small")),
        Instance::Join(g, h) => (g, h, join(g, h).expect("factors are small")),
        other => panic!("expected a product, got {other}"),
    }
}

fn check_eq(expected: usize, actual: usize) -> Outcome {
    if expected == actual {
        Outcome::pass()
    } else {
        Outcome::fail(expected, actual)
    }
}

fn without(g: &Graph, s: VertexSet) -> Graph {
    g.induced(g.vertices().difference(s))
}

/// Every `k`-set whose removal changes `χ′` or empties the graph.
fn chi_witnesses(g: &Graph, k: usize) -> Vec<VertexSet> {
    let before = chromatic_index(g);
    (0..g.n())
        .combinations(k)
        .map(VertexSet::from_iter)
        .filter(|&s| {
            let h = without(g, s);
            h.is_edgeless() || chromatic_index(&h) != before
        })
        .collect()
}

fn has_isolated(g: &Graph) -> bool {
    (0..g.n()).any(|v| g.degree(v) == 0)
}

// ---- general invariants -----------------------------------------------------

fn component_additivity(i: &Instance) -> Outcome {
    let g = graph(i);
    let parts = components(g).parts;
    if g.is_edgeless() || parts.len() < 2 {
        return Outcome::vacuous();
    }
    for rho in [&*CHI, &*DELTA] {
        let target = rho.evaluate(g);
        let sum: usize = parts
            .iter()
            .map(|&p| g.induced(p))
            .filter(|h| rho.evaluate(h) == target)
            .map(|h| vs(&h, rho).value)
            .sum();
        let actual = vs(g, rho).value;
        if actual != sum {
            return Outcome::fail(format!("{} sum {sum}", rho.name()), actual);
        }
    }
    Outcome::pass()
}

fn subgraph_lower_bound(i: &Instance) -> Outcome {
    let g = graph(i);
    if g.is_edgeless() {
        return Outcome::vacuous();
    }
    let k = chromatic_index(g);
    let v = vs_chi(g);

    // vertex-disjoint system: the components attaining χ′ (q = 1, a = 0)
    let attaining: Vec<Graph> = components(g)
        .parts
        .iter()
        .map(|&p| g.induced(p))
        .filter(|h| chromatic_index(h) == k)
        .collect();
    let s = attaining.len();
    let sum: usize = attaining.iter().map(vs_chi).sum();
    if v < sum || sum < s {
        return Outcome::fail(format!("vs ≥ Σ = {sum} ≥ s = {s}"), v);
    }

    // overlapping system: every G − x that keeps χ′
    let members: Vec<VertexSet> = (0..g.n())
        .map(|x| g.vertices().difference(VertexSet::singleton(x)))
        .filter(|&keep| chromatic_index(&g.induced(keep)) == k)
        .collect();
    if members.len() < 2 {
        return Outcome::pass();
    }
    let s = members.len();
    let sum: usize = members.iter().map(|&keep| vs_chi(&g.induced(keep))).sum();
    let cover: Vec<usize> = (0..g.n())
        .map(|u| members.iter().filter(|m| m.contains(u)).count())
        .collect();
    let q = cover.iter().copied().max().unwrap_or(0);
    let a = cover.iter().filter(|&&c| c >= 2).count();
    if q * v < sum || sum < s {
        return Outcome::fail(format!("q·vs ≥ Σ = {sum} ≥ s = {s} (q = {q})"), q * v);
    }
    if v + a * (q - 1) < sum {
        return Outcome::fail(format!("vs ≥ Σ − a(q−1) = {sum} − {a}·{}", q - 1), v);
    }
    Outcome::pass()
}

fn subgraph_corpus(scale: &Scale) -> Vec<Instance> {
    labeled_upto(scale.labeled_max_n.min(SUBGRAPH_CORPUS_CAP))
        .into_iter()
        .map(Instance::Graph)
        .collect()
}

fn subgraph_monotonicity(i: &Instance) -> Outcome {
    let g = graph(i);
    if g.is_edgeless() {
        return Outcome::vacuous();
    }
    let k = chromatic_index(g);
    let v = vs_chi(g);
    for bits in 1..(1u64 << g.n()) - 1 {
        let s = VertexSet::from_bits(bits);
        let h = without(g, s);
        if chromatic_index(&h) == k {
            let vh = vs_chi(&h);
            if vh > v {
                return Outcome::fail(format!("vs(G − {s}) ≤ {v}"), vh);
            }
        }
    }
    Outcome::pass()
}

fn vs_min_degree(i: &Instance) -> Outcome {
    let g = graph(i);
    if has_isolated(g) {
        return Outcome::vacuous();
    }
    check_eq(1, vs(g, &MIN_DEGREE).value)
}

fn vs_max_degree_domination(i: &Instance) -> Outcome {
    let g = graph(i);
    if g.is_edgeless() || !is_connected(g) {
        return Outcome::vacuous();
    }
    let gamma = domination_of_max_degree(g).expect("nonempty").value;
    let out = check_eq(gamma, vs_delta(g));
    if open_domination_of_max_degree(g) != Some(gamma) {
        out.noted("open-neighbourhood reading N(Γ) = V_Δ gives a different value")
    } else {
        out
    }
}

fn vs_components_connectivity(i: &Instance) -> Outcome {
    let g = graph(i);
    if g.is_edgeless() || has_isolated(g) {
        return Outcome::vacuous();
    }
    let formula = vs_omega(g).expect("nonempty");
    let actual = vs(g, &OMEGA).value;
    if formula == actual {
        return Outcome::pass();
    }
    // a complete component K_j only changes ω when all j vertices go, since
    // cutting it down to K_1 leaves the count alone
    let parts = components(g).parts;
    let cheapest = parts
        .iter()
        .map(|&p| {
            let h = g.induced(p);
            if crate::graph::is_complete(&h) {
                h.n()
            } else {
                crate::graph::connectivity(&h).expect("nonempty")
            }
        })
        .min()
        .expect("nonempty");
    if parts.len() > 1 && actual == cheapest {
        Outcome::documented(formula, actual)
    } else {
        Outcome::fail(formula, actual)
    }
}

// ---- chromatic index --------------------------------------------------------

fn class1_lower_bound(i: &Instance) -> Outcome {
    let g = graph(i);
    if g.is_edgeless() || graph_class(g) != ClassLabel::One {
        return Outcome::vacuous();
    }
    let (c, d) = (vs_chi(g), vs_delta(g));
    if c >= d {
        Outcome::pass()
    } else {
        Outcome::fail(format!("≥ {d}"), c)
    }
}

fn class1_equality(i: &Instance) -> Outcome {
    let g = graph(i);
    if g.is_edgeless() || graph_class(g) != ClassLabel::One {
        return Outcome::vacuous();
    }
    let d = vs_delta(g);
    let delta = max_degree(g);
    let fires = (0..g.n()).combinations(d).any(|c| {
        let h = without(g, VertexSet::from_iter(c));
        max_degree(&h) < delta && graph_class(&h) == ClassLabel::One
    });
    if !fires {
        return Outcome::vacuous();
    }
    check_eq(d, vs_chi(g))
}

fn class2_min(i: &Instance) -> Outcome {
    let g = graph(i);
    if g.is_edgeless() || graph_class(g) != ClassLabel::Two {
        return Outcome::vacuous();
    }
    let expected = vs_delta(g).min(vs(g, &CLASS).value);
    check_eq(expected, vs_chi(g))
}

fn bipartite(i: &Instance) -> Outcome {
    let g = graph(i);
    if g.is_edgeless() || !is_bipartite(g) {
        return Outcome::vacuous();
    }
    check_eq(vs_delta(g), vs_chi(g))
}

fn closed_form(i: &Instance) -> Outcome {
    let (s, g) = spec(i);
    let expected = closed_form_vs_chi_prime(s).expect("family has a closed form");
    check_eq(expected, vs_chi(&g))
}

fn complete_bipartite(i: &Instance) -> Outcome {
    let (s, g) = spec(i);
    let expected = closed_form_vs_chi_prime(s).expect("closed form");
    let (c, d) = (vs_chi(&g), vs_delta(&g));
    if c == expected && d == expected {
        Outcome::pass()
    } else {
        Outcome::fail(format!("{expected}/{expected}"), format!("{c}/{d}"))
    }
}

fn chi_two(i: &Instance) -> Outcome {
    let g = graph(i);
    if chromatic_index(g) != 2 {
        return Outcome::vacuous();
    }
    check_eq(vs_delta(g), vs_chi(g))
}

fn paths(i: &Instance) -> Outcome {
    let (s, g) = spec(i);
    let Path(n) = *s else { unreachable!() };
    let formula = closed_form_vs_chi_prime(s).expect("n ≥ 3");
    let gamma = domination_number(&generate(&Path(n - 2)).expect("n ≥ 3"));
    let got = [vs_chi(&g), vs_delta(&g), gamma];
    if got.iter().all(|&x| x == formula) {
        Outcome::pass()
    } else {
        Outcome::fail(
            format!("vs_χ′ = vs_Δ = γ(P_n−2) = {formula}"),
            format!("{}/{}/{}", got[0], got[1], got[2]),
        )
    }
}

fn tstar_upper_bound(i: &Instance) -> Outcome {
    let g = graph(i);
    if g.is_edgeless() {
        return Outcome::vacuous();
    }
    let v = vs_chi(g);
    let t = t_star(g).expect("nonempty");
    let e = es(g, &CHI).value;
    let bound = g.m() / chromatic_index(g);
    if 1 <= v && v <= t && t <= bound && v <= e && e <= bound {
        Outcome::pass()
    } else {
        Outcome::fail(
            format!("1 ≤ vs ≤ t* ≤ {bound}, vs ≤ es ≤ {bound}"),
            format!("vs {v}, t* {t}, es {e}"),
        )
    }
}

const GAP_PATHS: [usize; 4] = [4, 5, 11, 17];
const GAP_CYCLES: [usize; 5] = [3, 5, 7, 11, 13];

fn gap_sequences(scale: &Scale) -> Vec<Instance> {
    let fit = |specs: Vec<FamilySpec>| -> Vec<FamilySpec> {
        specs
            .into_iter()
            .filter(|s| s.order() <= scale.max_n)
            .collect()
    };
    vec![
        Instance::Sequence(fit(GAP_PATHS.iter().map(|&n| Path(n)).collect())),
        Instance::Sequence(fit(GAP_CYCLES.iter().map(|&n| Cycle(n)).collect())),
    ]
}

fn arbitrary_gaps(i: &Instance) -> Outcome {
    let Instance::Sequence(specs) = i else {
        panic!("expected a sequence, got {i}")
    };
    if specs.len() < 2 {
        return Outcome::vacuous();
    }
    let gaps: Vec<usize> = specs
        .iter()
        .map(|s| {
            let g = generate(s).expect("well formed");
            let v = vs_chi(&g);
            let other = match s {
                Path(_) => t_star(&g).expect("nonempty"),
                _ => vs_delta(&g),
            };
            v.abs_diff(other)
        })
        .collect();
    if gaps.windows(2).all(|w| w[0] < w[1]) {
        Outcome::pass()
    } else {
        Outcome::fail("strictly increasing gaps", format!("{gaps:?}"))
    }
}

fn tstar_paths_formula(i: &Instance) -> Outcome {
    let (s, g) = spec(i);
    let Path(n) = *s else { unreachable!() };
    let t = t_star(&g).expect("n ≥ 2");
    if t == n / 2 {
        Outcome::pass()
    } else if n % 2 == 0 && t == (n - 1) / 2 {
        // P_n has n − 1 edges, so the formula is off by one on even n
        Outcome::documented(n / 2, t)
    } else {
        Outcome::fail(n / 2, t)
    }
}

fn nordhaus_corpus(scale: &Scale) -> Vec<Instance> {
    let mut out = labeled(scale);
    out.extend(family(scale, [Cycle(4)]));
    out
}

fn nordhaus(i: &Instance) -> Outcome {
    let (g, tight) = match i {
        Instance::Graph(g) => (g.clone(), false),
        _ => (spec(i).1, true),
    };
    let h = complement(&g);
    if g.is_edgeless() || h.is_edgeless() {
        return Outcome::vacuous();
    }
    let sum = vs_chi(&g) + vs_chi(&h);
    let bound = g.m() / chromatic_index(&g) + h.m() / chromatic_index(&h);
    let ok = 2 <= sum && sum <= bound && (!tight || sum == bound);
    if ok {
        Outcome::pass()
    } else if tight {
        Outcome::fail(format!("sum = {bound}"), sum)
    } else {
        Outcome::fail(format!("2 ≤ sum ≤ {bound}"), sum)
    }
}

fn dominating_vertex(i: &Instance) -> Outcome {
    let g = graph(i);
    let n = g.n();
    if g.is_edgeless() || max_degree(g) != n - 1 {
        return Outcome::vacuous();
    }
    let v = vs_chi(g);
    let full = (0..n).filter(|&x| g.degree(x) == n - 1).count();
    let must_be_one = graph_class(g) == ClassLabel::Two || full == 1;
    if must_be_one {
        check_eq(1, v)
    } else if v == 1 || v == 2 {
        Outcome::pass()
    } else {
        Outcome::fail("1 or 2", v)
    }
}

fn multipartite_corpus(scale: &Scale) -> Vec<Instance> {
    family(
        scale,
        partitions(scale.max_n)
            .into_iter()
            .map(CompleteMultipartite),
    )
}

fn multipartite(i: &Instance) -> Outcome {
    let (s, g) = spec(i);
    let CompleteMultipartite(parts) = s else {
        unreachable!()
    };
    let star_like = parts[0] == 1 && parts[1..].iter().all(|&a| a >= 2);
    if parts.len() < 3 && !star_like {
        return Outcome::vacuous();
    }
    let v = vs_chi(&g);
    if star_like && v != 1 {
        return Outcome::fail(1, v);
    }
    if parts.len() >= 3 && !(1..=3).contains(&v) {
        return Outcome::fail("1..=3", v);
    }
    Outcome::pass()
}

fn complete_plus_apex(i: &Instance) -> Outcome {
    let (s, g) = spec(i);
    let expected = closed_form_vs_chi_prime(s).expect("n ≥ 2");
    let (c, d) = (vs_chi(&g), vs_delta(&g));
    if c == expected && d == 1 {
        Outcome::pass()
    } else {
        Outcome::fail(
            format!("vs_χ′ {expected}, vs_Δ 1"),
            format!("vs_χ′ {c}, vs_Δ {d}"),
        )
    }
}

fn gadget_chain(i: &Instance) -> Outcome {
    let (s, g) = spec(i);
    let GadgetChain(k) = *s else { unreachable!() };
    check_eq(k, vs_chi(&g))
}

fn overfull(i: &Instance) -> Outcome {
    let g = graph(i);
    if !is_overfull(g) {
        return Outcome::vacuous();
    }
    if graph_class(g) == ClassLabel::Two {
        Outcome::pass()
    } else {
        Outcome::fail("class 2", "class 1")
    }
}

// ---- coronas and joins ------------------------------------------------------

fn corona_max_degree(i: &Instance) -> Outcome {
    let (g, _, p) = pair(i);
    if max_degree(g) == 0 {
        return Outcome::vacuous();
    }
    let (a, b) = (vs_delta(&p), vs_delta(g));
    if a <= b {
        Outcome::pass()
    } else {
        Outcome::fail(format!("≤ {b}"), a)
    }
}

fn corona_chi_equality(i: &Instance) -> Outcome {
    let (g, _, p) = pair(i);
    let delta = max_degree(g);
    if delta == 0 {
        return Outcome::vacuous();
    }
    let k = vs_chi(g);
    let witnesses = chi_witnesses(g, k);
    let good = witnesses
        .iter()
        .filter(|&&s| max_degree(&without(g, s)) + 1 < delta)
        .count();
    if good == 0 {
        return Outcome::vacuous();
    }
    let out = check_eq(k, vs_chi(&p));
    if good < witnesses.len() {
        out.noted("hypothesis holds for some but not all minimum witnesses")
    } else {
        out
    }
}

fn corona_class2_bound(i: &Instance) -> Outcome {
    let (g, _, p) = pair(i);
    if max_degree(g) == 0 {
        return Outcome::vacuous();
    }
    let dom = domination_of_max_degree(g).expect("nonempty");
    // Γ lives in the copy of g, which keeps labels 0..n(g) in the corona
    let class2 = graph_class(&p) == ClassLabel::Two;
    let rest_class1 = graph_class(&without(&p, dom.witness)) == ClassLabel::One;
    if !class2 && !rest_class1 {
        return Outcome::vacuous();
    }
    let v = vs_chi(&p);
    let out = if v <= dom.value {
        Outcome::pass()
    } else {
        Outcome::fail(format!("≤ {}", dom.value), v)
    };
    if class2 {
        out
    } else {
        out.noted("fired only through the class-1 remainder corollary")
    }
}

fn join_degrees(g: &Graph, h: &Graph) -> (usize, usize) {
    (max_degree(g) + h.n(), max_degree(h) + g.n())
}

fn join_max_degree(i: &Instance) -> Outcome {
    let (g, h, p) = pair(i);
    let v = vs_delta(&p);
    let (a, b) = join_degrees(g, h);
    if a != b {
        check_eq(1, v)
    } else if v <= 2 {
        Outcome::pass()
    } else {
        Outcome::fail("≤ 2", v)
    }
}

fn join_chi_bound(i: &Instance) -> Outcome {
    let (g, h, p) = pair(i);
    if g.n() < 2 || h.n() < 2 {
        return Outcome::vacuous();
    }
    let v = vs_chi(&p);
    if v <= 4 {
        Outcome::pass()
    } else {
        Outcome::fail("≤ 4", v)
    }
}

fn join_class2(i: &Instance) -> Outcome {
    let (g, h, p) = pair(i);
    let (a, b) = join_degrees(g, h);
    if a == b || graph_class(&p) != ClassLabel::Two {
        return Outcome::vacuous();
    }
    check_eq(1, vs_chi(&p))
}

fn join_unbalanced(i: &Instance) -> Outcome {
    let (g, h, p) = pair(i);
    if g.n() != h.n() + 1 || max_degree(g) == max_degree(h) {
        return Outcome::vacuous();
    }
    check_eq(1, vs_chi(&p))
}

// ---- catalogue --------------------------------------------------------------

fn paths_from_three(scale: &Scale) -> Vec<Instance> {
    family(scale, (3..=scale.max_n).map(Path))
}

static CATALOG: LazyLock<Vec<Claim>> = LazyLock::new(|| {
    vec![
        Claim {
            id: "component-additivity",
            anchor: "§2 Thm, \"vs_ρ(G)=Σ_{i=1}^s vs_ρ(H_i)\"",
            description: "for maxing monotone ρ, vs_ρ sums over the components attaining ρ(G)",
            instances: labeled,
            check: component_additivity,
        },
        Claim {
            id: "subgraph-lower-bound",
            anchor: "§2 Thm, \"vs_ρ(G) ≥ (1/q) Σ vs_ρ(G_i)\" and \"−a(q−1)\"",
            description: "lower bounds from subgraph systems with equal χ′",
            instances: labeled,
            check: subgraph_lower_bound,
        },
        Claim {
            id: "subgraph-monotonicity",
            anchor: "§2 Cor, \"vs_ρ(H) ≤ vs_ρ(G)\"",
            description: "induced H with χ′(H) = χ′(G) has vs(H) ≤ vs(G)",
            instances: subgraph_corpus,
            check: subgraph_monotonicity,
        },
        Claim {
            id: "vs-min-degree",
            anchor: "§2 Prop, \"without isolated vertex, then vs_δ(G)=1\"",
            description: "vs_δ = 1 without isolated vertices",
            instances: labeled,
            check: vs_min_degree,
        },
        Claim {
            id: "vs-max-degree-domination",
            anchor: "§2 Prop, \"vs_Δ(G)=γ(V_Δ)\"",
            description: "vs_Δ equals the closed domination number of V_Δ on connected graphs",
            instances: labeled,
            check: vs_max_degree_domination,
        },
        Claim {
            id: "vs-components-connectivity",
            anchor: "§2 Prop, \"vs_ω(G) = min{κ(H_i)\"",
            description: "vs_ω is the least connectivity of a nontrivial component",
            instances: labeled,
            check: vs_components_connectivity,
        },
        Claim {
            id: "class1-lower-bound",
            anchor: "§3 Lemma, \"vs_χ′(G) ≥ vs_Δ(G)\"",
            description: "class 1 graphs have vs_χ′ ≥ vs_Δ",
            instances: labeled,
            check: class1_lower_bound,
        },
        Claim {
            id: "class1-equality",
            anchor: "§3 Prop, \"then vs_χ′(G) = vs_Δ(G)\"",
            description: "class 1 with a Δ-witness leaving class 1 gives vs_χ′ = vs_Δ",
            instances: labeled,
            check: class1_equality,
        },
        Claim {
            id: "thm-class2-min",
            anchor: "§3 Thm, \"min{vs_Δ(G), vs_class(G)}\"",
            description: "class 2 graphs have vs_χ′ = min(vs_Δ, vs_class)",
            instances: labeled,
            check: class2_min,
        },
        Claim {
            id: "thm-bipartite",
            anchor: "§3 Thm, \"If G is bipartite, then vs_χ′(G)=vs_Δ(G)\"",
            description: "bipartite graphs have vs_χ′ = vs_Δ",
            instances: labeled,
            check: bipartite,
        },
        Claim {
            id: "cor-complete-bipartite",
            anchor: "§3 Cor, \"2 if m=n, 1 if m≠n\"",
            description: "vs_χ′(K_{m,n}) = vs_Δ(K_{m,n}) = 2 iff m = n, else 1",
            instances: |s| {
                family(
                    s,
                    (1..=s.max_n).flat_map(|a| (a..=s.max_n).map(move |b| CompleteBipartite(a, b))),
                )
            },
            check: complete_bipartite,
        },
        Claim {
            id: "obs-chi-two",
            anchor: "§3 Obs, \"If χ′(G)=2, then vs_χ′(G)=vs_Δ(G)\"",
            description: "χ′ = 2 implies vs_χ′ = vs_Δ",
            instances: labeled,
            check: chi_two,
        },
        Claim {
            id: "thm-paths",
            anchor: "§3 Thm, \"vs_χ′(P_n)=vs_Δ(P_n)=γ(P_{n−2})=⌈(n−2)/3⌉\"",
            description: "paths on n ≥ 3 vertices",
            instances: paths_from_three,
            check: paths,
        },
        Claim {
            id: "tstar-upper-bound",
            anchor: "§3, \"vs_χ′(G) ≤ t*(G)\" and \"vs_χ′(G) ≤ ⌊|E(G)|/χ′(G)⌋\"",
            description: "vs_χ′ ≤ t* ≤ ⌊m/χ′⌋ and vs_χ′ ≤ es_χ′ ≤ ⌊m/χ′⌋",
            instances: labeled,
            check: tstar_upper_bound,
        },
        Claim {
            id: "thm-cycles",
            anchor: "§3 Thm, \"vs_χ′(C_n)=1 if n is odd, ⌈n/3⌉ if n is even\"",
            description: "cycles",
            instances: |s| family(s, (3..=s.max_n).map(Cycle)),
            check: closed_form,
        },
        Claim {
            id: "thm-arbitrary-gaps",
            anchor: "§3 Thm, \"can be arbitrarily large\"",
            description: "|vs_χ′ − t*| on paths and |vs_χ′ − vs_Δ| on odd cycles grow strictly",
            instances: gap_sequences,
            check: arbitrary_gaps,
        },
        Claim {
            id: "tstar-paths-formula",
            anchor: "§3 proof of gap theorem, \"t*(P_n)=⌊n/2⌋\"",
            description: "t* of the path on n vertices",
            instances: paths_from_three,
            check: tstar_paths_formula,
        },
        Claim {
            id: "nordhaus-upper",
            anchor: "§3 Thm, \"2 ≤ vs_χ′(G)+vs_χ′(Ḡ) ≤ ⌊m/χ′(G)⌋+⌊m̄/χ′(Ḡ)⌋\"; \"The cycle graph C_4 is an example\"",
            description: "Nordhaus-type bounds, tight on C_4",
            instances: nordhaus_corpus,
            check: nordhaus,
        },
        Claim {
            id: "thm-dominating-vertex",
            anchor: "§3 Thm, \"Δ(G)=n−1, then vs_χ′(G)=1 or vs_χ′(G)=2\"",
            description: "a dominating vertex forces vs_χ′ ∈ {1, 2}, and 1 if class 2 or unique",
            instances: labeled,
            check: dominating_vertex,
        },
        Claim {
            id: "thm-complete-wheel",
            anchor: "§3 Thm, \"1 if n is odd, 2 if n is even\"; \"vs_χ′(W_3)=2 and for n≥4, vs_χ′(W_n)=1\"",
            description: "complete graphs and wheels",
            instances: |s| {
                family(s, (2..=s.max_n).map(Complete).chain((3..=s.max_n).map(Wheel)))
            },
            check: closed_form,
        },
        Claim {
            id: "thm-multipartite",
            anchor: "§3 Thm, \"1 ≤ vs_χ′(G) ≤ 3\"; Cor, \"K_{1,a_1,...,a_p} ... vs_χ′(G)=1\"",
            description: "complete multipartite graphs",
            instances: multipartite_corpus,
            check: multipartite,
        },
        Claim {
            id: "thm-complete-plus-apex",
            anchor: "§3 Thm, \"vs_Δ(G)=1 and if n is even\"; \"If n≥2 is odd and 0≤d≤n, then vs_χ′(G)=2\"",
            description: "K_n plus a vertex of degree d",
            instances: |s| {
                family(
                    s,
                    (2..=s.max_n).flat_map(|n| (0..=n).map(move |d| CompletePlusApex { n, d })),
                )
            },
            check: complete_plus_apex,
        },
        Claim {
            id: "thm-gadget-chain",
            anchor: "§3 Thm, \"vs_χ′(G)=k\" (G_k, Figure 1)",
            description: "the chain G_k has vs_χ′ = k",
            instances: |s| family(s, (1..=s.max_n).map(GadgetChain)),
            check: gadget_chain,
        },
        Claim {
            id: "corona-max-degree",
            anchor: "§4 Prop, \"vs_Δ(G∘H) ≤ vs_Δ(G)\"",
            description: "corona does not raise vs_Δ when Δ(G) ≥ 1",
            instances: coronas,
            check: corona_max_degree,
        },
        Claim {
            id: "corona-chi-equality",
            anchor: "§4 Thm, \"Δ(G−V′)+1 < Δ(G), then vs_χ′(G∘H)=vs_χ′(G)\"",
            description: "corona keeps vs_χ′ when some minimum witness drops Δ by 2",
            instances: coronas,
            check: corona_chi_equality,
        },
        Claim {
            id: "corona-class2-bound",
            anchor: "§4 Thm and Cor, \"vs_χ′(G∘H) ≤ γ(V_{Δ(G)})\"",
            description: "class 2 corona, or class 1 remainder after Γ, gives vs_χ′ ≤ γ(V_Δ(G))",
            instances: coronas,
            check: corona_class2_bound,
        },
        Claim {
            id: "join-max-degree",
            anchor: "§4 Props, \"vs_Δ(G_1∨G_2) ≤ 2\"; \"Δ_1+n_2 ≠ Δ_2+n_1, then vs_Δ(G)=1\"",
            description: "vs_Δ of a join",
            instances: joins,
            check: join_max_degree,
        },
        Claim {
            id: "join-chi-bound",
            anchor: "§4 Thm, \"n_1,n_2≥2, then vs_χ′(G) ≤ 4\"",
            description: "vs_χ′ of a join with both sides of order at least 2",
            instances: joins,
            check: join_chi_bound,
        },
        Claim {
            id: "join-class2",
            anchor: "§4 Thm, \"is in class 2, and Δ_1+n_2≠Δ_2+n_1, then vs_χ′(G)=1\"",
            description: "unbalanced class 2 joins",
            instances: joins,
            check: join_class2,
        },
        Claim {
            id: "join-unbalanced",
            anchor: "§4 Thm, \"n_1=n_2+1 and Δ_1>Δ_2\" / \"Δ_1<Δ_2\", \"vs_χ′(G)=1\"",
            description: "joins with n_1 = n_2 + 1 and distinct maximum degrees",
            instances: joins,
            check: join_unbalanced,
        },
        Claim {
            id: "overfull-class2",
            anchor: "§3, \"an overfull graph must be a class 2 graph\"",
            description: "overfull graphs are class 2",
            instances: labeled,
            check: overfull,
        },
    ]
});

/// All claims in reporting order.
pub fn catalog() -> &'static [Claim] {
    &CATALOG
}
