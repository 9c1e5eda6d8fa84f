//! The library's search code against the slow reference implementations.

mod common;

use chromstab::graph::{connectivity, enumerate_labeled_graphs, labeled_corpus};
use chromstab::stability::domination_of_max_degree;
use chromstab::{chromatic_index, es, t_star, vs, InvariantDescriptor};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn connectivity_matches_max_flow() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for i in 0..50 {
        let n = 2 + i % 7;
        let g = common::random_graph(&mut rng, n, 0.5);
        assert_eq!(
            connectivity(&g).unwrap(),
            common::flow_connectivity(&g),
            "{:?}",
            g.edges()
        );
    }
}

#[test]
fn chromatic_index_matches_brute_force() {
    for g in labeled_corpus(5).unwrap() {
        assert_eq!(
            chromatic_index(&g),
            common::brute_chi(&g),
            "{:?}",
            g.edges()
        );
    }
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..40 {
        let g = common::random_graph(&mut rng, 7, 0.6);
        assert_eq!(chromatic_index(&g), common::brute_chi(&g));
    }
}

#[test]
fn petersen_is_class_two() {
    let p = common::petersen();
    assert_eq!(common::brute_max_degree(&p), 3);
    assert_eq!(chromatic_index(&p), 4);
}

#[test]
fn t_star_of_k4_by_enumeration() {
    let k4 = chromstab::Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
    assert_eq!(common::brute_t_star(&k4), 2);
    assert_eq!(t_star(&k4), Ok(2));
}

#[test]
fn t_star_matches_enumeration() {
    for n in 2..=5 {
        for g in enumerate_labeled_graphs(n)
            .unwrap()
            .filter(|g| g.m() > 0 && g.m() <= 7)
        {
            assert_eq!(
                t_star(&g).unwrap(),
                common::brute_t_star(&g),
                "{:?}",
                g.edges()
            );
        }
    }
}

#[test]
fn vertex_stability_matches_definition() {
    let chi = InvariantDescriptor::chi_prime();
    let delta = InvariantDescriptor::max_degree();
    for g in labeled_corpus(5).unwrap() {
        assert_eq!(vs(&g, &chi).value, common::brute_vs(&g, common::brute_chi));
        assert_eq!(
            vs(&g, &delta).value,
            common::brute_vs(&g, common::brute_max_degree)
        );
    }
}

#[test]
fn edge_stability_matches_definition() {
    let chi = InvariantDescriptor::chi_prime();
    for g in labeled_corpus(4).unwrap() {
        assert_eq!(
            es(&g, &chi).value,
            common::brute_es(&g, common::brute_chi),
            "{:?}",
            g.edges()
        );
    }
}

#[test]
fn domination_matches_definition() {
    for g in labeled_corpus(5).unwrap().iter().filter(|g| g.m() > 0) {
        assert_eq!(
            domination_of_max_degree(g).unwrap().value,
            common::brute_gamma_max_degree(g)
        );
    }
}
