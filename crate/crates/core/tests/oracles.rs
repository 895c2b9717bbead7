mod common;

use common::*;
use gfree::named;
use gfree::{
    canonical_form, chi_g_exact, chromatic_number, contains_copy, enumerate_small_graphs, find_copy, is_critical,
    Containment, Graph, PatternSpec,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn random_graph(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    let edges: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| rng.gen_bool(p)).collect();
    Graph::from_edges(n, edges).unwrap()
}

fn small_patterns() -> Vec<Graph> {
    vec![
        named::complete(2),
        named::complete(3),
        named::path(3).unwrap(),
        named::path(4).unwrap(),
        named::cycle(4).unwrap(),
        named::complete_bipartite(1, 3),
        named::independent(2),
        named::complete(2).disjoint_union(&named::complete(2)),
        named::clique_join_independent(2, 2),
    ]
}

#[test]
fn containment_matches_injective_maps() {
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..300 {
        let n = rng.gen_range(0..=7);
        let p = rng.gen_range(0.2..0.8);
        let host = random_graph(&mut rng, n, p);
        let all: Vec<usize> = (0..n).collect();
        for p in small_patterns() {
            for (mode, induced) in [(Containment::Subgraph, false), (Containment::Induced, true)] {
                let spec = PatternSpec::single(p.clone()).unwrap().with_mode(mode);
                let expected = has_embedding(&host, &all, &p, induced);
                assert_eq!(contains_copy(&host, &spec).unwrap(), expected, "{host:?} {p:?} {mode:?}");
            }
        }
        assert_eq!(contains_copy(&host, &PatternSpec::all_two_regular()).unwrap(), has_cycle(&host, &all));
    }
}

#[test]
fn witnesses_are_real_copies() {
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..200 {
        let n = rng.gen_range(3..=8);
        let host = random_graph(&mut rng, n, 0.5);
        for p in small_patterns() {
            let spec = PatternSpec::single(p.clone()).unwrap();
            if let Some(w) = find_copy(&host, &spec).unwrap() {
                let image = w.vertices();
                assert_eq!(image.len(), p.n());
                for (a, b) in p.edges() {
                    assert!(host.has_edge(image[a], image[b]));
                }
            }
        }
        if let Some(w) = find_copy(&host, &PatternSpec::all_two_regular()).unwrap() {
            let cycle = w.vertices();
            assert!(cycle.len() >= 3);
            for i in 0..cycle.len() {
                assert!(host.has_edge(cycle[i], cycle[(i + 1) % cycle.len()]));
            }
        }
    }
}

#[test]
fn chi_matches_partitions_on_random_graphs() {
    let mut rng = StdRng::seed_from_u64(3);
    for _ in 0..150 {
        let n = rng.gen_range(0..=7);
        let p = rng.gen_range(0.3..0.9);
        let host = random_graph(&mut rng, n, p);
        for (name, forbidden) in standard_patterns() {
            assert_eq!(
                chi_g_exact(&host, &forbidden.spec()).unwrap().value,
                chi_brute(&host, &forbidden),
                "{name} on {host:?}"
            );
        }
    }
}

#[test]
fn induced_chi_matches_partitions() {
    let mut rng = StdRng::seed_from_u64(5);
    let p3 = named::path(3).unwrap();
    let forbidden = Forbidden::InducedCopy(p3);
    for _ in 0..100 {
        let n = rng.gen_range(0..=6);
        let host = random_graph(&mut rng, n, 0.5);
        assert_eq!(chi_g_exact(&host, &forbidden.spec()).unwrap().value, chi_brute(&host, &forbidden));
    }
}

#[test]
fn ordinary_chromatic_number() {
    let mut rng = StdRng::seed_from_u64(13);
    for _ in 0..200 {
        let n = rng.gen_range(0..=9);
        let host = random_graph(&mut rng, n, 0.5);
        assert_eq!(chromatic_number(&host).unwrap(), chromatic_brute(&host));
    }
}

#[test]
fn criticality_matches_deletions() {
    for n in 1..=5 {
        for g in enumerate_small_graphs(n).unwrap() {
            for (name, forbidden) in standard_patterns().into_iter().take(3) {
                assert_eq!(is_critical(&g, &forbidden.spec()).unwrap(), critical_brute(&g, &forbidden), "{name} {g:?}");
            }
        }
    }
}

#[test]
fn enumeration_is_complete_and_irredundant() {
    // Number of graphs on n unlabelled vertices.
    let expected = [1, 1, 2, 4, 11, 34, 156];
    for (n, &count) in expected.iter().enumerate() {
        let graphs = enumerate_small_graphs(n).unwrap();
        assert_eq!(graphs.len(), count);
        let mut codes: Vec<Vec<bool>> = graphs.iter().map(full_canonical_code).collect();
        codes.sort();
        codes.dedup();
        assert_eq!(codes.len(), count, "duplicate isomorphism class at n = {n}");
    }
}

#[test]
fn canonical_codes_agree_with_full_search() {
    let mut rng = StdRng::seed_from_u64(17);
    for _ in 0..300 {
        let n = rng.gen_range(1..=6);
        let a = random_graph(&mut rng, n, 0.5);
        let b = random_graph(&mut rng, n, 0.5);
        let same = full_canonical_code(&a) == full_canonical_code(&b);
        assert_eq!(canonical_form(&a).unwrap().0 == canonical_form(&b).unwrap().0, same);
    }
}

#[test]
fn enumeration_matches_labelled_graphs_at_five() {
    let mut classes: Vec<Vec<bool>> = (0u64..1 << 10).map(|bits| full_canonical_code(&graph_from_bits(5, bits))).collect();
    classes.sort();
    classes.dedup();
    assert_eq!(classes.len(), enumerate_small_graphs(5).unwrap().len());
}
