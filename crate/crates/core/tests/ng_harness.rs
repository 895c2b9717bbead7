use std::path::PathBuf;
use std::time::{Duration, Instant};

use gfree::named;
use gfree::ng::{sharp_examples, AuditOptions, CorpusItem, NgBranch};
use gfree::{
    check_refined_conditions, enumerate_small_graphs, ng_sum, verify_corpus, witness_suite, Error, Graph, PatternSpec,
};

#[test]
fn every_sharp_example_is_reproduced() {
    let start = Instant::now();
    let records = witness_suite().unwrap();
    assert!(start.elapsed() < Duration::from_secs(2));
    let pairs: Vec<(usize, usize)> = records.iter().map(|r| (r.chi, r.chi_complement)).collect();
    assert_eq!(pairs, vec![(2, 1), (2, 2), (2, 2), (3, 2), (3, 2), (4, 2)]);
    for r in &records {
        assert!(r.sharp, "{r:?}");
    }
    assert_eq!(records[5].n, 13);
    assert_eq!(records[5].sum, 6);
}

#[test]
fn wrong_expectation_is_reported() {
    let mut cases = sharp_examples();
    cases.truncate(1);
    cases[0].expected_chi = 3;
    let outcome = gfree::ng::evaluate_witnesses(&cases).unwrap();
    assert!(!outcome[0].reproduced);
}

#[test]
fn clique_branches() {
    let k4 = PatternSpec::single(named::complete(4)).unwrap();
    // n = 7 is not a multiple of 3.
    let r = ng_sum(&named::cycle(7).unwrap(), &k4).unwrap();
    assert_eq!(r.bound, Some(7usize.div_ceil(3) + 1));
    // n = 9 = 3 * 3: K3,6 and K3 + K6 both have 6-sets without a K4.
    let r = ng_sum(&named::complete_bipartite(3, 6), &k4).unwrap();
    assert!(matches!(r.branch, NgBranch::CliqueRefined | NgBranch::Critical));
    assert!(r.holds());
}

#[test]
fn divisible_clique_case_without_refinement() {
    // K9 against K4: n = 3 * 3, K9 minus a vertex still needs 3 classes, and
    // every 6-set spans a K4, so only the k + 2 bound applies.
    let k4 = PatternSpec::single(named::complete(4)).unwrap();
    let r = ng_sum(&named::complete(9), &k4).unwrap();
    assert_eq!(r.branch, NgBranch::CliqueDivisible);
    assert_eq!((r.chi, r.chi_complement, r.bound), (3, 1, Some(5)));
    let refined = r.refined.expect("n = 9 is scanned");
    assert!(!refined.any());
}

#[test]
fn refined_conditions_on_witness() {
    let h = named::clique_join_independent(6, 3);
    let report = check_refined_conditions(&h, 3).unwrap();
    assert_eq!(report.k, 3);
    assert!(report.holds);
}

#[test]
fn refined_conditions_reject_large_hosts() {
    assert!(matches!(check_refined_conditions(&named::complete(21), 3), Err(Error::TooLarge { .. })));
}

#[test]
fn vertex_arboricity_sums() {
    let cycles = PatternSpec::all_two_regular();
    for n in 1..=6 {
        for g in enumerate_small_graphs(n).unwrap() {
            let r = ng_sum(&g, &cycles).unwrap();
            assert_eq!(r.branch, NgBranch::TwoRegular);
            assert!(r.sum <= n.div_ceil(2) + 1, "{r:?}");
        }
    }
}

#[test]
fn audit_order_is_deterministic() {
    let graphs: Vec<Graph> = (0..=5).flat_map(|n| enumerate_small_graphs(n).unwrap()).collect();
    let patterns = [PatternSpec::single(named::complete(3)).unwrap(), PatternSpec::all_two_regular()];
    let run = |threads| {
        let items = graphs.iter().cloned().map(CorpusItem::generated).collect();
        verify_corpus(items, &patterns, &AuditOptions { threads: Some(threads), ..AuditOptions::default() }).unwrap()
    };
    let one = run(1);
    let four = run(4);
    assert_eq!(one, four);
    let keys: Vec<(&str, &str)> = one.records.iter().map(|r| (r.ng.graph.as_str(), r.ng.pattern.as_str())).collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}

#[test]
fn timeouts_are_counted() {
    let items = vec![CorpusItem::generated(named::complete(40))];
    let pat = PatternSpec::single(named::cycle(5).unwrap()).unwrap();
    let opts = AuditOptions { time_limit: Some(Duration::ZERO), ..AuditOptions::default() };
    let report = verify_corpus(items, &[pat], &opts).unwrap();
    assert_eq!(report.summary.timeouts, 1);
    assert_eq!(report.summary.pairs, 0);
}

/// Sharp (graph, pattern) pairs for n <= 5 are pinned in a golden file.
/// Regenerate with `GFREE_BLESS=1 cargo test --test ng_harness`.
#[test]
fn sharp_instances_match_golden_file() {
    let graphs: Vec<Graph> = (0..=5).flat_map(|n| enumerate_small_graphs(n).unwrap()).collect();
    let patterns = [
        PatternSpec::single(named::complete(2)).unwrap(),
        PatternSpec::single(named::complete(3)).unwrap(),
        PatternSpec::single(named::complete(4)).unwrap(),
        PatternSpec::single(named::cycle(4).unwrap()).unwrap(),
        PatternSpec::single(named::cycle(5).unwrap()).unwrap(),
        PatternSpec::all_two_regular(),
    ];
    let items = graphs.into_iter().map(CorpusItem::generated).collect();
    let report = verify_corpus(items, &patterns, &AuditOptions::default()).unwrap();
    assert!(!report.has_violations());
    let actual: String = report
        .sharp
        .iter()
        .map(|s| format!("{}\t{}\t{:?}\t{}\n", s.graph, s.pattern, s.branch, s.sum))
        .collect();
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden/sharp_n5.tsv");
    if std::env::var_os("GFREE_BLESS").is_some() {
        std::fs::create_dir_all(path.parent().unwrap()).unwrap();
        std::fs::write(&path, &actual).unwrap();
    }
    let expected = std::fs::read_to_string(&path).expect("golden file present");
    assert_eq!(actual, expected);
}

#[test]
fn spanning_cycle_set_has_a_k_free_complement() {
    for d in 3..=5 {
        let c = named::cycle(2 * d).unwrap();
        assert_eq!(gfree::girth(&c), Some(2 * d));
        let co = c.complement();
        assert_eq!(co, named::complete_minus_cycle(d).unwrap());
        assert_eq!(gfree::clique_number(&co).unwrap(), d);
    }
}
