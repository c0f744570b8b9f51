use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use trebly::verifier::sampling::{random_permutation, structured_config_free};
use trebly::verifier::{
    check_claims, enumerate_graphs, extremal_graph, replay_corollary, verify_appendix,
    verify_corollary, ClaimBounds, ClaimTally, Constraints, CorollaryOptions, Enumeration,
};
use trebly_core::graph::{graph6_decode, Family};
use trebly_core::oracle::brute_force_isomorphic;
use trebly_core::spectral::appendix::{check_params, item_family, AppendixId};
use trebly_core::spectral::q_value;

#[test]
fn corollary_at_seven() {
    let r = verify_corollary(7, CorollaryOptions::default()).unwrap();
    assert!(r.passed, "{}", r.to_table());
    // 7! / |Aut(K+_{1,1,5})| = 5040 / (2 * 2 * 6)
    assert_eq!(r.extremal_hits, 210);
}

#[test]
fn four_chords_are_forced_at_seven() {
    let r = verify_corollary(
        7,
        CorollaryOptions {
            min_chords: 4,
            ..CorollaryOptions::default()
        },
    )
    .unwrap();
    assert!(r.passed, "{}", r.to_table());
}

#[test]
fn corollary_counterexamples_replay() {
    // Nine chords need at least sixteen edges, more than some high-q graphs have.
    let r = verify_corollary(
        7,
        CorollaryOptions {
            min_chords: 9,
            ..CorollaryOptions::default()
        },
    )
    .unwrap();
    assert!(!r.passed);
    for code in &r.counterexamples {
        let g = graph6_decode(code).unwrap();
        assert!(replay_corollary(&g, 9).unwrap(), "{code}");
        assert!(!replay_corollary(&g, 3).unwrap(), "{code}");
    }
}

#[test]
fn closed_form_suite_findings() {
    let r = verify_appendix(7, 30).unwrap();
    for item in [
        "partition",
        "extremal_dominance",
        "threshold_bound",
        "printed_values",
    ] {
        assert!(r.detail(item).unwrap().passed, "{item}");
    }
    let id = r.detail("charpoly_identity").unwrap();
    let failed = id.values["failed"].as_array().unwrap();
    assert_eq!(id.values["failures"], 6);
    assert!(failed
        .iter()
        .all(|f| f.as_str().unwrap().starts_with("g4(")));
    let chains = r.detail("monotone_chains").unwrap();
    assert!(!chains.passed);
    for f in chains.values["failed"].as_array().unwrap() {
        assert!(f.as_str().unwrap().starts_with("g18("), "{f}");
    }
}

#[test]
fn star_plus_chain_breaks_at_large_n() {
    // Independent of the polynomials: the power-iteration values of the
    // graphs themselves.
    let q = |n, s| {
        let id = AppendixId::Item(18);
        check_params(id, n, Some(s)).unwrap();
        q_value(&item_family(id, n, Some(s)).unwrap().graph().unwrap()).unwrap()
    };
    assert!(q(17, 3) < q(17, 7));
    assert!(q(21, 3) > q(21, 7));
    assert!(q(26, 4) > q(26, 8));
    let top = q_value(&extremal_graph(21)).unwrap();
    assert!(q(21, 3) < top);
}

#[test]
fn structured_samples_satisfy_the_claims() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut tally = ClaimTally::default();
    for _ in 0..300 {
        let g = structured_config_free(&mut rng).unwrap();
        check_claims(&g, &ClaimBounds::default(), &mut tally);
    }
    assert_eq!(tally.violation_count, 0, "{:?}", tally.violations);
    assert_eq!(tally.uncatalogued, 0);
}

#[test]
fn extremal_graph_claims() {
    let mut tally = ClaimTally::default();
    check_claims(
        &Family::K11n2Plus { n: 7 }.graph().unwrap(),
        &ClaimBounds::default(),
        &mut tally,
    );
    assert_eq!(tally.violation_count, 0);
}

#[test]
fn extremal_graph_is_unique_up_to_isomorphism() {
    let e = extremal_graph(6);
    let hits = enumerate_graphs(6, Constraints::default())
        .unwrap()
        .filter(|g| g.edge_count() == e.edge_count() && brute_force_isomorphic(g, &e))
        .count();
    assert_eq!(hits, 30);
}

proptest! {
    #[test]
    fn admitted_masks_match_their_constraints(n in 2usize..=6, lo in 0usize..=8, span in 0usize..=8, seed in any::<u64>()) {
        let c = Constraints { no_isolated: seed % 2 == 0, min_edges: lo, max_edges: lo + span };
        let e = Enumeration::new(n, c).unwrap();
        let mask = seed % e.candidates();
        let g = e.graph(mask);
        let ok = (!c.no_isolated || !g.has_isolated_vertex())
            && (c.min_edges..=c.max_edges).contains(&g.edge_count());
        prop_assert_eq!(e.admits(mask), ok);
    }

    #[test]
    fn claim_tally_is_label_invariant(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = structured_config_free(&mut rng).unwrap();
        let h = g.relabel(&random_permutation(&mut rng, g.n())).unwrap();
        let (mut a, mut b) = (ClaimTally::default(), ClaimTally::default());
        check_claims(&g, &ClaimBounds::default(), &mut a);
        check_claims(&h, &ClaimBounds::default(), &mut b);
        prop_assert_eq!(a.violation_count, b.violation_count);
        prop_assert_eq!(a.max_seen, b.max_seen);
        prop_assert_eq!(a.checks, b.checks);
    }
}
