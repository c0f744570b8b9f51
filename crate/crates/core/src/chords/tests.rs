use alloc::vec::Vec;

use proptest::prelude::*;

use super::*;
use crate::graph::{Family, Graph};
use crate::oracle;

fn k6_witness() -> Certificate {
    "cycle=0,1,2,3,4,5;chords=0-2,0-3,0-4;apex=0"
        .parse()
        .unwrap()
}

fn hub_path(m: usize) -> Graph {
    Graph::complete(1)
        .unwrap()
        .join(&Graph::path(m).unwrap())
        .unwrap()
}

fn from_mask(n: usize, mask: u64) -> Graph {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    let edges: Vec<(usize, usize)> = pairs
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, &e)| e)
        .collect();
    Graph::from_edges(n, &edges).unwrap()
}

#[test]
fn apex_examples() {
    assert!(find_k_chords_at_apex(&Graph::complete(5).unwrap(), 3).is_none());
    let k6 = Graph::complete(6).unwrap();
    let c = find_k_chords_at_apex(&k6, 3).unwrap();
    assert!(verify_certificate(&k6, &c, 3, true));
    assert_eq!(c, k6_witness());
    for n in 7..=12 {
        let g = Family::K11n2Plus { n }.graph().unwrap();
        assert!(find_k_chords_at_apex(&g, 3).is_none(), "n = {n}");
    }
    assert!(find_k_chords_at_apex(&Family::K1JoinK4UnionK1.graph().unwrap(), 3).is_none());
    let g = hub_path(5);
    let c = find_k_chords_at_apex(&g, 3).unwrap();
    assert_eq!(c.apex, Some(0));
    assert!(verify_certificate(&g, &c, 3, true));
}

#[test]
fn hub_paths_match_the_path_length() {
    for k in 1..=5 {
        for m in 2..=k + 4 {
            let g = hub_path(m);
            assert_eq!(
                find_k_chords_at(&g, 0, k).is_some(),
                m >= k + 2,
                "k={k} m={m}"
            );
        }
    }
}

#[test]
fn general_examples() {
    let c4p = Family::C4Plus.graph().unwrap();
    let c = find_chorded_cycle(&c4p, 1).unwrap();
    assert!(verify_certificate(&c4p, &c, 1, false));
    let k4 = Graph::complete(4).unwrap();
    assert!(find_chorded_cycle(&k4, 3).is_none());
    let c = find_chorded_cycle(&k4, 2).unwrap();
    assert_eq!(c.cycle.len(), 4);
    assert!(verify_certificate(&k4, &c, 2, false));
}

#[test]
fn extremal_graph_has_three_chords_off_a_common_vertex() {
    // a, b universal and cd the extra edge: the 5-cycle a c d b e carries
    // the chords ab, ad and bc.
    for n in 5..=12 {
        let g = Family::K11n2Plus { n }.graph().unwrap();
        let c = find_chorded_cycle(&g, 3).unwrap();
        assert!(verify_certificate(&g, &c, 3, false));
        assert!(oracle::has_chorded_cycle(&g, 3));
        assert!(find_chorded_cycle(&g, 4).is_none(), "n = {n}");
        assert!(find_k_chords_at_apex(&g, 3).is_none(), "n = {n}");
    }
    let g = Family::K11n2Plus { n: 7 }.graph().unwrap();
    let c: Certificate = "cycle=0,2,3,1,4;chords=0-1,0-3,1-2".parse().unwrap();
    assert!(verify_certificate(&g, &c, 3, false));
}

#[test]
fn checker_examples() {
    let k6 = Graph::complete(6).unwrap();
    assert!(verify_certificate(&k6, &k6_witness(), 3, true));
    let mut bad = k6_witness();
    bad.chords[0] = (0, 1);
    assert!(!verify_certificate(&k6, &bad, 3, true));
    let c5: Certificate = "cycle=0,1,2,3,4;chords=".parse().unwrap();
    assert!(!verify_certificate(
        &Graph::cycle(5).unwrap(),
        &c5,
        1,
        false
    ));
    assert!(verify_certificate(&Graph::cycle(5).unwrap(), &c5, 0, false));
}

#[test]
fn checker_rejects_each_broken_invariant() {
    let k6 = Graph::complete(6).unwrap();
    let cases = [
        "cycle=0,1;chords=;apex=0",
        "cycle=0,1,2,3,4,0;chords=0-2,0-3,1-4;apex=0",
        "cycle=0,1,2,3,4,5;chords=0-2,0-3,0-2;apex=0",
        "cycle=0,1,2,3,4,5;chords=0-2,0-3,0-5;apex=0",
        "cycle=0,1,2,3,4,5;chords=0-2,0-3,1-4;apex=0",
        "cycle=0,1,2,3,4,5;chords=0-2,0-3,0-4;apex=6",
        "cycle=0,1,2,3,4,6;chords=0-2,0-3,0-4;apex=0",
        "cycle=0,1,2,3,4;chords=0-2,0-3,0-5;apex=0",
    ];
    for text in cases {
        assert!(
            !verify_certificate(&k6, &text.parse().unwrap(), 3, true),
            "{text}"
        );
    }
    let no_apex: Certificate = "cycle=0,1,2,3,4,5;chords=0-2,0-3,1-4".parse().unwrap();
    assert!(!verify_certificate(&k6, &no_apex, 3, true));
    assert!(verify_certificate(&k6, &no_apex, 3, false));
    let missing = Graph::complete(6).unwrap().without_edge(0, 3).unwrap();
    assert!(!verify_certificate(&missing, &k6_witness(), 3, true));
    assert!(!verify_certificate(&k6, &k6_witness(), 4, true));
}

#[test]
fn longest_cycle_examples() {
    for n in 3..=12 {
        assert_eq!(
            longest_cycle(&Graph::cycle(n).unwrap()).unwrap().unwrap().0,
            n
        );
    }
    assert_eq!(
        longest_cycle(&Family::Star { s: 4 }.graph().unwrap()).unwrap(),
        None
    );
    let (c, cyc) = longest_cycle(&Family::K1JoinK4UnionK1.graph().unwrap())
        .unwrap()
        .unwrap();
    assert_eq!(c, 5);
    assert_eq!(cyc.len(), 5);
    let big = Graph::cycle(30).unwrap();
    assert_eq!(
        longest_cycle(&big),
        Err(SearchError::TooLarge {
            order: 30,
            limit: SUBSET_LIMIT
        })
    );
}

#[test]
fn max_path_examples() {
    for n in 1..=12 {
        assert_eq!(max_path_order(&Graph::path(n).unwrap()).unwrap(), n);
    }
    assert_eq!(max_path_order(&Graph::complete(4).unwrap()).unwrap(), 4);
    assert_eq!(
        max_path_order(&Graph::complete(3).unwrap().copies(2).unwrap()).unwrap(),
        3
    );
    assert_eq!(max_path_order(&Graph::empty(3).unwrap()).unwrap(), 1);
    assert_eq!(
        max_path_order(&Graph::empty(0).unwrap()),
        Err(SearchError::EmptyGraph)
    );
}

#[test]
fn exhaustive_agreement_on_five_vertices() {
    for mask in 0u64..(1 << 10) {
        let g = from_mask(5, mask);
        for k in 1..=3 {
            assert_eq!(
                find_k_chords_at_apex(&g, k).is_some(),
                oracle::has_apex_chords(&g, k)
            );
            assert_eq!(
                find_chorded_cycle(&g, k).is_some(),
                oracle::has_chorded_cycle(&g, k)
            );
        }
    }
}

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (Just(n), any::<u64>(), 0.0f64..1.0).prop_map(move |(n, bits, p)| {
            // Thin the random bits so sparse and dense graphs both appear.
            let mut rng = bits;
            let mut mask = 0u64;
            for i in 0..pairs {
                rng = rng
                    .wrapping_mul(6364136223846793005)
                    .wrapping_add(1442695040888963407);
                if ((rng >> 11) as f64 / (1u64 << 53) as f64) < p {
                    mask |= 1 << i;
                }
            }
            from_mask(n, mask)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn searchers_agree_with_oracle(g in graph_strategy(8), k in 1usize..=4) {
        let apex = find_k_chords_at_apex(&g, k);
        prop_assert_eq!(apex.is_some(), oracle::has_apex_chords(&g, k));
        if let Some(c) = &apex {
            prop_assert!(verify_certificate(&g, c, k, true));
            prop_assert_eq!(c.chords.len(), k);
        }
        let general = find_chorded_cycle(&g, k);
        prop_assert_eq!(general.is_some(), oracle::has_chorded_cycle(&g, k));
        if let Some(c) = &general {
            prop_assert!(verify_certificate(&g, c, k, false));
            prop_assert_eq!(c.chords.len(), k);
        }
    }

    #[test]
    fn apex_certificates_are_monotone_in_k(g in graph_strategy(9), k in 2usize..=4) {
        if find_k_chords_at_apex(&g, k).is_some() {
            prop_assert!(find_k_chords_at_apex(&g, k - 1).is_some());
        }
    }

    #[test]
    fn longest_cycle_and_path_match_oracle(g in graph_strategy(8)) {
        let lc = longest_cycle(&g).unwrap();
        prop_assert_eq!(lc.as_ref().map_or(0, |(c, _)| *c), oracle::longest_cycle_order(&g));
        if let Some((c, cyc)) = lc {
            let cert = Certificate { cycle: cyc, chords: Vec::new(), apex: None };
            prop_assert_eq!(cert.cycle.len(), c);
            prop_assert!(verify_certificate(&g, &cert, 0, false));
        }
        prop_assert_eq!(max_path_order(&g).unwrap(), oracle::max_path_order(&g));
    }

    #[test]
    fn certificate_text_round_trips(g in graph_strategy(9)) {
        if let Some(c) = find_k_chords_at_apex(&g, 2).or_else(|| find_chorded_cycle(&g, 1)) {
            prop_assert_eq!(c.to_string().parse::<Certificate>().unwrap(), c);
        }
    }
}
