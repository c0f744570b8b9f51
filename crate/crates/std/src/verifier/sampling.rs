//! Seeded random graph generators.

use rand::seq::{IteratorRandom, SliceRandom};
use rand::Rng;
use trebly_core::chords::find_k_chords_at_apex;
use trebly_core::graph::Family;
use trebly_core::Graph;

/// Edge probabilities cycled through by trial index.
pub const STRATA: [f64; 4] = [0.2, 0.4, 0.6, 0.8];

pub fn stratum(trial: usize) -> f64 {
    STRATA[trial % STRATA.len()]
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

/// Erdős–Rényi `G(n, p)`.
pub fn er_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let edges: Vec<_> = pairs(n)
        .into_iter()
        .filter(|_| rng.random_bool(p))
        .collect();
    Graph::from_edges(n, &edges).expect("pairs are in range")
}

/// A uniformly random graph with exactly `m` edges.
pub fn with_edge_count<R: Rng>(rng: &mut R, n: usize, m: usize) -> Graph {
    let edges = pairs(n).into_iter().choose_multiple(rng, m);
    Graph::from_edges(n, &edges).expect("pairs are in range")
}

/// `G(n, p)` with a random spanning tree added, so the result is connected.
pub fn connected_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let g = er_graph(rng, n, p);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges: Vec<_> = g.edges().collect();
    for i in 1..n {
        edges.push((order[rng.random_range(0..i)], order[i]));
    }
    Graph::from_edges(n, &edges).expect("pairs are in range")
}

/// Joins every isolated vertex to a random other vertex.
pub fn without_isolated<R: Rng>(rng: &mut R, g: Graph) -> Graph {
    let n = g.n();
    let mut edges: Vec<_> = g.edges().collect();
    for v in (0..n).filter(|&v| g.degree(v) == 0) {
        let u = (0..n).filter(|&u| u != v).choose(rng).expect("n >= 2");
        edges.push((u, v));
    }
    Graph::from_edges(n, &edges).expect("pairs are in range")
}

pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

fn config_free(g: &Graph) -> bool {
    find_k_chords_at_apex(g, 3).is_none()
}

/// Adds edges in random order while no cycle gets three chords at a common
/// vertex, stopping once a `p` share of the pairs has been tried.
pub fn greedy_config_free<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut all = pairs(n);
    all.shuffle(rng);
    let tries = ((all.len() as f64) * p).ceil() as usize;
    let mut g = Graph::empty(n).expect("small order");
    for &(u, v) in all.iter().take(tries) {
        let h = g.with_edge(u, v).expect("in range");
        if config_free(&h) {
            g = h;
        }
    }
    g
}

/// Apex `0` joined to one catalogued component `H`, optionally a second
/// small component and a few vertices without neighbours inside `N(0)`,
/// then one or two outside vertices with random neighbourhoods. Rejected
/// draws are retried; `None` only after many failures.
pub fn structured_config_free<R: Rng>(rng: &mut R) -> Option<Graph> {
    for _ in 0..64 {
        let g = structured_draw(rng);
        if config_free(&g) {
            return Some(g);
        }
    }
    None
}

fn structured_draw<R: Rng>(rng: &mut R) -> Graph {
    let main = match rng.random_range(0..6) {
        0 => Family::Star {
            s: rng.random_range(3..=5),
        },
        1 => Family::DoubleStar {
            a: rng.random_range(1..=3),
            b: rng.random_range(1..=3),
        },
        2 => Family::StarPlus {
            s: rng.random_range(2..=5),
        },
        3 => Family::Cycle { n: 4 },
        4 => Family::C4Plus,
        _ => Family::Complete { n: 4 },
    }
    .graph()
    .expect("catalogue parameters are valid");
    let mut inside = main;
    if rng.random_bool(0.4) {
        let extra = match rng.random_range(0..3) {
            0 => Graph::complete(2),
            1 => Graph::path(3),
            _ => Graph::complete(3),
        }
        .expect("small");
        inside = inside.disjoint_union(&extra).expect("small");
    }
    let loose = rng.random_range(0..=2);
    inside = inside
        .disjoint_union(&Graph::empty(loose).expect("small"))
        .expect("small");
    let zn = inside.n();
    let outside = rng.random_range(1..=2);
    let n = 1 + zn + outside;
    let mut edges: Vec<(usize, usize)> = (1..=zn).map(|v| (0, v)).collect();
    edges.extend(inside.edges().map(|(a, b)| (a + 1, b + 1)));
    for w in 1 + zn..n {
        let density = rng.random_range(0.2..0.8);
        for v in 1..=zn {
            if rng.random_bool(density) {
                edges.push((v, w));
            }
        }
    }
    if outside == 2 && rng.random_bool(0.3) {
        edges.push((n - 2, n - 1));
    }
    let g = Graph::from_edges(n, &edges).expect("pairs are in range");
    let perm = random_permutation(rng, n);
    g.relabel(&perm).expect("permutation of the right length")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generators_respect_their_contracts() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            assert_eq!(with_edge_count(&mut rng, 9, 20).edge_count(), 20);
            assert!(connected_graph(&mut rng, 8, 0.1).is_connected());
            let g = er_graph(&mut rng, 7, 0.1);
            assert!(!without_isolated(&mut rng, g).has_isolated_vertex());
            assert!(config_free(&greedy_config_free(&mut rng, 9, 0.7)));
            assert!(config_free(&structured_config_free(&mut rng).unwrap()));
        }
    }
}
