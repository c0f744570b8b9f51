//! Pairwise isomorphism test: joint colour refinement, then backtracking over
//! colour-compatible assignments.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::{Graph, VertexSet};

/// Refines degree colours on both graphs together so that equal colours mean
/// the same thing on either side. Returns `None` when the colour histograms
/// diverge.
fn refine(g: &Graph, h: &Graph) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = g.n();
    let mut cg: Vec<usize> = g.degrees();
    let mut ch: Vec<usize> = h.degrees();
    let mut classes = 0;
    loop {
        let signature = |graph: &Graph, colours: &[usize], v: usize| {
            let mut around: Vec<usize> = graph.neighbors(v).iter().map(|u| colours[u]).collect();
            around.sort_unstable();
            (colours[v], around)
        };
        let sg: Vec<_> = (0..n).map(|v| signature(g, &cg, v)).collect();
        let sh: Vec<_> = (0..n).map(|v| signature(h, &ch, v)).collect();
        let mut table: BTreeMap<&(usize, Vec<usize>), [usize; 2]> = BTreeMap::new();
        for s in &sg {
            table.entry(s).or_default()[0] += 1;
        }
        for s in &sh {
            table.entry(s).or_default()[1] += 1;
        }
        if table.values().any(|[a, b]| a != b) {
            return None;
        }
        let index: BTreeMap<_, usize> = table.keys().enumerate().map(|(i, &k)| (k, i)).collect();
        let next_g: Vec<usize> = sg.iter().map(|s| index[s]).collect();
        let next_h: Vec<usize> = sh.iter().map(|s| index[s]).collect();
        let count = index.len();
        cg = next_g;
        ch = next_h;
        if count == classes {
            return Some((cg, ch));
        }
        classes = count;
    }
}

struct Matcher<'a> {
    g: &'a Graph,
    h: &'a Graph,
    cg: Vec<usize>,
    ch: Vec<usize>,
    order: Vec<usize>,
    image: Vec<usize>,
    used: VertexSet,
}

impl Matcher<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        for u in 0..self.h.n() {
            if self.used.contains(u) || self.ch[u] != self.cg[v] {
                continue;
            }
            let consistent = self.order[..depth]
                .iter()
                .all(|&w| self.g.has_edge(v, w) == self.h.has_edge(u, self.image[w]));
            if !consistent {
                continue;
            }
            self.image[v] = u;
            self.used.insert(u);
            if self.extend(depth + 1) {
                return true;
            }
            self.used.remove(u);
        }
        false
    }
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    if g.degree_sequence() != h.degree_sequence() {
        return false;
    }
    let Some((cg, ch)) = refine(g, h) else {
        return false;
    };
    // Small colour classes first, and keep each step adjacent to earlier
    // choices where possible so adjacency checks bite early.
    let n = g.n();
    let mut class_size = alloc::vec![0usize; n + 1];
    for &c in &cg {
        if c >= class_size.len() {
            class_size.resize(c + 1, 0);
        }
        class_size[c] += 1;
    }
    let mut order = Vec::with_capacity(n);
    let mut placed = VertexSet::EMPTY;
    while order.len() < n {
        let pick = (0..n)
            .filter(|&v| !placed.contains(v))
            .min_by_key(|&v| {
                let touches = !(g.neighbors(v) & placed).is_empty();
                (!touches, class_size[cg[v]], v)
            })
            .expect("unplaced vertex remains");
        placed.insert(pick);
        order.push(pick);
    }
    let mut m = Matcher {
        g,
        h,
        cg,
        ch,
        order,
        image: alloc::vec![usize::MAX; n],
        used: VertexSet::EMPTY,
    };
    m.extend(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::brute_force_isomorphic;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn named_examples() {
        let c4 = Graph::cycle(4).unwrap();
        let k22 = Graph::from_edges(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert!(is_isomorphic(&c4, &k22));
        let k13 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(!is_isomorphic(&k13, &Graph::path(4).unwrap()));
        assert!(!is_isomorphic(
            &Graph::path(3).unwrap(),
            &Graph::path(4).unwrap()
        ));
        // Same degree sequence, different structure: C6 versus 2K3.
        let two_k3 = Graph::complete(3).unwrap().copies(2).unwrap();
        assert!(!is_isomorphic(&Graph::cycle(6).unwrap(), &two_k3));
    }

    #[test]
    fn regular_graphs_need_backtracking() {
        // The 3-prism and K_{3,3} are both 3-regular on 6 vertices.
        let prism = Graph::from_edges(
            6,
            &[
                (0, 1),
                (1, 2),
                (0, 2),
                (3, 4),
                (4, 5),
                (3, 5),
                (0, 3),
                (1, 4),
                (2, 5),
            ],
        )
        .unwrap();
        let k33 = Graph::from_edges(
            6,
            &[
                (0, 3),
                (0, 4),
                (0, 5),
                (1, 3),
                (1, 4),
                (1, 5),
                (2, 3),
                (2, 4),
                (2, 5),
            ],
        )
        .unwrap();
        assert!(!is_isomorphic(&prism, &k33));
        let perm = [4, 2, 0, 5, 1, 3];
        assert!(is_isomorphic(&prism, &prism.relabel(&perm).unwrap()));
    }

    fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.random_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn agrees_with_permutation_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for trial in 0..3000 {
            let n = 1 + trial % 6;
            let g = random_graph(&mut rng, n, 0.5);
            // Half the time compare against a relabelled copy with one edge
            // toggled, which keeps degree statistics close.
            let mut perm: Vec<usize> = (0..n).collect();
            for i in (1..n).rev() {
                perm.swap(i, rng.random_range(0..=i));
            }
            let mut h = g.relabel(&perm).unwrap();
            if trial % 2 == 1 && n >= 2 {
                let u = rng.random_range(0..n);
                let v = (u + 1 + rng.random_range(0..n - 1)) % n;
                h = if h.has_edge(u, v) {
                    h.without_edge(u, v).unwrap()
                } else {
                    h.with_edge(u, v).unwrap()
                };
            }
            assert_eq!(
                is_isomorphic(&g, &h),
                brute_force_isomorphic(&g, &h),
                "{g:?} vs {h:?}"
            );
        }
    }
}
