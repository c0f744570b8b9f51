use alloc::vec::Vec;

use super::Certificate;
use crate::graph::{Graph, VertexSet};

/// A cycle `C` with `e(G[V(C)]) - |C| >= min_chords`, reporting
/// `min_chords` of its chords.
///
/// Each cycle is enumerated once: rooted at its smallest vertex and
/// oriented so the second vertex is smaller than the last.
pub fn find_chorded_cycle(g: &Graph, min_chords: usize) -> Option<Certificate> {
    for r in 0..g.n() {
        let allowed = g.vertices() - VertexSet::prefix(r + 1);
        let mut search = CycleSearch {
            g,
            min_chords,
            root: r,
            path: alloc::vec![r],
            on_path: VertexSet::singleton(r),
            allowed,
        };
        if search.extend() {
            let cycle = search.path;
            let set = search.on_path;
            let len = cycle.len();
            let chords = g
                .edges()
                .filter(|&(a, b)| set.contains(a) && set.contains(b))
                .filter(|&(a, b)| {
                    let i = cycle.iter().position(|&x| x == a).unwrap();
                    let j = cycle.iter().position(|&x| x == b).unwrap();
                    let d = i.abs_diff(j);
                    d != 1 && d != len - 1
                })
                .take(min_chords)
                .collect();
            return Some(Certificate {
                cycle,
                chords,
                apex: None,
            });
        }
    }
    None
}

struct CycleSearch<'a> {
    g: &'a Graph,
    min_chords: usize,
    root: usize,
    path: Vec<usize>,
    on_path: VertexSet,
    allowed: VertexSet,
}

impl CycleSearch<'_> {
    fn surplus(&self) -> isize {
        self.g.induced_edge_count(&self.on_path) as isize - self.on_path.len() as isize
    }

    /// Upper bound on the chord surplus of any cycle extending this path:
    /// each added vertex raises `e - |S|` by at most its degree into the
    /// reachable region, minus one.
    fn bound(&self) -> isize {
        let free = self.allowed - self.on_path;
        let region = free | self.on_path;
        let gain: isize = free
            .iter()
            .map(|x| (self.g.degree_in(x, &region) as isize - 1).max(0))
            .sum();
        self.surplus() + gain
    }

    fn extend(&mut self) -> bool {
        let end = *self.path.last().unwrap();
        let free = self.allowed - self.on_path;
        for w in (self.g.neighbors(end) & free).iter() {
            self.path.push(w);
            self.on_path.insert(w);
            if self.path.len() >= 3
                && self.g.has_edge(w, self.root)
                && self.path[1] < w
                && self.surplus() >= self.min_chords as isize
            {
                return true;
            }
            if self.bound() >= self.min_chords as isize && self.extend() {
                return true;
            }
            self.path.pop();
            self.on_path.remove(w);
        }
        false
    }
}
