use alloc::vec::Vec;

use super::Certificate;
use crate::graph::{Graph, VertexSet};

/// A cycle with at least `k` chords sharing one cycle vertex, if any.
///
/// Tries apexes in ascending order and returns the first witness found.
pub fn find_k_chords_at_apex(g: &Graph, k: usize) -> Option<Certificate> {
    (0..g.n()).find_map(|u| find_k_chords_at(g, u, k))
}

/// A cycle through `u` with at least `k` chords at `u`, if any.
///
/// Such a cycle is `u` followed by a path in `G - u` whose two ends lie in
/// `N(u)` and which has `k` further vertices of `N(u)` inside it.
pub fn find_k_chords_at(g: &Graph, u: usize, k: usize) -> Option<Certificate> {
    if u >= g.n() {
        return None;
    }
    let nu = g.neighbors(u);
    if nu.len() < k + 2 {
        return None;
    }
    for a in nu.iter() {
        let mut search = ApexSearch {
            g,
            nu,
            k,
            start: a,
            path: alloc::vec![a],
            visited: VertexSet::singleton(u) | VertexSet::singleton(a),
        };
        if search.extend(0) {
            let internal = &search.path[1..search.path.len() - 1];
            let mut cycle = alloc::vec![u];
            cycle.extend_from_slice(&search.path);
            let chords = internal
                .iter()
                .filter(|&&x| nu.contains(x))
                .take(k)
                .map(|&x| (u, x))
                .collect();
            return Some(Certificate {
                cycle,
                chords,
                apex: Some(u),
            });
        }
    }
    None
}

struct ApexSearch<'a> {
    g: &'a Graph,
    nu: VertexSet,
    k: usize,
    start: usize,
    path: Vec<usize>,
    visited: VertexSet,
}

impl ApexSearch<'_> {
    /// `hits` counts path vertices in `N(u)` other than the start.
    fn extend(&mut self, hits: usize) -> bool {
        let end = *self.path.last().unwrap();
        for w in (self.g.neighbors(end) - self.visited).iter() {
            let on = self.nu.contains(w);
            let hits = hits + usize::from(on);
            self.path.push(w);
            self.visited.insert(w);
            // Closing at `w` uses it as the second end; each path is taken
            // from its smaller end only.
            if on && w > self.start && hits > self.k {
                return true;
            }
            let avail = (self.nu - self.visited).len();
            if hits + avail > self.k && self.extend(hits) {
                return true;
            }
            self.path.pop();
            self.visited.remove(w);
        }
        false
    }
}
