//! Slow reference implementations for tests. Each one takes the most direct
//! route available and is only meant for very small inputs.

use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::graph::{Graph, VertexSet};
use crate::spectral::{IntMatrix, IntPolynomial};

fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize]) -> bool) -> bool {
    fn rec(
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
        f: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        let n = used.len();
        if perm.len() == n {
            return f(perm);
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                perm.push(v);
                if rec(perm, used, f) {
                    return true;
                }
                perm.pop();
                used[v] = false;
            }
        }
        false
    }
    rec(
        &mut Vec::with_capacity(n),
        &mut alloc::vec![false; n],
        &mut f,
    )
}

/// Tries every bijection.
pub fn brute_force_isomorphic(g: &Graph, h: &Graph) -> bool {
    let n = g.n();
    if n != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    for_each_permutation(n, |p| g.edges().all(|(u, v)| h.has_edge(p[u], p[v])))
}

fn sign(perm: &[usize]) -> i32 {
    let mut inversions = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `det(xI - M)` by the Leibniz expansion over polynomial entries.
pub fn charpoly_by_expansion(m: &IntMatrix) -> IntPolynomial {
    let d = m.dim();
    let entry = |i: usize, j: usize| {
        let c = IntPolynomial::constant(-m.get(i, j).clone());
        if i == j {
            &c + &IntPolynomial::x()
        } else {
            c
        }
    };
    let mut total = IntPolynomial::zero();
    for_each_permutation(d, |p| {
        let mut term = IntPolynomial::constant(BigInt::from(sign(p)));
        for (i, &j) in p.iter().enumerate() {
            term = &term * &entry(i, j);
        }
        total = &total + &term;
        false
    });
    total
}

/// Every vertex set that carries a spanning cycle of its induced subgraph,
/// found by trying every cyclic order of every subset.
pub fn cycle_vertex_sets_by_permutation(g: &Graph) -> Vec<VertexSet> {
    let n = g.n();
    assert!(n <= 8, "oracle limited to tiny graphs");
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        let s: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if s.len() < 3 {
            continue;
        }
        // Fix s[0] first; permute the rest.
        let rest = &s[1..];
        let found = for_each_permutation(rest.len(), |p| {
            let order: Vec<usize> = core::iter::once(s[0])
                .chain(p.iter().map(|&i| rest[i]))
                .collect();
            (0..order.len()).all(|i| g.has_edge(order[i], order[(i + 1) % order.len()]))
        });
        if found {
            out.push(s.iter().collect());
        }
    }
    out
}

/// The same sets by Held-Karp: `paths[S]` holds the ends of paths that
/// start at `min S` and cover `S`.
pub fn cycle_vertex_sets(g: &Graph) -> Vec<VertexSet> {
    let n = g.n();
    assert!(n <= 16, "oracle limited to small graphs");
    let adj: Vec<u32> = (0..n).map(|v| g.neighbors(v).low_word() as u32).collect();
    let mut paths = alloc::vec![0u32; 1 << n];
    let mut out = Vec::new();
    for mask in 1u32..(1 << n) {
        let start = mask.trailing_zeros() as usize;
        if mask.count_ones() == 1 {
            paths[mask as usize] = mask;
            continue;
        }
        for v in (0..n).filter(|&v| v != start && mask >> v & 1 == 1) {
            let prev = mask & !(1 << v);
            if paths[prev as usize] & adj[v] != 0 {
                paths[mask as usize] |= 1 << v;
            }
        }
        if mask.count_ones() >= 3 && paths[mask as usize] & adj[start] != 0 {
            out.push((0..n).filter(|&v| mask >> v & 1 == 1).collect());
        }
    }
    out
}

/// Some cycle has at least `k` chords at one of its vertices.
pub fn has_apex_chords(g: &Graph, k: usize) -> bool {
    cycle_vertex_sets(g)
        .iter()
        .any(|s| s.iter().any(|u| g.degree_in(u, s) >= k + 2))
}

/// Some cycle has at least `k` chords.
pub fn has_chorded_cycle(g: &Graph, k: usize) -> bool {
    cycle_vertex_sets(g)
        .iter()
        .any(|s| g.induced_edge_count(s) >= s.len() + k)
}

/// Order of a longest cycle, or 0.
pub fn longest_cycle_order(g: &Graph) -> usize {
    cycle_vertex_sets_by_permutation(g)
        .iter()
        .map(VertexSet::len)
        .max()
        .unwrap_or(0)
}

/// Largest number of vertices on a path, trying every vertex ordering of
/// every subset.
pub fn max_path_order(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 9, "oracle limited to tiny graphs");
    let mut best = usize::from(n > 0);
    for mask in 0u32..(1 << n) {
        let s: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if s.len() <= best {
            continue;
        }
        if for_each_permutation(s.len(), |p| {
            (1..p.len()).all(|i| g.has_edge(s[p[i - 1]], s[p[i]]))
        }) {
            best = s.len();
        }
    }
    best
}
