use alloc::vec::Vec;

use super::Certificate;
use crate::graph::Graph;

/// Checks a certificate directly against the adjacency of `g`. Shares no
/// code with the searchers.
pub fn verify_certificate(g: &Graph, cert: &Certificate, k: usize, require_apex: bool) -> bool {
    let n = g.n();
    let c = &cert.cycle;
    let len = c.len();
    if len < 3 || c.iter().any(|&v| v >= n) {
        return false;
    }
    let mut position = alloc::vec![None; n];
    for (i, &v) in c.iter().enumerate() {
        if position[v].replace(i).is_some() {
            return false;
        }
    }
    if (0..len).any(|i| !g.has_edge(c[i], c[(i + 1) % len])) {
        return false;
    }

    let mut seen: Vec<(usize, usize)> = Vec::with_capacity(cert.chords.len());
    for &(a, b) in &cert.chords {
        if a >= n || b >= n || a == b || !g.has_edge(a, b) {
            return false;
        }
        let (Some(i), Some(j)) = (position[a], position[b]) else {
            return false;
        };
        let gap = i.abs_diff(j);
        if gap == 1 || gap == len - 1 {
            return false;
        }
        let key = (a.min(b), a.max(b));
        if seen.contains(&key) {
            return false;
        }
        seen.push(key);
    }
    if cert.chords.len() < k {
        return false;
    }

    match cert.apex {
        None => !require_apex,
        Some(x) => {
            x < n && position[x].is_some() && cert.chords.iter().all(|&(a, b)| a == x || b == x)
        }
    }
}
