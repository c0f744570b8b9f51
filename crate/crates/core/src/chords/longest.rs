use alloc::vec::Vec;

use crate::graph::{Graph, VertexSet};

/// Largest component order the subset searches accept.
pub const SUBSET_LIMIT: usize = 22;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SearchError {
    #[error("the graph has no vertices")]
    EmptyGraph,
    #[error("component of order {order} exceeds the search limit of {limit}")]
    TooLarge { order: usize, limit: usize },
}

struct Local {
    verts: Vec<usize>,
    adj: Vec<u32>,
}

fn local(g: &Graph, comp: &VertexSet) -> Result<Local, SearchError> {
    let verts: Vec<usize> = comp.iter().collect();
    if verts.len() > SUBSET_LIMIT {
        return Err(SearchError::TooLarge {
            order: verts.len(),
            limit: SUBSET_LIMIT,
        });
    }
    let adj = verts
        .iter()
        .map(|&v| {
            verts
                .iter()
                .enumerate()
                .filter(|&(_, &u)| g.has_edge(u, v))
                .fold(0u32, |m, (i, _)| m | 1 << i)
        })
        .collect();
    Ok(Local { verts, adj })
}

fn bits(mut m: u32) -> impl Iterator<Item = usize> {
    core::iter::from_fn(move || {
        (m != 0).then(|| {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            i
        })
    })
}

/// A longest cycle as `(length, vertices in order)`, or `None` for forests.
///
/// For every vertex subset, dynamic programming records which vertices end
/// a path that starts at the subset's smallest vertex and covers it; the
/// subset carries a cycle when such an end is adjacent to the start.
pub fn longest_cycle(g: &Graph) -> Result<Option<(usize, Vec<usize>)>, SearchError> {
    let mut best: Option<(usize, Vec<usize>)> = None;
    for comp in g.components() {
        if comp.len() < 3 || best.as_ref().is_some_and(|(c, _)| *c >= comp.len()) {
            continue;
        }
        let lg = local(g, &comp)?;
        if let Some((len, cyc)) = component_cycle(&lg) {
            if best.as_ref().is_none_or(|(c, _)| len > *c) {
                best = Some((len, cyc.into_iter().map(|i| lg.verts[i]).collect()));
            }
        }
    }
    Ok(best)
}

fn component_cycle(lg: &Local) -> Option<(usize, Vec<usize>)> {
    let m = lg.verts.len();
    let mut ends = alloc::vec![0u32; 1 << m];
    for r in 0..m {
        ends[1 << r] = 1 << r;
    }
    let mut best: Option<(u32, usize)> = None;
    for mask in 1u32..(1 << m) {
        let e = ends[mask as usize];
        if e == 0 {
            continue;
        }
        let r = mask.trailing_zeros() as usize;
        let above = !((2u32 << r) - 1);
        let size = mask.count_ones();
        if size >= 3 && best.is_none_or(|(b, _)| size > b.count_ones()) {
            if let Some(v) = bits(e & lg.adj[r]).next() {
                best = Some((mask, v));
            }
        }
        for v in bits(e) {
            for w in bits(lg.adj[v] & !mask & above) {
                ends[(mask | 1 << w) as usize] |= 1 << w;
            }
        }
    }
    let (mask, last) = best?;
    let r = mask.trailing_zeros() as usize;
    let mut cycle = alloc::vec![last];
    let (mut mask, mut v) = (mask, last);
    while v != r {
        mask &= !(1 << v);
        let prev = if mask == 1 << r {
            r
        } else {
            bits(ends[mask as usize] & lg.adj[v])
                .next()
                .expect("DP predecessor")
        };
        cycle.push(prev);
        v = prev;
    }
    cycle.reverse();
    Some((cycle.len(), cycle))
}

/// The largest number of vertices on a path of `g`.
pub fn max_path_order(g: &Graph) -> Result<usize, SearchError> {
    if g.n() == 0 {
        return Err(SearchError::EmptyGraph);
    }
    let mut best = 1;
    for comp in g.components() {
        if comp.len() <= best {
            continue;
        }
        let lg = local(g, &comp)?;
        best = best.max(component_path_order(&lg));
    }
    Ok(best)
}

fn component_path_order(lg: &Local) -> usize {
    let m = lg.verts.len();
    let full = (1u32 << m) - 1;
    let mut ends = alloc::vec![0u32; 1 << m];
    for v in 0..m {
        ends[1 << v] = 1 << v;
    }
    let mut best = 1;
    for mask in 1u32..=full {
        let e = ends[mask as usize];
        if e == 0 {
            continue;
        }
        best = best.max(mask.count_ones() as usize);
        if best == m {
            break;
        }
        for v in bits(e) {
            for w in bits(lg.adj[v] & !mask) {
                ends[(mask | 1 << w) as usize] |= 1 << w;
            }
        }
    }
    best
}
