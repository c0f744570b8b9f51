//! Simple undirected graphs over vertex indices `0..n`.
//!
//! A [`Graph`] stores one [`VertexSet`] row per vertex. Values are immutable
//! once built; the helpers that add or remove edges return new graphs, so a
//! graph can be shared freely across worker threads.

mod components;
mod families;
mod fig1;
mod graph6;
mod iso;
mod partition;
mod set;

use alloc::vec::Vec;
use core::fmt;

pub use components::{classify_component, ComponentKind};
pub use families::{Family, FamilyError, FamilyGraph, JoinPattern};
pub use fig1::{u12, u_graph, UGraph};
pub use graph6::{graph6_decode, graph6_encode, Graph6Error};
pub use iso::is_isomorphic;
pub use partition::{apex_partition, ApexPartition};
pub use set::{Iter as VertexIter, VertexSet, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("graph order {0} exceeds the supported maximum of {MAX_VERTICES}")]
    TooLarge(usize),
    #[error("vertex sets overlap without being equal")]
    OverlappingSets,
}

/// A simple undirected graph with bit-set adjacency rows.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    rows: Vec<VertexSet>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooLarge(n));
        }
        Ok(Graph {
            n,
            rows: alloc::vec![VertexSet::EMPTY; n],
        })
    }

    /// Builds the graph on `n` vertices with exactly the listed edges.
    /// Repeated pairs are inserted once.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        for u in 0..n {
            g.rows[u] = VertexSet::prefix(n) - VertexSet::singleton(u);
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Result<Graph, GraphError> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    /// `C_n`; orders below 3 give the path instead of failing.
    pub fn cycle(n: usize) -> Result<Graph, GraphError> {
        let mut g = Graph::path(n)?;
        if n >= 3 {
            g.insert_edge(0, n - 1)?;
        }
        Ok(g)
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::Loop(u));
        }
        self.rows[u].insert(v);
        self.rows[v].insert(u);
        Ok(())
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.n {
            Err(GraphError::OutOfRange {
                vertex: v,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    /// Returns `G + uv`.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        let mut g = self.clone();
        g.insert_edge(u, v)?;
        Ok(g)
    }

    /// Returns `G - uv` (a no-op when `uv` is not an edge).
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let mut g = self.clone();
        g.rows[u].remove(v);
        g.rows[v].remove(u);
        Ok(g)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.rows[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.rows[u].contains(v)
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::prefix(self.n)
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.rows[u]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Degrees sorted in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn max_degree(&self) -> usize {
        self.rows.iter().map(VertexSet::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.rows.iter().map(VertexSet::len).min().unwrap_or(0)
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.rows.iter().any(VertexSet::is_empty)
    }

    /// Degree of `v` inside `G[s]`.
    #[inline]
    pub fn degree_in(&self, v: usize, s: &VertexSet) -> usize {
        (self.rows[v] & *s).len()
    }

    /// `e(S)`: the number of edges of `G[S]`.
    pub fn induced_edge_count(&self, s: &VertexSet) -> usize {
        s.iter().map(|v| self.degree_in(v, s)).sum::<usize>() / 2
    }

    /// `e(S, T)` for disjoint `S`, `T`, and `e(S)` when `S = T`.
    pub fn edge_counts(&self, s: &VertexSet, t: &VertexSet) -> Result<usize, GraphError> {
        for v in s.iter().chain(t.iter()) {
            self.check_vertex(v)?;
        }
        if s == t {
            return Ok(self.induced_edge_count(s));
        }
        if !s.is_disjoint(t) {
            return Err(GraphError::OverlappingSets);
        }
        Ok(s.iter().map(|v| self.degree_in(v, t)).sum())
    }

    /// Connected components as vertex sets, ordered by smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::EMPTY;
        let mut out = Vec::new();
        for v in 0..self.n {
            if seen.contains(v) {
                continue;
            }
            let comp = self.component_of(v, &self.vertices());
            seen |= comp;
            out.push(comp);
        }
        out
    }

    /// The vertex set of the component of `G[within]` containing `v`.
    pub fn component_of(&self, v: usize, within: &VertexSet) -> VertexSet {
        let mut comp = VertexSet::singleton(v);
        let mut frontier = comp;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for u in frontier.iter() {
                next |= self.rows[u];
            }
            next = (next & *within) - comp;
            comp |= next;
            frontier = next;
        }
        comp
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.component_of(0, &self.vertices()).len() == self.n
    }

    /// `G[S]` relabelled to `0..|S|` in ascending order of the original
    /// indices; the second value maps new labels back to old ones.
    pub fn induced(&self, s: &VertexSet) -> (Graph, Vec<usize>) {
        let map: Vec<usize> = s.iter().filter(|&v| v < self.n).collect();
        let mut index = alloc::vec![usize::MAX; self.n];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph {
            n: map.len(),
            rows: alloc::vec![VertexSet::EMPTY; map.len()],
        };
        for (i, &v) in map.iter().enumerate() {
            for u in (self.rows[v] & *s).iter() {
                g.rows[i].insert(index[u]);
            }
        }
        (g, map)
    }

    /// The graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        assert_eq!(
            perm.len(),
            self.n,
            "permutation length must equal graph order"
        );
        let edges: Vec<_> = self.edges().map(|(u, v)| (perm[u], perm[v])).collect();
        Graph::from_edges(self.n, &edges)
    }

    /// `G ∪ H` with the vertices of `h` shifted past those of `self`.
    pub fn disjoint_union(&self, h: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + h.n;
        let mut g = Graph::empty(n)?;
        for (u, v) in self.edges() {
            g.insert_edge(u, v)?;
        }
        for (u, v) in h.edges() {
            g.insert_edge(u + self.n, v + self.n)?;
        }
        Ok(g)
    }

    /// `G ∨ H`: the disjoint union plus every edge between the two sides.
    pub fn join(&self, h: &Graph) -> Result<Graph, GraphError> {
        let mut g = self.disjoint_union(h)?;
        for u in 0..self.n {
            for v in 0..h.n {
                g.insert_edge(u, self.n + v)?;
            }
        }
        Ok(g)
    }

    /// `k` disjoint copies of `self`.
    pub fn copies(&self, k: usize) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(0)?;
        for _ in 0..k {
            g = g.disjoint_union(self)?;
        }
        Ok(g)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=", self.n)?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}
