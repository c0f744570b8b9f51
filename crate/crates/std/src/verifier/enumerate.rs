use std::ops::Range;

use trebly_core::Graph;

use super::VerifyError;

/// Largest order accepted for exhaustive labelled enumeration.
pub const MAX_ENUMERATION_ORDER: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Constraints {
    pub no_isolated: bool,
    pub min_edges: usize,
    pub max_edges: usize,
}

impl Default for Constraints {
    fn default() -> Constraints {
        Constraints {
            no_isolated: false,
            min_edges: 0,
            max_edges: usize::MAX,
        }
    }
}

/// Labelled graphs on `n` vertices indexed by edge bitmask. Bit `i` stands
/// for the `i`-th pair in graph6 order `(0,1), (0,2), (1,2), (0,3), ...`.
#[derive(Debug, Clone)]
pub struct Enumeration {
    n: usize,
    pairs: Vec<(usize, usize)>,
    incident: Vec<u32>,
    constraints: Constraints,
}

impl Enumeration {
    pub fn new(n: usize, constraints: Constraints) -> Result<Enumeration, VerifyError> {
        if n > MAX_ENUMERATION_ORDER {
            return Err(VerifyError::UnsupportedOrder {
                n,
                supported: "n <= 8",
            });
        }
        let pairs: Vec<(usize, usize)> = (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
        let incident = (0..n)
            .map(|v| {
                pairs
                    .iter()
                    .enumerate()
                    .filter(|(_, &(a, b))| a == v || b == v)
                    .fold(0u32, |m, (i, _)| m | 1 << i)
            })
            .collect();
        Ok(Enumeration {
            n,
            pairs,
            incident,
            constraints,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `2^(n choose 2)`.
    pub fn candidates(&self) -> u64 {
        1u64 << self.pairs.len()
    }

    pub fn admits(&self, mask: u64) -> bool {
        let m = mask as u32;
        let e = m.count_ones() as usize;
        let c = &self.constraints;
        e >= c.min_edges
            && e <= c.max_edges
            && (!c.no_isolated || self.incident.iter().all(|&i| m & i != 0))
    }

    pub fn graph(&self, mask: u64) -> Graph {
        let edges: Vec<(usize, usize)> = self
            .pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::from_edges(self.n, &edges).expect("pairs are in range")
    }

    /// Admitted graphs with masks in `range`, ascending.
    pub fn range(&self, range: Range<u64>) -> impl Iterator<Item = (u64, Graph)> + '_ {
        range
            .filter(move |&m| self.admits(m))
            .map(move |m| (m, self.graph(m)))
    }
}

/// Every labelled graph on `n` vertices meeting `constraints`, each once, in
/// ascending edge-bitmask order.
pub fn enumerate_graphs(
    n: usize,
    constraints: Constraints,
) -> Result<impl Iterator<Item = Graph>, VerifyError> {
    let e = Enumeration::new(n, constraints)?;
    let total = e.candidates();
    Ok((0..total).filter_map(move |m| if e.admits(m) { Some(e.graph(m)) } else { None }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use trebly_core::graph::graph6_encode;

    #[test]
    fn counts() {
        let all = Constraints::default();
        let no_iso = Constraints {
            no_isolated: true,
            ..all
        };
        assert_eq!(enumerate_graphs(3, all).unwrap().count(), 8);
        assert_eq!(enumerate_graphs(3, no_iso).unwrap().count(), 4);
        assert_eq!(enumerate_graphs(4, all).unwrap().count(), 64);
        for n in 0..=5 {
            assert_eq!(
                enumerate_graphs(n, all).unwrap().count() as u64,
                1u64 << (n * n.saturating_sub(1) / 2)
            );
        }
        let few = Constraints {
            min_edges: 2,
            max_edges: 3,
            ..all
        };
        // C(6,2) + C(6,3)
        assert_eq!(enumerate_graphs(4, few).unwrap().count(), 35);
        assert!(matches!(
            enumerate_graphs(9, all),
            Err(VerifyError::UnsupportedOrder { n: 9, .. })
        ));
    }

    #[test]
    fn masks_follow_graph6_bit_order() {
        let e = Enumeration::new(4, Constraints::default()).unwrap();
        let g = e.graph(0b000100);
        assert!(g.has_edge(1, 2) && g.edge_count() == 1);
        // graph6 writes the same pairs, so the body bits read back the mask.
        assert_eq!(graph6_encode(&e.graph(0b111111)), "C~");
        let distinct: std::collections::HashSet<_> =
            (0..e.candidates()).map(|m| e.graph(m)).collect();
        assert_eq!(distinct.len(), 64);
    }
}
