//! Recognition of the small connected graphs that make up `G[Z_+]` when the
//! apex configuration is absent, with the roles of their vertices.

use super::{Graph, VertexSet};

/// Shape of one connected component, with original vertex labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComponentKind {
    /// `K_{1,s}` with `s >= 1`; for `K_2` the smaller label is the centre.
    Star {
        center: usize,
        leaves: VertexSet,
    },
    /// `S_{n1,n2}`: adjacent centres, each with at least one leaf.
    DoubleStar {
        centers: [usize; 2],
        leaves: [VertexSet; 2],
    },
    /// `K^+_{1,s}` with `s >= 2`: `pair` is the edge between two leaves. For
    /// the triangle the smallest label is the centre.
    StarPlus {
        center: usize,
        pair: [usize; 2],
        pendants: VertexSet,
    },
    C4,
    /// `C_4` plus a diagonal; `hubs` are the two degree-three vertices.
    C4Plus {
        hubs: [usize; 2],
    },
    K4,
    /// Anything outside the catalogue above, including single vertices.
    Other,
}

impl ComponentKind {
    pub fn name(&self) -> &'static str {
        match self {
            ComponentKind::Star { .. } => "star",
            ComponentKind::DoubleStar { .. } => "double_star",
            ComponentKind::StarPlus { .. } => "star_plus",
            ComponentKind::C4 => "c4",
            ComponentKind::C4Plus { .. } => "c4_plus",
            ComponentKind::K4 => "k4",
            ComponentKind::Other => "other",
        }
    }

    /// Whether the component contains a 4-cycle.
    pub fn contains_c4(&self) -> bool {
        matches!(
            self,
            ComponentKind::C4 | ComponentKind::C4Plus { .. } | ComponentKind::K4
        )
    }
}

/// Classifies `G[comp]`; `comp` is expected to induce a connected subgraph.
pub fn classify_component(g: &Graph, comp: &VertexSet) -> ComponentKind {
    let order = comp.len();
    if order < 2 || g.component_of(comp.first().unwrap(), comp) != *comp {
        return ComponentKind::Other;
    }
    let size = g.induced_edge_count(comp);
    let deg = |v: usize| g.degree_in(v, comp);
    let hub = comp.iter().find(|&v| deg(v) == order - 1);

    if size == order - 1 {
        if let Some(center) = hub {
            return ComponentKind::Star {
                center,
                leaves: *comp - VertexSet::singleton(center),
            };
        }
        let inner: VertexSet = comp.iter().filter(|&v| deg(v) >= 2).collect();
        if inner.len() == 2 {
            let mut it = inner.iter();
            let (a, b) = (it.next().unwrap(), it.next().unwrap());
            if g.has_edge(a, b) {
                let leaves_of = |c: usize| (g.neighbors(c) & *comp) - inner;
                return ComponentKind::DoubleStar {
                    centers: [a, b],
                    leaves: [leaves_of(a), leaves_of(b)],
                };
            }
        }
        return ComponentKind::Other;
    }

    if size == order {
        if let Some(center) = hub {
            let rest = *comp - VertexSet::singleton(center);
            let paired: VertexSet = rest.iter().filter(|&v| deg(v) == 2).collect();
            if paired.len() == 2 {
                let mut it = paired.iter();
                return ComponentKind::StarPlus {
                    center,
                    pair: [it.next().unwrap(), it.next().unwrap()],
                    pendants: rest - paired,
                };
            }
        }
        if order == 4 && comp.iter().all(|v| deg(v) == 2) {
            return ComponentKind::C4;
        }
        return ComponentKind::Other;
    }

    match (order, size) {
        (4, 5) => {
            let mut hubs = comp.iter().filter(|&v| deg(v) == 3);
            ComponentKind::C4Plus {
                hubs: [hubs.next().unwrap(), hubs.next().unwrap()],
            }
        }
        (4, 6) => ComponentKind::K4,
        _ => ComponentKind::Other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    fn kind(g: &Graph) -> ComponentKind {
        classify_component(g, &g.vertices())
    }

    #[test]
    fn catalogue() {
        let k2 = Graph::complete(2).unwrap();
        assert!(matches!(kind(&k2), ComponentKind::Star { center: 0, .. }));
        let star = Family::Star { s: 4 }.graph().unwrap();
        match kind(&star) {
            ComponentKind::Star { center, leaves } => assert_eq!((center, leaves.len()), (0, 4)),
            k => panic!("{k:?}"),
        }
        match kind(&Graph::path(4).unwrap()) {
            ComponentKind::DoubleStar { centers, leaves } => {
                assert_eq!(centers, [1, 2]);
                assert_eq!(leaves[0].len() + leaves[1].len(), 2);
            }
            k => panic!("{k:?}"),
        }
        let ds = Family::DoubleStar { a: 2, b: 3 }.graph().unwrap();
        assert!(matches!(
            kind(&ds),
            ComponentKind::DoubleStar {
                centers: [0, 1],
                ..
            }
        ));
        match kind(&Family::StarPlus { s: 4 }.graph().unwrap()) {
            ComponentKind::StarPlus {
                center,
                pair,
                pendants,
            } => {
                assert_eq!((center, pair, pendants.len()), (0, [1, 2], 2));
            }
            k => panic!("{k:?}"),
        }
        assert!(matches!(
            kind(&Graph::complete(3).unwrap()),
            ComponentKind::StarPlus { .. }
        ));
        assert_eq!(kind(&Graph::cycle(4).unwrap()), ComponentKind::C4);
        assert_eq!(
            kind(&Family::C4Plus.graph().unwrap()),
            ComponentKind::C4Plus { hubs: [0, 2] }
        );
        assert_eq!(kind(&Graph::complete(4).unwrap()), ComponentKind::K4);
    }

    #[test]
    fn outside_the_catalogue() {
        assert_eq!(kind(&Graph::path(5).unwrap()), ComponentKind::Other);
        assert_eq!(kind(&Graph::cycle(5).unwrap()), ComponentKind::Other);
        assert_eq!(kind(&Graph::complete(5).unwrap()), ComponentKind::Other);
        assert_eq!(kind(&Graph::empty(1).unwrap()), ComponentKind::Other);
        let disconnected = Graph::complete(2).unwrap().copies(2).unwrap();
        assert_eq!(kind(&disconnected), ComponentKind::Other);
        // A spider with legs of length two is a tree but no double star.
        let spider =
            Graph::from_edges(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        assert_eq!(kind(&spider), ComponentKind::Other);
    }
}
