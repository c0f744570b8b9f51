use super::{Graph, VertexSet};

/// The split of `V(G)` around an apex `z`: its neighbourhood `Z`, the
/// non-neighbours `W`, and `Z` divided by whether a vertex has a neighbour
/// inside `Z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ApexPartition {
    pub z: usize,
    pub neighbourhood: VertexSet,
    pub w: VertexSet,
    pub z0: VertexSet,
    pub z_plus: VertexSet,
}

pub fn apex_partition(g: &Graph, z: usize) -> ApexPartition {
    assert!(z < g.n(), "apex {z} out of range");
    let neighbourhood = g.neighbors(z);
    let w = g.vertices() - neighbourhood - VertexSet::singleton(z);
    let z0: VertexSet = neighbourhood
        .iter()
        .filter(|&v| g.degree_in(v, &neighbourhood) == 0)
        .collect();
    ApexPartition {
        z,
        neighbourhood,
        w,
        z0,
        z_plus: neighbourhood - z0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    #[test]
    fn examples() {
        let g = Family::K11n2Plus { n: 6 }.graph().unwrap();
        let p = apex_partition(&g, 0);
        assert!(p.w.is_empty());
        // The second universal vertex dominates Z, so nothing in Z is isolated.
        assert_eq!((p.neighbourhood.len(), p.z0.len()), (5, 0));

        let star = Family::Star { s: 4 }.graph().unwrap();
        let p = apex_partition(&star, 0);
        assert!(p.w.is_empty());
        assert_eq!(p.z0, p.neighbourhood);

        let c5 = Graph::cycle(5).unwrap();
        for z in 0..5 {
            let p = apex_partition(&c5, z);
            assert_eq!((p.neighbourhood.len(), p.w.len()), (2, 2));
            assert_eq!(p.z0, p.neighbourhood);
        }
    }

    #[test]
    fn parts_cover_the_vertex_set() {
        let g = Family::G { i: 9, n: 10 }.graph().unwrap();
        for z in 0..g.n() {
            let p = apex_partition(&g, z);
            assert!(p.w.is_disjoint(&p.neighbourhood));
            assert_eq!(
                p.w | p.neighbourhood | VertexSet::singleton(z),
                g.vertices()
            );
            assert_eq!(p.z0 | p.z_plus, p.neighbourhood);
            assert!(p.z0.iter().all(|v| g.degree_in(v, &p.neighbourhood) == 0));
        }
    }
}
