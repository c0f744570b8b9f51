//! Edge lists of the graphs `U_1, ..., U_12` from the catalogue of
//! near-extremal configurations.
//!
//! Labelling is fixed for every graph: vertex 0 is the apex `z`, vertex 1 is
//! the distinguished non-neighbour `w` of `z`, the remaining labels follow the
//! listing below. Each entry also records the vertex blocks of its equitable
//! quotient partition; when the graph is padded with `K_4` blocks hanging off
//! `z`, those vertices form one extra block inserted at `k4_block_at`.

use alloc::vec::Vec;

use super::{Graph, GraphError};

/// One transcribed graph of the catalogue together with its partition data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UGraph {
    pub index: u8,
    pub order: usize,
    pub edges: Vec<(usize, usize)>,
    /// Quotient blocks over the labels of this graph, in the row order used
    /// by the matching quotient matrix.
    pub blocks: Vec<Vec<usize>>,
    /// Position in `blocks` where the block of appended `K_4` vertices goes.
    pub k4_block_at: usize,
}

impl UGraph {
    pub fn graph(&self) -> Result<Graph, GraphError> {
        Graph::from_edges(self.order, &self.edges)
    }
}

const Z: usize = 0;
const W: usize = 1;

fn square(a: usize, b: usize, c: usize, d: usize) -> [(usize, usize); 4] {
    [(a, b), (b, c), (c, d), (d, a)]
}

fn fan(hub: usize, to: &[usize]) -> impl Iterator<Item = (usize, usize)> + '_ {
    to.iter().map(move |&v| (hub, v))
}

fn k4(a: usize, b: usize, c: usize, d: usize) -> [(usize, usize); 6] {
    [(a, b), (a, c), (a, d), (b, c), (b, d), (c, d)]
}

/// `U_i` for `i` in `1..=11`; `U_12` needs its fan size, see [`u12`].
pub fn u_graph(index: u8) -> Option<UGraph> {
    let mut e: Vec<(usize, usize)> = Vec::new();
    let (order, blocks, k4_block_at): (usize, Vec<Vec<usize>>, usize) = match index {
        // z and w both adjacent to the four vertices of a 4-cycle a b c d.
        1 => {
            e.extend(square(2, 3, 4, 5));
            e.extend(fan(Z, &[2, 3, 4, 5]));
            e.extend(fan(W, &[2, 3, 4, 5]));
            (
                6,
                alloc::vec![alloc::vec![0], alloc::vec![2, 3, 4, 5], alloc::vec![1]],
                2,
            )
        }
        // 4-cycle a b c d with diagonal ac; w sees only b and d.
        2 => {
            e.extend(square(2, 3, 4, 5));
            e.push((2, 4));
            e.extend(fan(Z, &[2, 3, 4, 5]));
            e.extend(fan(W, &[3, 5]));
            (
                6,
                alloc::vec![
                    alloc::vec![0],
                    alloc::vec![2, 4],
                    alloc::vec![3, 5],
                    alloc::vec![1]
                ],
                3,
            )
        }
        // U_1 plus a pendant vertex p = 6 at z.
        3 => {
            e.extend(square(2, 3, 4, 5));
            e.extend(fan(Z, &[2, 3, 4, 5, 6]));
            e.extend(fan(W, &[2, 3, 4, 5]));
            (
                7,
                alloc::vec![
                    alloc::vec![0],
                    alloc::vec![6],
                    alloc::vec![2, 3, 4, 5],
                    alloc::vec![1]
                ],
                3,
            )
        }
        // U_2 plus a pendant vertex p = 6 at z.
        4 => {
            e.extend(square(2, 3, 4, 5));
            e.push((2, 4));
            e.extend(fan(Z, &[2, 3, 4, 5, 6]));
            e.extend(fan(W, &[3, 5]));
            (
                7,
                alloc::vec![
                    alloc::vec![0],
                    alloc::vec![6],
                    alloc::vec![2, 4],
                    alloc::vec![3, 5],
                    alloc::vec![1]
                ],
                4,
            )
        }
        // U_1 plus a triangle 6 7 8 joined to z.
        5 => {
            e.extend(square(2, 3, 4, 5));
            e.extend([(6, 7), (7, 8), (6, 8)]);
            e.extend(fan(Z, &[2, 3, 4, 5, 6, 7, 8]));
            e.extend(fan(W, &[2, 3, 4, 5]));
            (
                9,
                alloc::vec![
                    alloc::vec![0],
                    alloc::vec![6, 7, 8],
                    alloc::vec![2, 3, 4, 5],
                    alloc::vec![1]
                ],
                3,
            )
        }
        // U_2 plus a triangle 6 7 8 joined to z.
        6 => {
            e.extend(square(2, 3, 4, 5));
            e.push((2, 4));
            e.extend([(6, 7), (7, 8), (6, 8)]);
            e.extend(fan(Z, &[2, 3, 4, 5, 6, 7, 8]));
            e.extend(fan(W, &[3, 5]));
            (
                9,
                alloc::vec![
                    alloc::vec![0],
                    alloc::vec![6, 7, 8],
                    alloc::vec![3, 5],
                    alloc::vec![2, 4],
                    alloc::vec![1]
                ],
                4,
            )
        }
        // A K_4 on {w, 2, 3, 4} and a triangle 5 6 7; z sees everything but w.
        7 => {
            e.extend(k4(W, 2, 3, 4));
            e.extend([(5, 6), (6, 7), (5, 7)]);
            e.extend(fan(Z, &[2, 3, 4, 5, 6, 7]));
            (
                8,
                alloc::vec![
                    alloc::vec![0],
                    alloc::vec![2, 3, 4],
                    alloc::vec![5, 6, 7],
                    alloc::vec![1]
                ],
                3,
            )
        }
        // A K_4 on {w, 2, 3, 4}; vertex 5 is a common neighbour of z and w.
        8 => {
            e.extend(k4(W, 2, 3, 4));
            e.extend(fan(Z, &[2, 3, 4, 5]));
            e.push((W, 5));
            (
                6,
                alloc::vec![
                    alloc::vec![0],
                    alloc::vec![5],
                    alloc::vec![2, 3, 4],
                    alloc::vec![1]
                ],
                3,
            )
        }
        // K^+_{1,3}: centre d = 5, leaves a = 2, c = 4, b = 3 with edge ac;
        // w sees a, b, c.
        9 => {
            e.extend([(2, 4), (4, 5), (5, 2), (5, 3)]);
            e.extend(fan(Z, &[2, 3, 4, 5]));
            e.extend(fan(W, &[2, 3, 4]));
            (
                6,
                alloc::vec![
                    alloc::vec![0],
                    alloc::vec![2, 4],
                    alloc::vec![5],
                    alloc::vec![3],
                    alloc::vec![1]
                ],
                4,
            )
        }
        // U_9 with one more leaf 6 on the centre.
        10 => {
            e.extend([(2, 4), (4, 5), (5, 2), (5, 3), (5, 6)]);
            e.extend(fan(Z, &[2, 3, 4, 5, 6]));
            e.extend(fan(W, &[2, 3, 4]));
            (
                7,
                alloc::vec![
                    alloc::vec![0],
                    alloc::vec![2, 4],
                    alloc::vec![5],
                    alloc::vec![6],
                    alloc::vec![3],
                    alloc::vec![1]
                ],
                5,
            )
        }
        // U_9 with two more leaves 6, 7 on the centre.
        11 => {
            e.extend([(2, 4), (4, 5), (5, 2), (5, 3), (5, 6), (5, 7)]);
            e.extend(fan(Z, &[2, 3, 4, 5, 6, 7]));
            e.extend(fan(W, &[2, 3, 4]));
            (
                8,
                alloc::vec![
                    alloc::vec![0],
                    alloc::vec![2, 4],
                    alloc::vec![5],
                    alloc::vec![6, 7],
                    alloc::vec![3],
                    alloc::vec![1]
                ],
                5,
            )
        }
        _ => return None,
    };
    Some(UGraph {
        index,
        order,
        edges: e,
        blocks,
        k4_block_at,
    })
}

/// `U_12(s)`: vertex 2 is the centre of a star on the fan `3..3+s`; every fan
/// vertex is also adjacent to `z` and `w`, and `z` is adjacent to the centre.
pub fn u12(s: usize) -> UGraph {
    let fan_vertices: Vec<usize> = (3..3 + s).collect();
    let mut e = alloc::vec![(Z, 2)];
    e.extend(fan(Z, &fan_vertices));
    e.extend(fan(2, &fan_vertices));
    e.extend(fan(W, &fan_vertices));
    UGraph {
        index: 12,
        order: s + 3,
        edges: e,
        blocks: alloc::vec![alloc::vec![0], fan_vertices, alloc::vec![2], alloc::vec![1]],
        k4_block_at: 3,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    /// Order, size and degree sequence of each graph, counted by hand from
    /// the drawings independently of the edge lists above.
    const FIXTURE: [(u8, usize, usize, &[usize]); 11] = [
        (1, 6, 12, &[4, 4, 4, 4, 4, 4]),
        (2, 6, 11, &[4, 4, 4, 4, 4, 2]),
        (3, 7, 13, &[5, 4, 4, 4, 4, 4, 1]),
        (4, 7, 12, &[5, 4, 4, 4, 4, 2, 1]),
        (5, 9, 18, &[7, 4, 4, 4, 4, 4, 3, 3, 3]),
        (6, 9, 17, &[7, 4, 4, 4, 4, 3, 3, 3, 2]),
        (7, 8, 15, &[6, 4, 4, 4, 3, 3, 3, 3]),
        (8, 6, 11, &[4, 4, 4, 4, 4, 2]),
        (9, 6, 11, &[4, 4, 4, 4, 3, 3]),
        (10, 7, 13, &[5, 5, 4, 4, 3, 3, 2]),
        (11, 8, 15, &[6, 6, 4, 4, 3, 3, 2, 2]),
    ];

    #[test]
    fn transcription_matches_hand_counts() {
        for (i, order, size, degrees) in FIXTURE {
            let u = u_graph(i).unwrap();
            let g = u.graph().unwrap();
            assert_eq!(g.n(), order, "U_{i} order");
            assert_eq!(g.edge_count(), size, "U_{i} size");
            assert_eq!(g.degree_sequence(), degrees, "U_{i} degrees");
            assert!(!g.has_edge(Z, W), "z and w must be non-adjacent in U_{i}");
            let mut covered: Vec<usize> = u.blocks.iter().flatten().copied().collect();
            covered.sort_unstable();
            assert_eq!(covered, (0..order).collect::<Vec<_>>());
        }
        assert!(u_graph(0).is_none() && u_graph(12).is_none());
    }

    #[test]
    fn u12_shape() {
        for s in 3..8 {
            let g = u12(s).graph().unwrap();
            assert_eq!(g.n(), s + 3);
            assert_eq!(g.edge_count(), 3 * s + 1);
            assert_eq!(g.degree(Z), s + 1);
            assert_eq!(g.degree(2), s + 1);
            assert_eq!(g.degree(W), s);
        }
        assert_eq!(
            u12(3).graph().unwrap().degree_sequence(),
            vec![4, 4, 3, 3, 3, 3]
        );
    }
}
