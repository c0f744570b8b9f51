use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::graph::Graph;

/// Dense symmetric integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymMatrix {
    dim: usize,
    entries: Vec<i64>,
}

impl SymMatrix {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.dim + j]
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.entries[i * self.dim..(i + 1) * self.dim]
    }

    pub fn to_int_matrix(&self) -> IntMatrix {
        IntMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|&e| BigInt::from(e)).collect(),
        }
    }
}

/// `Q(G) = A(G) + D(G)`.
pub fn signless_laplacian(g: &Graph) -> SymMatrix {
    let n = g.n();
    let mut entries = alloc::vec![0i64; n * n];
    for u in 0..n {
        entries[u * n + u] = g.degree(u) as i64;
        for v in g.neighbors(u).iter() {
            entries[u * n + v] = 1;
        }
    }
    SymMatrix { dim: n, entries }
}

/// Dense square matrix of arbitrary-precision integers, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    dim: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    /// Panics unless every row has length `rows.len()`.
    pub fn from_rows<T: Clone + Into<BigInt>>(rows: &[Vec<T>]) -> IntMatrix {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            assert_eq!(row.len(), dim, "matrix must be square");
            entries.extend(row.iter().cloned().map(Into::into));
        }
        IntMatrix { dim, entries }
    }

    pub fn identity(dim: usize) -> IntMatrix {
        let mut entries = alloc::vec![BigInt::from(0); dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = BigInt::from(1);
        }
        IntMatrix { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.dim + j]
    }

    pub(crate) fn entries(&self) -> &[BigInt] {
        &self.entries
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn rows(m: &SymMatrix) -> Vec<Vec<i64>> {
        (0..m.dim()).map(|i| m.row(i).to_vec()).collect()
    }

    #[test]
    fn small_examples() {
        assert_eq!(
            rows(&signless_laplacian(&Graph::complete(2).unwrap())),
            vec![vec![1, 1], vec![1, 1]]
        );
        assert_eq!(
            rows(&signless_laplacian(&Graph::cycle(3).unwrap())),
            vec![vec![2, 1, 1], vec![1, 2, 1], vec![1, 1, 2]]
        );
        let k12 = Graph::from_edges(3, &[(0, 1), (0, 2)]).unwrap();
        assert_eq!(
            rows(&signless_laplacian(&k12)),
            vec![vec![2, 1, 1], vec![1, 1, 0], vec![1, 0, 1]]
        );
    }

    #[test]
    fn symmetric_with_degree_diagonal() {
        let g = crate::graph::Family::G { i: 10, n: 11 }.graph().unwrap();
        let q = signless_laplacian(&g);
        for u in 0..g.n() {
            assert_eq!(q.get(u, u), g.degree(u) as i64);
            for v in 0..g.n() {
                assert_eq!(q.get(u, v), q.get(v, u));
            }
            assert_eq!(q.row(u).iter().sum::<i64>(), 2 * g.degree(u) as i64);
        }
    }
}
