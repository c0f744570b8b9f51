use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{charpoly, largest_root_f64, IntMatrix, IntPolynomial};
use crate::graph::{Graph, VertexSet};

/// Block-averaged `Q(G)` over a vertex partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientMatrix {
    pub blocks: Vec<VertexSet>,
    /// Row-major `b_ij`.
    pub entries: Vec<BigRational>,
    /// Every block row of `Q` has constant row sums.
    pub equitable: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PartitionError {
    #[error("block {0} is empty")]
    EmptyBlock(usize),
    #[error("vertex {0} lies in more than one block")]
    Overlap(usize),
    #[error("vertex {0} is not covered by any block")]
    Uncovered(usize),
    #[error("vertex {0} is out of range")]
    OutOfRange(usize),
}

pub fn quotient_matrix(g: &Graph, blocks: &[VertexSet]) -> Result<QuotientMatrix, PartitionError> {
    let mut seen = VertexSet::EMPTY;
    for (i, b) in blocks.iter().enumerate() {
        if b.is_empty() {
            return Err(PartitionError::EmptyBlock(i));
        }
        if let Some(v) = b.iter().find(|&v| v >= g.n()) {
            return Err(PartitionError::OutOfRange(v));
        }
        if let Some(v) = (seen & *b).first() {
            return Err(PartitionError::Overlap(v));
        }
        seen |= *b;
    }
    if let Some(v) = (g.vertices() - seen).first() {
        return Err(PartitionError::Uncovered(v));
    }

    let m = blocks.len();
    let mut entries = Vec::with_capacity(m * m);
    let mut equitable = true;
    for (i, bi) in blocks.iter().enumerate() {
        for (j, bj) in blocks.iter().enumerate() {
            // Row sum of Q over columns in V_j, for each row u in V_i.
            let row_sum = |u: usize| g.degree_in(u, bj) + if i == j { g.degree(u) } else { 0 };
            let mut total = 0usize;
            let mut first = None;
            for u in bi.iter() {
                let r = row_sum(u);
                total += r;
                if *first.get_or_insert(r) != r {
                    equitable = false;
                }
            }
            entries.push(BigRational::new(
                BigInt::from(total),
                BigInt::from(bi.len()),
            ));
        }
    }
    Ok(QuotientMatrix {
        blocks: blocks.to_vec(),
        entries,
        equitable,
    })
}

impl QuotientMatrix {
    pub fn dim(&self) -> usize {
        self.blocks.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.dim() + j]
    }

    /// The entries as integers, if they all are.
    pub fn to_integer_matrix(&self) -> Option<IntMatrix> {
        let d = self.dim();
        let rows: Vec<Vec<BigInt>> = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| self.get(i, j))
                    .map(|e| e.is_integer().then(|| e.to_integer()))
                    .collect::<Option<Vec<_>>>()
            })
            .collect::<Option<Vec<_>>>()?;
        Some(IntMatrix::from_rows(&rows))
    }

    pub fn charpoly(&self) -> Option<IntPolynomial> {
        self.to_integer_matrix().map(|m| charpoly(&m))
    }

    /// `λ(B)`: the largest root of the characteristic polynomial, isolated
    /// exactly and rounded at the end.
    pub fn spectral_radius(&self) -> Option<f64> {
        largest_root_f64(&self.charpoly()?)
    }

    /// `sum_j b_ij` for each row.
    pub fn row_sums(&self) -> Vec<BigRational> {
        let d = self.dim();
        (0..d)
            .map(|i| (0..d).fold(BigRational::zero(), |acc, j| acc + self.get(i, j)))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;
    use crate::spectral::q_value;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().collect()
    }

    fn as_i64(b: &QuotientMatrix) -> Vec<Vec<i64>> {
        let m = b.to_integer_matrix().unwrap();
        (0..m.dim())
            .map(|i| {
                (0..m.dim())
                    .map(|j| i64::try_from(m.get(i, j)).unwrap())
                    .collect()
            })
            .collect()
    }

    #[test]
    fn three_block_partition_of_the_extremal_graph() {
        let g = Family::K11n2Plus { n: 7 }.graph().unwrap();
        let b = quotient_matrix(&g, &[set(&[0, 1]), set(&[2, 3]), set(&[4, 5, 6])]).unwrap();
        assert!(b.equitable);
        assert_eq!(as_i64(&b), [[7, 2, 3], [2, 4, 0], [2, 0, 2]]);
        assert_eq!(b.charpoly().unwrap().to_string(), "x^3 - 13x^2 + 40x - 24");
        assert!((b.spectral_radius().unwrap() - q_value(&g).unwrap()).abs() < 1e-9);
    }

    #[test]
    fn trivial_and_path_partitions() {
        let k5 = Graph::complete(5).unwrap();
        let b = quotient_matrix(&k5, &[k5.vertices()]).unwrap();
        assert!(b.equitable);
        assert_eq!(as_i64(&b), [[8]]);

        let p3 = Graph::path(3).unwrap();
        let b = quotient_matrix(&p3, &[set(&[0, 2]), set(&[1])]).unwrap();
        assert!(b.equitable);
        assert_eq!(as_i64(&b), [[1, 1], [2, 2]]);
    }

    #[test]
    fn non_equitable_partition() {
        let p4 = Graph::path(4).unwrap();
        let b = quotient_matrix(&p4, &[set(&[0, 1]), set(&[2, 3])]).unwrap();
        assert!(!b.equitable);
        assert_eq!(b.get(0, 0), &BigRational::new(5.into(), 2.into()));
        assert!(b.to_integer_matrix().is_none());
    }

    #[test]
    fn invalid_partitions() {
        let g = Graph::path(3).unwrap();
        assert_eq!(
            quotient_matrix(&g, &[set(&[0, 1]), set(&[1, 2])]),
            Err(PartitionError::Overlap(1))
        );
        assert_eq!(
            quotient_matrix(&g, &[set(&[0, 1])]),
            Err(PartitionError::Uncovered(2))
        );
        assert_eq!(
            quotient_matrix(&g, &[set(&[0, 1, 2]), VertexSet::EMPTY]),
            Err(PartitionError::EmptyBlock(1))
        );
        assert_eq!(
            quotient_matrix(&g, &[set(&[0, 1, 2, 3])]),
            Err(PartitionError::OutOfRange(3))
        );
    }
}
