use core::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::roots::{compare_largest_roots_in, LargestRoot};
use super::{charpoly, signless_laplacian, IntPolynomial};
use crate::graph::Graph;

/// `det(xI - Q(G))`.
pub fn q_charpoly(g: &Graph) -> IntPolynomial {
    charpoly(&signless_laplacian(g).to_int_matrix())
}

/// Exact ordering of `q(G)` against `q(H)`.
///
/// Every eigenvalue of `Q` lies in `[0, 2Δ]`, so the largest roots are
/// isolated inside `(-1, 2Δ + 1]` using the larger maximum degree of the two.
pub fn q_exact_compare(g: &Graph, h: &Graph) -> Ordering {
    let delta = g.max_degree().max(h.max_degree());
    compare_largest_roots_in(
        &q_charpoly(g),
        &q_charpoly(h),
        BigRational::from_integer(BigInt::from(-1)),
        BigRational::from_integer(BigInt::from(2 * delta + 1)),
    )
}

/// Exact ordering of `q(G)` against a rational.
pub fn q_compare_rational(g: &Graph, r: &BigRational) -> Ordering {
    let mut root = LargestRoot::isolate_in(
        &q_charpoly(g),
        BigRational::from_integer(BigInt::from(-1)),
        BigRational::from_integer(BigInt::from(2 * g.max_degree() + 1)),
    )
    .expect("Q(G) has real eigenvalues");
    root.compare_with(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    #[test]
    fn examples() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(q_exact_compare(&k4, &k4), Ordering::Equal);
        let plus = Family::K11n2Plus { n: 6 }.graph().unwrap();
        let ex6 = Family::K1JoinK4UnionK1.graph().unwrap();
        assert_eq!(q_exact_compare(&plus, &ex6), Ordering::Less);
        assert_eq!(q_exact_compare(&ex6, &plus), Ordering::Greater);
        assert_eq!(
            q_exact_compare(&Graph::cycle(5).unwrap(), &Graph::cycle(7).unwrap()),
            Ordering::Equal
        );
    }

    #[test]
    fn rational_comparisons() {
        let r = |a: i64, b: i64| BigRational::new(BigInt::from(a), BigInt::from(b));
        for n in 2..=7 {
            let k = Graph::complete(n).unwrap();
            let q = 2 * n as i64 - 2;
            assert_eq!(q_compare_rational(&k, &r(q, 1)), Ordering::Equal);
            assert_eq!(
                q_compare_rational(&k, &r(1000 * q + 1, 1000)),
                Ordering::Less
            );
            assert_eq!(
                q_compare_rational(&k, &r(1000 * q - 1, 1000)),
                Ordering::Greater
            );
        }
        // q(K^+_{1,1,4}) = 7.75877...
        let plus = Family::K11n2Plus { n: 6 }.graph().unwrap();
        assert_eq!(
            q_compare_rational(&plus, &r(775877, 100000)),
            Ordering::Greater
        );
        assert_eq!(
            q_compare_rational(&plus, &r(775878, 100000)),
            Ordering::Less
        );
        assert_eq!(
            q_compare_rational(&Graph::empty(3).unwrap(), &r(0, 1)),
            Ordering::Equal
        );
    }

    #[test]
    fn isomorphic_copies_tie_and_supergraphs_win() {
        let g = Family::G { i: 8, n: 10 }.graph().unwrap();
        let relabelled = g.relabel(&[5, 3, 1, 0, 2, 4, 9, 8, 7, 6]).unwrap();
        assert_eq!(q_exact_compare(&g, &relabelled), Ordering::Equal);
        let (u, v) = (0..10)
            .flat_map(|u| (u + 1..10).map(move |v| (u, v)))
            .find(|&(u, v)| !g.has_edge(u, v))
            .unwrap();
        assert_eq!(
            q_exact_compare(&g, &g.with_edge(u, v).unwrap()),
            Ordering::Less
        );
        // q(K_{1,3}) = q(C_6) = 4 on different orders.
        let k13 = Family::Star { s: 3 }.graph().unwrap();
        assert_eq!(
            q_exact_compare(&k13, &Graph::cycle(6).unwrap()),
            Ordering::Equal
        );
    }
}
