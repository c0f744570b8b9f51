use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{IntMatrix, IntPolynomial};

/// `det(xI - M)` by the Faddeev–LeVerrier recurrence.
///
/// With `M_0 = 0` and `c_d = 1`, each step sets `M_k = M M_{k-1} + c_{d-k+1} I`
/// and `c_{d-k} = -tr(M M_k) / k`; the division is always exact.
pub fn charpoly(m: &IntMatrix) -> IntPolynomial {
    let d = m.dim();
    let a = m.entries();
    let mut coeffs = alloc::vec![BigInt::zero(); d + 1];
    coeffs[d] = BigInt::from(1);
    let mut mk: Vec<BigInt> = alloc::vec![BigInt::zero(); d * d];
    for k in 1..=d {
        // M_k = A M_{k-1} + c_{d-k+1} I
        let mut next = multiply(a, &mk, d);
        for i in 0..d {
            next[i * d + i] += &coeffs[d - k + 1];
        }
        mk = next;
        let am = multiply(a, &mk, d);
        let trace: BigInt = (0..d).map(|i| &am[i * d + i]).sum();
        let c = -trace / BigInt::from(k);
        coeffs[d - k] = c;
    }
    IntPolynomial::new(coeffs)
}

fn multiply(a: &[BigInt], b: &[BigInt], d: usize) -> Vec<BigInt> {
    let mut out = alloc::vec![BigInt::zero(); d * d];
    for i in 0..d {
        for l in 0..d {
            let ail = &a[i * d + l];
            if ail.is_zero() {
                continue;
            }
            for j in 0..d {
                let blj = &b[l * d + j];
                if !blj.is_zero() {
                    out[i * d + j] += ail * blj;
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::charpoly_by_expansion;
    use crate::spectral::signless_laplacian;
    use crate::Graph;
    use alloc::vec;
    use proptest::prelude::*;

    #[test]
    fn examples() {
        let b = IntMatrix::from_rows(&[vec![7, 2, 3], vec![2, 4, 0], vec![2, 0, 2]]);
        assert_eq!(charpoly(&b), IntPolynomial::from_i64(&[-24, 40, -13, 1]));
        assert_eq!(
            charpoly(&IntMatrix::identity(3)),
            IntPolynomial::linear_root(1).pow(3)
        );
        assert_eq!(
            charpoly(&IntMatrix::from_rows::<i64>(&[])),
            IntPolynomial::constant(1)
        );
    }

    #[test]
    fn large_entries_stay_exact() {
        let g = Graph::complete(30).unwrap();
        let p = charpoly(&signless_laplacian(&g).to_int_matrix());
        // Q(K_n) has eigenvalue 2n - 2 once and n - 2 with multiplicity n - 1.
        let expected = &IntPolynomial::linear_root(58) * &IntPolynomial::linear_root(28).pow(29);
        assert_eq!(p, expected);
    }

    proptest! {
        #[test]
        fn agrees_with_permutation_expansion(
            d in 1usize..5,
            raw in proptest::collection::vec(-9i64..10, 25),
        ) {
            let rows: Vec<Vec<i64>> = (0..d).map(|i| raw[i * 5..i * 5 + d].to_vec()).collect();
            let m = IntMatrix::from_rows(&rows);
            prop_assert_eq!(charpoly(&m), charpoly_by_expansion(&m));
        }
    }
}
