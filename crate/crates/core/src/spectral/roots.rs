//! Real root isolation with Sturm sequences over exact rationals.

use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::IntPolynomial;

/// Dense rational polynomial, ascending, trimmed.
#[derive(Debug, Clone, PartialEq, Eq)]
struct RatPoly(Vec<BigRational>);

impl RatPoly {
    fn from_int(p: &IntPolynomial) -> RatPoly {
        RatPoly(
            p.coeffs()
                .iter()
                .cloned()
                .map(BigRational::from_integer)
                .collect(),
        )
    }

    fn trim(mut self) -> RatPoly {
        while self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
        self
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn derivative(&self) -> RatPoly {
        RatPoly(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigRational::from_integer(BigInt::from(k)))
                .collect(),
        )
        .trim()
    }

    fn sign_at(&self, x: &BigRational) -> Ordering {
        let v = self
            .0
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c);
        v.cmp(&BigRational::zero())
    }

    /// Remainder of `self` divided by `d` (non-zero).
    fn rem(&self, d: &RatPoly) -> RatPoly {
        let mut r = self.0.clone();
        let dd = d.degree();
        let lead = d.0.last().expect("non-zero divisor");
        while r.len() > dd && !r.is_empty() {
            let shift = r.len() - 1 - dd;
            let factor = r.last().unwrap() / lead;
            for (i, c) in d.0.iter().enumerate() {
                r[shift + i] -= &factor * c;
            }
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        RatPoly(r)
    }

    /// Exact quotient of `self` by `d`, assuming `d` divides `self`.
    fn div_exact(&self, d: &RatPoly) -> RatPoly {
        let dd = d.degree();
        if self.0.len() <= dd {
            return RatPoly(Vec::new());
        }
        let mut r = self.0.clone();
        let mut q = alloc::vec![BigRational::zero(); r.len() - dd];
        let lead = d.0.last().expect("non-zero divisor");
        for shift in (0..q.len()).rev() {
            let factor = &r[shift + dd] / lead;
            for (i, c) in d.0.iter().enumerate() {
                r[shift + i] -= &factor * c;
            }
            q[shift] = factor;
        }
        RatPoly(q).trim()
    }

    fn monic(self) -> RatPoly {
        match self.0.last().cloned() {
            Some(lead) => RatPoly(self.0.into_iter().map(|c| c / &lead).collect()),
            None => self,
        }
    }

    fn gcd(a: &RatPoly, b: &RatPoly) -> RatPoly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }
}

/// A Sturm chain of the square-free part of a non-zero polynomial.
#[derive(Debug, Clone)]
pub struct SturmSequence {
    chain: Vec<RatPoly>,
}

impl SturmSequence {
    pub fn new(p: &IntPolynomial) -> SturmSequence {
        SturmSequence::from_rat(&RatPoly::from_int(p))
    }

    fn from_rat(p: &RatPoly) -> SturmSequence {
        assert!(!p.is_zero(), "Sturm sequence of the zero polynomial");
        let d = p.derivative();
        let square_free = if d.is_zero() {
            p.clone()
        } else {
            p.div_exact(&RatPoly::gcd(p, &d))
        };
        let mut chain = alloc::vec![square_free.clone(), square_free.derivative()];
        while !chain.last().unwrap().is_zero() {
            let k = chain.len();
            let r = chain[k - 2].rem(&chain[k - 1]);
            chain.push(RatPoly(r.0.into_iter().map(|c| -c).collect()));
        }
        chain.pop();
        SturmSequence { chain }
    }

    /// Sign changes along the chain at `x`, zeros skipped.
    pub fn sign_changes(&self, x: &BigRational) -> usize {
        let mut last = Ordering::Equal;
        let mut changes = 0;
        for p in &self.chain {
            let s = p.sign_at(x);
            if s == Ordering::Equal {
                continue;
            }
            if last != Ordering::Equal && s != last {
                changes += 1;
            }
            last = s;
        }
        changes
    }

    /// Number of distinct real roots in `(a, b]`.
    pub fn count_roots(&self, a: &BigRational, b: &BigRational) -> usize {
        self.sign_changes(a).saturating_sub(self.sign_changes(b))
    }

    fn is_root(&self, x: &BigRational) -> bool {
        self.chain[0].sign_at(x) == Ordering::Equal
    }
}

/// Upper bound (Cauchy) on the absolute value of every root; at least 1.
fn root_bound(p: &IntPolynomial) -> BigRational {
    let lead = p.leading().expect("non-zero polynomial").abs();
    let max = p
        .coeffs()
        .iter()
        .take(p.coeffs().len() - 1)
        .map(|c| c.abs())
        .max()
        .unwrap_or_default();
    BigRational::one() + BigRational::new(max, lead)
}

/// An interval `(lo, hi]` holding exactly one root of a polynomial, namely
/// its largest real root.
#[derive(Debug, Clone)]
pub struct LargestRoot {
    sturm: SturmSequence,
    pub lo: BigRational,
    pub hi: BigRational,
}

impl LargestRoot {
    /// Isolates the largest real root of `p`, or `None` when `p` has no
    /// real roots.
    pub fn isolate(p: &IntPolynomial) -> Option<LargestRoot> {
        let bound = root_bound(p);
        LargestRoot::isolate_in(p, -bound.clone(), bound)
    }

    /// As [`LargestRoot::isolate`], given that every real root lies in
    /// `(lo, hi]`.
    pub fn isolate_in(p: &IntPolynomial, lo: BigRational, hi: BigRational) -> Option<LargestRoot> {
        let sturm = SturmSequence::new(p);
        if sturm.count_roots(&lo, &hi) == 0 {
            return None;
        }
        let mut root = LargestRoot { sturm, lo, hi };
        while root.sturm.count_roots(&root.lo, &root.hi) > 1 {
            root.bisect();
        }
        Some(root)
    }

    /// Halves the interval, keeping the root inside.
    pub fn bisect(&mut self) {
        let mid = (&self.lo + &self.hi) / BigRational::from_integer(BigInt::from(2));
        if self.sturm.count_roots(&mid, &self.hi) > 0 {
            self.lo = mid;
        } else {
            self.hi = mid;
        }
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    /// Bisects until the width is at most `eps`.
    pub fn refine_to(&mut self, eps: &BigRational) {
        while &self.width() > eps {
            self.bisect();
        }
    }

    /// Whether the root is exactly `hi` (the only rational the interval can
    /// certify without further work).
    pub fn is_exactly_hi(&self) -> bool {
        self.sturm.is_root(&self.hi)
    }

    /// Exact comparison of the root with a rational.
    pub fn compare_with(&mut self, r: &BigRational) -> Ordering {
        loop {
            if r > &self.hi {
                return Ordering::Less;
            }
            if r <= &self.lo {
                return Ordering::Greater;
            }
            if self.sturm.is_root(r) {
                return Ordering::Equal;
            }
            self.bisect();
        }
    }

    pub fn midpoint_f64(&self) -> f64 {
        let mid = (&self.lo + &self.hi) / BigRational::from_integer(BigInt::from(2));
        mid.to_f64().unwrap_or(f64::NAN)
    }
}

/// The largest real root of `p`, correctly rounded in all but rare cases.
pub fn largest_root_f64(p: &IntPolynomial) -> Option<f64> {
    let mut root = LargestRoot::isolate(p)?;
    let floor = BigRational::new(BigInt::one(), BigInt::one() << 1000usize);
    loop {
        let scale = root.lo.abs().max(root.hi.abs());
        let eps = (scale / BigRational::from_integer(BigInt::one() << 60usize)).max(floor.clone());
        if root.width() <= eps {
            break;
        }
        root.bisect();
    }
    Some(if root.is_exactly_hi() {
        root.hi.to_f64().unwrap_or(f64::NAN)
    } else {
        root.midpoint_f64()
    })
}

/// Compares the largest real roots of two polynomials exactly.
///
/// Both must have at least one real root. Equality is decided by checking
/// whether `gcd(p, q)` has a root in the overlap of the two isolating
/// intervals; otherwise the intervals are refined until they separate.
pub fn compare_largest_roots(p: &IntPolynomial, q: &IntPolynomial) -> Ordering {
    let bound = root_bound(p).max(root_bound(q));
    compare_largest_roots_in(p, q, -bound.clone(), bound)
}

/// As [`compare_largest_roots`] with a caller-supplied window `(lo, hi]`
/// containing every real root of both polynomials.
pub fn compare_largest_roots_in(
    p: &IntPolynomial,
    q: &IntPolynomial,
    lo: BigRational,
    hi: BigRational,
) -> Ordering {
    let mut a = LargestRoot::isolate_in(p, lo.clone(), hi.clone()).expect("p has a real root");
    let mut b = LargestRoot::isolate_in(q, lo, hi).expect("q has a real root");
    let common = RatPoly::gcd(&RatPoly::from_int(p), &RatPoly::from_int(q));
    let common = (common.degree() > 0).then(|| SturmSequence::from_rat(&common));
    loop {
        // Intervals are half-open on the left, so touching endpoints separate.
        if a.hi <= b.lo {
            return Ordering::Less;
        }
        if b.hi <= a.lo {
            return Ordering::Greater;
        }
        let lo = (&a.lo).max(&b.lo).clone();
        let hi = (&a.hi).min(&b.hi).clone();
        if let Some(c) = &common {
            if c.count_roots(&lo, &hi) > 0 {
                return Ordering::Equal;
            }
        }
        a.bisect();
        b.bisect();
    }
}
