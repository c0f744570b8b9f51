use core::fmt;
use core::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Not, Sub};

pub(crate) const WORDS: usize = 4;

/// Largest vertex count a [`VertexSet`] (and therefore a graph) can address.
pub const MAX_VERTICES: usize = WORDS * 64;

/// A fixed-capacity set of vertex indices `0..MAX_VERTICES`.
///
/// Graphs with at most 64 vertices only ever touch the first word, so the
/// common small-graph paths stay a handful of word operations.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet([u64; WORDS]);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet([0; WORDS]);

    /// The set `{0, 1, ..., n-1}`.
    pub fn prefix(n: usize) -> VertexSet {
        assert!(n <= MAX_VERTICES, "vertex set prefix {n} exceeds capacity");
        let mut words = [0u64; WORDS];
        for (i, w) in words.iter_mut().enumerate() {
            let lo = i * 64;
            if n >= lo + 64 {
                *w = u64::MAX;
            } else if n > lo {
                *w = (1u64 << (n - lo)) - 1;
            }
        }
        VertexSet(words)
    }

    pub fn singleton(v: usize) -> VertexSet {
        let mut s = VertexSet::EMPTY;
        s.insert(v);
        s
    }

    /// Builds a set from the low 64 vertices encoded as a bit mask.
    pub const fn from_u64(mask: u64) -> VertexSet {
        VertexSet([mask, 0, 0, 0])
    }

    /// The first word, i.e. membership of vertices `0..64`.
    pub const fn low_word(&self) -> u64 {
        self.0[0]
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < MAX_VERTICES && (self.0[v >> 6] >> (v & 63)) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0[v >> 6] |= 1u64 << (v & 63);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0[v >> 6] &= !(1u64 << (v & 63));
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    /// Smallest element.
    #[inline]
    pub fn first(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        (*self & *other).is_empty()
    }

    /// Elements in ascending order.
    pub fn iter(&self) -> Iter {
        Iter {
            words: self.0,
            word: 0,
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl<'a> FromIterator<&'a usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = &'a usize>>(iter: I) -> Self {
        iter.into_iter().copied().collect()
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl IntoIterator for &VertexSet {
    type Item = usize;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}

pub struct Iter {
    words: [u64; WORDS],
    word: usize,
}

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        while self.word < WORDS {
            let w = self.words[self.word];
            if w != 0 {
                let bit = w.trailing_zeros() as usize;
                self.words[self.word] = w & (w - 1);
                return Some(self.word * 64 + bit);
            }
            self.word += 1;
        }
        None
    }
}

macro_rules! wordwise {
    ($tr:ident, $f:ident, $op:tt) => {
        impl $tr for VertexSet {
            type Output = VertexSet;
            #[inline]
            fn $f(self, rhs: VertexSet) -> VertexSet {
                let mut out = [0u64; WORDS];
                for i in 0..WORDS {
                    out[i] = self.0[i] $op rhs.0[i];
                }
                VertexSet(out)
            }
        }
    };
}

wordwise!(BitOr, bitor, |);
wordwise!(BitAnd, bitand, &);

impl Sub for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn sub(self, rhs: VertexSet) -> VertexSet {
        let mut out = [0u64; WORDS];
        for i in 0..WORDS {
            out[i] = self.0[i] & !rhs.0[i];
        }
        VertexSet(out)
    }
}

impl Not for VertexSet {
    type Output = VertexSet;
    fn not(self) -> VertexSet {
        VertexSet(self.0.map(|w| !w))
    }
}

impl BitOrAssign for VertexSet {
    fn bitor_assign(&mut self, rhs: VertexSet) {
        *self = *self | rhs;
    }
}

impl BitAndAssign for VertexSet {
    fn bitand_assign(&mut self, rhs: VertexSet) {
        *self = *self & rhs;
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    #[test]
    fn prefix_and_iteration_cross_word_boundaries() {
        let s = VertexSet::prefix(130);
        assert_eq!(s.len(), 130);
        assert!(s.contains(129) && !s.contains(130));
        let mut t = VertexSet::EMPTY;
        for v in [3, 64, 200, 255] {
            t.insert(v);
        }
        assert_eq!(t.iter().collect::<Vec<_>>(), [3, 64, 200, 255]);
        assert_eq!(t.first(), Some(3));
        t.remove(3);
        assert_eq!(t.first(), Some(64));
        assert!(VertexSet::prefix(0).is_empty());
        assert_eq!(VertexSet::prefix(MAX_VERTICES).len(), MAX_VERTICES);
    }

    #[test]
    fn set_algebra() {
        let a: VertexSet = [1usize, 2, 3].iter().collect();
        let b: VertexSet = [3usize, 4].iter().collect();
        assert_eq!((a | b).len(), 4);
        assert_eq!((a & b).iter().collect::<Vec<_>>(), [3]);
        assert_eq!((a - b).iter().collect::<Vec<_>>(), [1, 2]);
        assert!((a & b).is_subset(&a));
        assert!(!a.is_disjoint(&b));
    }
}
