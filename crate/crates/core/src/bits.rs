//! Fixed-width bit vectors.
//!
//! [`EdgeSet`] is the workhorse of the crate: an element of the power group
//! `2^E` over the indexed edges of a hypergraph. Multiplication is symmetric
//! difference, every element is its own inverse and the empty set is the unit.
//! The same type doubles as a vertex set.

use std::cmp::Ordering;
use std::fmt;

const WORD: usize = 64;

/// A subset of `0..len`, stored as little-endian 64-bit words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitSet {
    len: usize,
    words: Vec<u64>,
}

/// An element of the power group over the edges of a hypergraph.
pub type EdgeSet = BitSet;

/// A set of vertex indices.
pub type VertexSet = BitSet;

impl BitSet {
    /// The empty set over a universe of `len` elements.
    pub fn new(len: usize) -> Self {
        BitSet {
            len,
            words: vec![0; len.div_ceil(WORD)],
        }
    }

    pub fn full(len: usize) -> Self {
        let mut s = Self::new(len);
        for i in 0..len {
            s.insert(i);
        }
        s
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(len: usize, indices: I) -> Self {
        let mut s = Self::new(len);
        for i in indices {
            s.insert(i);
        }
        s
    }

    /// Builds a set from the low `len` bits of `mask`.
    pub fn from_mask(len: usize, mask: u64) -> Self {
        assert!(len <= WORD, "mask constructor limited to 64 elements");
        let mut s = Self::new(len);
        if len > 0 {
            let keep = if len == WORD { u64::MAX } else { (1u64 << len) - 1 };
            s.words[0] = mask & keep;
        }
        s
    }

    /// Size of the universe (not the number of members).
    pub fn universe(&self) -> usize {
        self.len
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < self.len, "bit {i} out of range {}", self.len);
        self.words[i / WORD] |= 1 << (i % WORD);
    }

    pub fn remove(&mut self, i: usize) {
        assert!(i < self.len, "bit {i} out of range {}", self.len);
        self.words[i / WORD] &= !(1 << (i % WORD));
    }

    pub fn toggle(&mut self, i: usize) {
        assert!(i < self.len, "bit {i} out of range {}", self.len);
        self.words[i / WORD] ^= 1 << (i % WORD);
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        i < self.len && self.words[i / WORD] & (1 << (i % WORD)) != 0
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(k, w)| k * WORD + w.trailing_zeros() as usize)
    }

    pub fn iter(&self) -> Ones<'_> {
        Ones {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    fn check_universe(&self, other: &Self) {
        assert_eq!(
            self.len, other.len,
            "bit sets over different universes ({} vs {})",
            self.len, other.len
        );
    }

    /// Power-group product: symmetric difference.
    pub fn product(&self, other: &Self) -> Self {
        self.check_universe(other);
        let mut out = self.clone();
        out.product_assign(other);
        out
    }

    pub fn product_assign(&mut self, other: &Self) {
        self.check_universe(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= *b;
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        self.check_universe(other);
        let mut out = self.clone();
        for (a, b) in out.words.iter_mut().zip(&other.words) {
            *a |= *b;
        }
        out
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.check_universe(other);
        let mut out = self.clone();
        for (a, b) in out.words.iter_mut().zip(&other.words) {
            *a &= *b;
        }
        out
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.check_universe(other);
        let mut out = self.clone();
        for (a, b) in out.words.iter_mut().zip(&other.words) {
            *a &= !*b;
        }
        out
    }

    pub fn intersects(&self, other: &Self) -> bool {
        self.check_universe(other);
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        !self.intersects(other)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.check_universe(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

/// Lexicographic bit order: scanning from bit 0 upward, the set holding a 0 at
/// the first differing position is smaller. The empty set is the minimum.
impl Ord for BitSet {
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.words.iter().zip(&other.words) {
            let diff = a ^ b;
            if diff != 0 {
                let low = diff & diff.wrapping_neg();
                return if a & low == 0 {
                    Ordering::Less
                } else {
                    Ordering::Greater
                };
            }
        }
        self.len.cmp(&other.len)
    }
}

impl PartialOrd for BitSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct Ones<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Ones<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * WORD + bit);
            }
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
    }
}

impl<'a> IntoIterator for &'a BitSet {
    type Item = usize;
    type IntoIter = Ones<'a>;

    fn into_iter(self) -> Ones<'a> {
        self.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn product_is_symmetric_difference() {
        let a = BitSet::from_indices(5, [0, 1, 2]);
        let b = BitSet::from_indices(5, [2, 3]);
        assert_eq!(a.product(&b).to_vec(), vec![0, 1, 3]);
        assert!(a.product(&a).is_empty());
    }

    #[test]
    fn order_prefers_zero_at_first_difference() {
        let empty = BitSet::new(4);
        let a = BitSet::from_indices(4, [1]);
        let b = BitSet::from_indices(4, [0]);
        assert!(empty < a);
        assert!(a < b);
        assert!(BitSet::from_indices(4, [1, 2, 3]) < b);
    }

    #[test]
    fn spans_multiple_words() {
        let mut s = BitSet::new(130);
        s.insert(0);
        s.insert(64);
        s.insert(129);
        assert_eq!(s.to_vec(), vec![0, 64, 129]);
        assert_eq!(s.count(), 3);
        assert_eq!(s.first(), Some(0));
        s.remove(0);
        assert_eq!(s.first(), Some(64));
    }

    proptest! {
        #[test]
        fn power_group_laws(a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
            let (a, b, c) = (BitSet::from_mask(40, a), BitSet::from_mask(40, b), BitSet::from_mask(40, c));
            prop_assert_eq!(a.product(&b), b.product(&a));
            prop_assert_eq!(a.product(&b).product(&c), a.product(&b.product(&c)));
            prop_assert!(a.product(&a).is_empty());
            prop_assert_eq!(a.product(&BitSet::new(40)), a.clone());
        }

        #[test]
        fn order_matches_sorted_index_lists(a in any::<u16>(), b in any::<u16>()) {
            // Reference: compare reversed-bit integers, bit 0 most significant.
            let (sa, sb) = (BitSet::from_mask(16, a as u64), BitSet::from_mask(16, b as u64));
            let key = |m: u16| m.reverse_bits();
            prop_assert_eq!(sa.cmp(&sb), key(a).cmp(&key(b)));
        }
    }
}
