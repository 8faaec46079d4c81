//! Subsets of a finite carrier `{0..n-1}` stored as packed bit words.

use std::cmp::Ordering;
use std::fmt;

const WORD: usize = 64;

/// A subset of `{0..carrier_size-1}`.
///
/// Ordering is by size first and then lexicographic on the ascending member
/// list, which is the order subquandle lattices are listed in.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElementSet {
    carrier_size: usize,
    words: Vec<u64>,
}

impl ElementSet {
    pub fn empty(carrier_size: usize) -> Self {
        ElementSet {
            carrier_size,
            words: vec![0; carrier_size.div_ceil(WORD)],
        }
    }

    pub fn full(carrier_size: usize) -> Self {
        let mut s = Self::empty(carrier_size);
        for x in 0..carrier_size {
            s.insert(x);
        }
        s
    }

    pub fn singleton(carrier_size: usize, x: usize) -> Self {
        let mut s = Self::empty(carrier_size);
        s.insert(x);
        s
    }

    /// Builds a set from members; panics if a member is outside the carrier.
    pub fn from_members<I: IntoIterator<Item = usize>>(carrier_size: usize, members: I) -> Self {
        let mut s = Self::empty(carrier_size);
        for x in members {
            assert!(
                x < carrier_size,
                "member {x} outside carrier of size {carrier_size}"
            );
            s.insert(x);
        }
        s
    }

    /// Like [`ElementSet::from_members`] but reports out-of-range members as an error.
    pub fn try_from_members<I: IntoIterator<Item = usize>>(
        carrier_size: usize,
        members: I,
    ) -> crate::Result<Self> {
        let mut s = Self::empty(carrier_size);
        for x in members {
            if x >= carrier_size {
                return Err(crate::Error::OutOfRange {
                    index: x,
                    size: carrier_size,
                });
            }
            s.insert(x);
        }
        Ok(s)
    }

    pub fn carrier_size(&self) -> usize {
        self.carrier_size
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        x < self.carrier_size && self.words[x / WORD] >> (x % WORD) & 1 == 1
    }

    /// Returns true if `x` was not already present.
    #[inline]
    pub fn insert(&mut self, x: usize) -> bool {
        debug_assert!(x < self.carrier_size);
        let w = &mut self.words[x / WORD];
        let bit = 1u64 << (x % WORD);
        let fresh = *w & bit == 0;
        *w |= bit;
        fresh
    }

    pub fn remove(&mut self, x: usize) -> bool {
        if x >= self.carrier_size {
            return false;
        }
        let w = &mut self.words[x / WORD];
        let bit = 1u64 << (x % WORD);
        let present = *w & bit != 0;
        *w &= !bit;
        present
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.carrier_size
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.carrier_size).filter(move |&x| self.contains(x))
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn union(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & !b)
    }

    /// Set complement within the carrier.
    pub fn complement(&self) -> Self {
        Self::full(self.carrier_size).difference(self)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.check_carrier(other);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.check_carrier(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Self {
        self.check_carrier(other);
        ElementSet {
            carrier_size: self.carrier_size,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    fn check_carrier(&self, other: &Self) {
        assert_eq!(
            self.carrier_size, other.carrier_size,
            "element sets over different carriers"
        );
    }

    /// 1-based comma list, e.g. `{1,3}`; the empty set prints as `{}`.
    pub fn one_based(&self) -> String {
        let items: Vec<String> = self.iter().map(|x| (x + 1).to_string()).collect();
        format!("{{{}}}", items.join(","))
    }
}

impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.carrier_size
            .cmp(&other.carrier_size)
            .then_with(|| self.len().cmp(&other.len()))
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Prints 0-based members, e.g. `{0, 2}`.
impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.iter().map(|x| x.to_string()).collect();
        write!(f, "{{{}}}", items.join(", "))
    }
}
