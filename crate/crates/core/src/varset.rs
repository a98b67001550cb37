use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};

/// Width of the bitset backing [`VarSet`].
pub const MAX_VARS: u32 = 32;

/// A set of variable (or vertex) indices drawn from `1..=32`.
///
/// Index `i` is stored in bit `i - 1`. Ordering is lexicographic on the
/// sorted index lists, so `{1,2} < {1,2,3} < {1,3} < {2}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VarSet(u32);

impl VarSet {
    pub const EMPTY: VarSet = VarSet(0);

    pub const fn from_bits(bits: u32) -> Self {
        VarSet(bits)
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    /// `{1, ..., n}`.
    pub fn full(n: u32) -> Self {
        if n >= 32 {
            VarSet(u32::MAX)
        } else {
            VarSet((1u32 << n) - 1)
        }
    }

    /// The integer interval `lo..=hi` (1-based, inclusive).
    pub fn interval(lo: u32, hi: u32) -> Self {
        debug_assert!(lo >= 1 && hi <= MAX_VARS);
        if lo > hi {
            return VarSet::EMPTY;
        }
        VarSet(Self::full(hi).0 & !Self::full(lo - 1).0)
    }

    pub fn from_indices<I: IntoIterator<Item = u32>>(indices: I) -> Result<Self> {
        let mut bits = 0u32;
        for i in indices {
            if i == 0 || i > MAX_VARS {
                return Err(Error::IndexOutOfRange { index: i, n: MAX_VARS });
            }
            bits |= 1 << (i - 1);
        }
        Ok(VarSet(bits))
    }

    pub fn singleton(i: u32) -> Self {
        debug_assert!((1..=MAX_VARS).contains(&i));
        VarSet(1 << (i - 1))
    }

    pub const fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn contains(self, i: u32) -> bool {
        i >= 1 && i <= MAX_VARS && self.0 & (1 << (i - 1)) != 0
    }

    pub const fn is_subset(self, other: VarSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn is_disjoint(self, other: VarSet) -> bool {
        self.0 & other.0 == 0
    }

    pub const fn union(self, other: VarSet) -> VarSet {
        VarSet(self.0 | other.0)
    }

    pub const fn intersection(self, other: VarSet) -> VarSet {
        VarSet(self.0 & other.0)
    }

    pub const fn difference(self, other: VarSet) -> VarSet {
        VarSet(self.0 & !other.0)
    }

    pub fn insert(&mut self, i: u32) {
        self.0 |= 1 << (i - 1);
    }

    pub fn remove(&mut self, i: u32) {
        self.0 &= !(1 << (i - 1));
    }

    /// Smallest index in the set.
    pub fn first(self) -> Option<u32> {
        (self.0 != 0).then(|| self.0.trailing_zeros() + 1)
    }

    /// Largest index in the set.
    pub fn last(self) -> Option<u32> {
        (self.0 != 0).then(|| 32 - self.0.leading_zeros())
    }

    /// Whether every index lies in `1..=n`.
    pub fn fits(self, n: u32) -> bool {
        self.is_subset(Self::full(n))
    }

    /// Indices in increasing order.
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    /// All subsets of `self`, in increasing order of their bit patterns.
    pub fn subsets(self) -> Subsets {
        Subsets { mask: self.0, next: Some(0) }
    }
}

impl Ord for VarSet {
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        // The sorted lists agree below the lowest differing index `t`; the
        // side holding `t` is larger only when the other list stops there.
        let t = diff.trailing_zeros();
        let self_holds = self.0 & (1 << t) != 0;
        let rest_of_other = if self_holds { other.0 >> t } else { self.0 >> t };
        let holder_greater = rest_of_other == 0;
        if self_holds == holder_greater {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }
}

impl PartialOrd for VarSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Compact form `{1,2,3}`.
impl fmt::Display for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (pos, i) in self.iter().enumerate() {
            if pos > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Clone)]
pub struct Iter(u32);

impl Iterator for Iter {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        if self.0 == 0 {
            return None;
        }
        let t = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(t + 1)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

/// Carry-rippler enumeration of the subsets of a mask.
#[derive(Clone)]
pub struct Subsets {
    mask: u32,
    next: Option<u32>,
}

impl Iterator for Subsets {
    type Item = VarSet;

    fn next(&mut self) -> Option<VarSet> {
        let cur = self.next?;
        let succ = cur.wrapping_sub(self.mask) & self.mask;
        self.next = (succ != 0).then_some(succ);
        Some(VarSet(cur))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    fn set(v: &[u32]) -> VarSet {
        VarSet::from_indices(v.iter().copied()).unwrap()
    }

    #[test]
    fn lex_order_on_sorted_lists() {
        let mut sets = [set(&[2]), set(&[1, 3]), set(&[1, 2, 3]), set(&[1, 2]), set(&[])];
        sets.sort();
        assert_eq!(sets, [set(&[]), set(&[1, 2]), set(&[1, 2, 3]), set(&[1, 3]), set(&[2])]);
    }

    #[test]
    fn order_matches_vec_order_exhaustively() {
        for a in 0u32..64 {
            for b in 0u32..64 {
                let (x, y) = (VarSet(a), VarSet(b));
                let lx: Vec<u32> = x.iter().collect();
                let ly: Vec<u32> = y.iter().collect();
                assert_eq!(x.cmp(&y), lx.cmp(&ly), "{x} vs {y}");
            }
        }
    }

    #[test]
    fn subsets_enumerates_all() {
        let s = set(&[1, 3, 4]);
        let subs: Vec<VarSet> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|t| t.is_subset(s)));
        assert_eq!(VarSet::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn interval_and_extremes() {
        let s = VarSet::interval(3, 5);
        assert_eq!(s, set(&[3, 4, 5]));
        assert_eq!(s.first(), Some(3));
        assert_eq!(s.last(), Some(5));
        assert_eq!(VarSet::full(32).len(), 32);
        assert!(VarSet::interval(4, 3).is_empty());
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(VarSet::from_indices([0]).is_err());
        assert!(VarSet::from_indices([33]).is_err());
    }
}
