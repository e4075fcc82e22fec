//! Subsets of a ground set of at most [`MAX_POINTS`] points, and sorted
//! duplicate-free families of them.

use std::cmp::Ordering;
use std::fmt;

/// Largest supported ground set.
pub const MAX_POINTS: usize = 8;

/// A subset of `{0, .., n-1}` stored as a membership bitmask.
///
/// A `Subset` does not know its ground set; operations that need it
/// (complement, iteration over supersets) take `n` explicitly.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Subset(u8);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    #[inline]
    pub const fn from_bits(bits: u8) -> Self {
        Subset(bits)
    }

    #[inline]
    pub const fn bits(self) -> u8 {
        self.0
    }

    /// The whole ground set of `n` points.
    #[inline]
    pub const fn full(n: usize) -> Self {
        Subset(((1u16 << n) - 1) as u8)
    }

    #[inline]
    pub const fn singleton(i: usize) -> Self {
        Subset(1 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        indices
            .into_iter()
            .fold(Subset::EMPTY, |acc, i| acc.union(Subset::singleton(i)))
    }

    #[inline]
    pub const fn contains(self, i: usize) -> bool {
        self.0 & (1 << i) != 0
    }

    #[inline]
    pub const fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    #[inline]
    pub const fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    #[inline]
    pub const fn difference(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    #[inline]
    pub const fn complement(self, n: usize) -> Subset {
        Subset(!self.0 & Subset::full(n).0)
    }

    #[inline]
    pub const fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub const fn is_disjoint(self, other: Subset) -> bool {
        self.0 & other.0 == 0
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// True if no member lies outside `{0, .., n-1}`.
    #[inline]
    pub const fn within(self, n: usize) -> bool {
        self.is_subset_of(Subset::full(n))
    }

    /// Member indices in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..MAX_POINTS).filter(move |&i| self.contains(i))
    }

    /// Every subset of a ground set of `n` points, by increasing bit value.
    pub fn all(n: usize) -> impl Iterator<Item = Subset> {
        (0..(1u16 << n)).map(|b| Subset(b as u8))
    }

    /// Every superset of `self` inside a ground set of `n` points.
    pub fn supersets(self, n: usize) -> impl Iterator<Item = Subset> {
        let free = self.complement(n).0;
        // enumerate submasks of `free` in increasing order
        let mut next = Some(0u8);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == free {
                None
            } else {
                Some(((cur | !free).wrapping_add(1)) & free)
            };
            Some(Subset(self.0 | cur))
        })
    }

    /// Every subset of `self`.
    pub fn subsets(self) -> impl Iterator<Item = Subset> {
        let full = self.0;
        let mut next = Some(0u8);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full {
                None
            } else {
                Some(((cur | !full).wrapping_add(1)) & full)
            };
            Some(Subset(cur))
        })
    }

    /// Image under a point relabeling: point `i` goes to `perm[i]`.
    pub fn permute(self, perm: &[usize]) -> Subset {
        Subset::from_indices(self.iter().map(|i| perm[i]))
    }

    /// The canonical family order: cardinality first, then numeric value.
    #[inline]
    pub fn canonical_cmp(&self, other: &Subset) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.canonical_cmp(other)
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// A 256-slot membership table over all subsets of an 8-point ground set.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, Debug)]
pub struct SubsetMask([u64; 4]);

impl SubsetMask {
    #[inline]
    pub fn insert(&mut self, s: Subset) {
        let b = s.bits() as usize;
        self.0[b / 64] |= 1 << (b % 64);
    }

    #[inline]
    pub fn contains(&self, s: Subset) -> bool {
        let b = s.bits() as usize;
        self.0[b / 64] & (1 << (b % 64)) != 0
    }
}

/// A duplicate-free family of subsets kept in canonical order, with O(1)
/// membership.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SubsetFamily {
    members: Vec<Subset>,
    mask: SubsetMask,
}

impl SubsetFamily {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn members(&self) -> &[Subset] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    #[inline]
    pub fn contains(&self, s: Subset) -> bool {
        self.mask.contains(s)
    }

    pub fn iter(&self) -> impl Iterator<Item = Subset> + '_ {
        self.members.iter().copied()
    }

    /// Members that contain `a`.
    pub fn supersets_of(&self, a: Subset) -> impl Iterator<Item = Subset> + '_ {
        self.iter().filter(move |u| a.is_subset_of(*u))
    }

    /// Members contained in `a`.
    pub fn subsets_of(&self, a: Subset) -> impl Iterator<Item = Subset> + '_ {
        self.iter().filter(move |u| u.is_subset_of(a))
    }

    /// Complement of every member inside an `n`-point ground set.
    pub fn complements(&self, n: usize) -> SubsetFamily {
        self.iter().map(|s| s.complement(n)).collect()
    }

    pub fn is_subfamily_of(&self, other: &SubsetFamily) -> bool {
        self.iter().all(|s| other.contains(s))
    }

    pub fn permute(&self, perm: &[usize]) -> SubsetFamily {
        self.iter().map(|s| s.permute(perm)).collect()
    }
}

impl FromIterator<Subset> for SubsetFamily {
    fn from_iter<I: IntoIterator<Item = Subset>>(iter: I) -> Self {
        let mut mask = SubsetMask::default();
        let mut members = Vec::new();
        for s in iter {
            if !mask.contains(s) {
                mask.insert(s);
                members.push(s);
            }
        }
        members.sort_unstable();
        SubsetFamily { members, mask }
    }
}

impl PartialOrd for SubsetFamily {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SubsetFamily {
    fn cmp(&self, other: &Self) -> Ordering {
        self.members.cmp(&other.members)
    }
}

impl fmt::Debug for SubsetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.members.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_set_edges() {
        assert_eq!(Subset::full(1).bits(), 1);
        assert_eq!(Subset::full(8).bits(), 0xFF);
        assert_eq!(Subset::EMPTY.complement(8), Subset::full(8));
    }

    #[test]
    fn superset_enumeration_matches_filter() {
        for n in 0..=5 {
            for a in Subset::all(n) {
                let mut got: Vec<_> = a.supersets(n).collect();
                let mut want: Vec<_> = Subset::all(n).filter(|s| a.is_subset_of(*s)).collect();
                got.sort();
                want.sort();
                assert_eq!(got, want);
            }
        }
    }

    #[test]
    fn subset_enumeration_counts() {
        let s = Subset::from_indices([0, 2, 5]);
        assert_eq!(s.subsets().count(), 8);
        assert!(s.subsets().all(|t| t.is_subset_of(s)));
    }

    #[test]
    fn canonical_order_is_cardinality_then_value() {
        let fam: SubsetFamily = [0b111, 0b100, 0b011, 0b000, 0b001]
            .into_iter()
            .map(Subset::from_bits)
            .collect();
        let bits: Vec<u8> = fam.iter().map(Subset::bits).collect();
        assert_eq!(bits, vec![0b000, 0b001, 0b100, 0b011, 0b111]);
    }

    #[test]
    fn family_is_duplicate_free() {
        let fam: SubsetFamily = [1, 1, 2, 1].into_iter().map(Subset::from_bits).collect();
        assert_eq!(fam.len(), 2);
    }
}
