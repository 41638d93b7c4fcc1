//! Sorted element sets with constant-time membership.

use fixedbitset::FixedBitSet;

/// Index of an element inside its carrier, in canonical (lexicographic) order.
pub type Elem = u32;

/// A subset of a finite carrier, kept both as a sorted list and as a bitmask.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElemSet {
    elems: Vec<Elem>,
    mask: FixedBitSet,
}

impl ElemSet {
    pub fn empty(universe: usize) -> Self {
        ElemSet {
            elems: Vec::new(),
            mask: FixedBitSet::with_capacity(universe),
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut mask = FixedBitSet::with_capacity(universe);
        mask.insert_range(..);
        ElemSet {
            elems: (0..universe as Elem).collect(),
            mask,
        }
    }

    pub fn from_iter_in(universe: usize, items: impl IntoIterator<Item = Elem>) -> Self {
        let mut mask = FixedBitSet::with_capacity(universe);
        for x in items {
            mask.insert(x as usize);
        }
        Self::from_mask(mask)
    }

    pub fn from_mask(mask: FixedBitSet) -> Self {
        let elems = mask.ones().map(|i| i as Elem).collect();
        ElemSet { elems, mask }
    }

    pub fn universe(&self) -> usize {
        self.mask.len()
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    #[inline]
    pub fn contains(&self, x: Elem) -> bool {
        self.mask.contains(x as usize)
    }

    pub fn elems(&self) -> &[Elem] {
        &self.elems
    }

    pub fn iter(&self) -> impl Iterator<Item = Elem> + '_ {
        self.elems.iter().copied()
    }

    pub fn mask(&self) -> &FixedBitSet {
        &self.mask
    }

    pub fn is_subset(&self, other: &ElemSet) -> bool {
        self.mask.is_subset(&other.mask)
    }

    pub fn intersection(&self, other: &ElemSet) -> ElemSet {
        let mut mask = self.mask.clone();
        mask.intersect_with(&other.mask);
        Self::from_mask(mask)
    }

    pub fn union(&self, other: &ElemSet) -> ElemSet {
        let mut mask = self.mask.clone();
        mask.union_with(&other.mask);
        Self::from_mask(mask)
    }

    /// First element of `self` (in canonical order) that also lies in `other`.
    pub fn first_common(&self, other: &ElemSet) -> Option<Elem> {
        self.elems.iter().copied().find(|&x| other.contains(x))
    }

    pub fn min(&self) -> Option<Elem> {
        self.elems.first().copied()
    }
}

impl std::fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.elems.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn membership_and_order() {
        let s = ElemSet::from_iter_in(10, [7, 2, 2, 5]);
        assert_eq!(s.elems(), &[2, 5, 7]);
        assert!(s.contains(5));
        assert!(!s.contains(6));
        let t = ElemSet::from_iter_in(10, [5, 7, 9]);
        assert_eq!(s.intersection(&t).elems(), &[5, 7]);
        assert_eq!(s.union(&t).elems(), &[2, 5, 7, 9]);
        assert_eq!(s.first_common(&t), Some(5));
        assert!(!s.is_subset(&t));
        assert!(ElemSet::empty(10).is_subset(&t));
        assert_eq!(ElemSet::full(4).elems(), &[0, 1, 2, 3]);
    }
}
