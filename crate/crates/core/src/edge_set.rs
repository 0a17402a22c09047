use std::cmp::Ordering;
use std::fmt;

use fixedbitset::FixedBitSet;

/// A set of edge indices of some fixed multigraph with `universe` edges.
///
/// Cycle-space members, 2-factors and perfect matchings are all carried by
/// this type; which one a given set is depends only on its degree profile.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdgeSet {
    bits: FixedBitSet,
}

impl EdgeSet {
    pub fn empty(universe: usize) -> Self {
        EdgeSet {
            bits: FixedBitSet::with_capacity(universe),
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(universe);
        bits.insert_range(..);
        EdgeSet { bits }
    }

    /// Panics if an index is outside the universe.
    pub fn from_indices<I: IntoIterator<Item = usize>>(universe: usize, indices: I) -> Self {
        let mut set = Self::empty(universe);
        for e in indices {
            set.insert(e);
        }
        set
    }

    /// Number of edges of the host graph, not the number of members.
    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn contains(&self, e: usize) -> bool {
        self.bits.contains(e)
    }

    pub fn insert(&mut self, e: usize) {
        self.bits.insert(e);
    }

    pub fn remove(&mut self, e: usize) {
        self.bits.set(e, false);
    }

    pub fn toggle(&mut self, e: usize) {
        self.bits.toggle(e);
    }

    /// In-place symmetric difference (addition over GF(2)).
    pub fn xor_with(&mut self, other: &EdgeSet) {
        debug_assert_eq!(self.universe(), other.universe());
        self.bits.symmetric_difference_with(&other.bits);
    }

    pub fn xor(&self, other: &EdgeSet) -> EdgeSet {
        let mut out = self.clone();
        out.xor_with(other);
        out
    }

    pub fn complement(&self) -> EdgeSet {
        let mut bits = self.bits.clone();
        bits.toggle_range(..);
        EdgeSet { bits }
    }

    /// Members in increasing index order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

/// Lexicographic order on the sorted index sequences; this is the canonical
/// order used for certificates and enumeration output.
impl Ord for EdgeSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter()
            .cmp(other.iter())
            .then_with(|| self.universe().cmp(&other.universe()))
    }
}

impl PartialOrd for EdgeSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn xor_and_complement() {
        let a = EdgeSet::from_indices(6, [0, 1, 2]);
        let b = EdgeSet::from_indices(6, [2, 3]);
        assert_eq!(a.xor(&b).to_vec(), vec![0, 1, 3]);
        assert_eq!(a.complement().to_vec(), vec![3, 4, 5]);
        assert_eq!(EdgeSet::full(4).len(), 4);
        assert!(EdgeSet::empty(4).is_empty());
    }

    #[test]
    fn canonical_order_is_lexicographic() {
        let a = EdgeSet::from_indices(8, [0, 5]);
        let b = EdgeSet::from_indices(8, [1, 2]);
        let c = EdgeSet::from_indices(8, [0, 5, 6]);
        assert!(a < b);
        assert!(a < c);
        assert!(c < b);
    }
}
