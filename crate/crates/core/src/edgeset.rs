use fixedbitset::FixedBitSet;
use serde::{Serialize, Serializer};

/// A set of edge ids, stored as a bitset sized to the edge count of a graph.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct EdgeSet(FixedBitSet);

impl EdgeSet {
    pub fn new(m: usize) -> Self {
        EdgeSet(FixedBitSet::with_capacity(m))
    }

    pub fn full(m: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(m);
        bits.insert_range(..);
        EdgeSet(bits)
    }

    pub fn from_ids<I: IntoIterator<Item = usize>>(m: usize, ids: I) -> Self {
        let mut set = EdgeSet::new(m);
        for e in ids {
            set.insert(e);
        }
        set
    }

    /// Capacity, i.e. the edge count of the owning graph.
    pub fn universe(&self) -> usize {
        self.0.len()
    }

    pub fn insert(&mut self, e: usize) {
        self.0.insert(e);
    }

    pub fn remove(&mut self, e: usize) {
        self.0.set(e, false);
    }

    pub fn toggle(&mut self, e: usize) {
        self.0.toggle(e);
    }

    pub fn contains(&self, e: usize) -> bool {
        self.0.contains(e)
    }

    pub fn len(&self) -> usize {
        self.0.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_clear()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &EdgeSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn is_disjoint(&self, other: &EdgeSet) -> bool {
        self.0.is_disjoint(&other.0)
    }

    pub fn symmetric_difference_with(&mut self, other: &EdgeSet) {
        self.0.symmetric_difference_with(&other.0);
    }

    pub fn union_with(&mut self, other: &EdgeSet) {
        self.0.union_with(&other.0);
    }

    pub fn difference_with(&mut self, other: &EdgeSet) {
        self.0.difference_with(&other.0);
    }

    pub fn complement(&self) -> EdgeSet {
        let mut bits = self.0.clone();
        bits.toggle_range(..);
        EdgeSet(bits)
    }

    /// Number of edges shared with `other`.
    pub fn intersection_count(&self, other: &EdgeSet) -> usize {
        self.0.intersection_count(&other.0)
    }
}

impl std::fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for EdgeSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}
