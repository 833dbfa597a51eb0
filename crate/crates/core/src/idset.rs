//! Typed sets of dense identifiers.
//!
//! Every set used by the solvers (assumption sets, extensions, premise sets)
//! is an [`IdSet`] over some identifier newtype. Equality, hashing, and
//! ordering look only at the members, never at the bitset capacity, and the
//! ordering is lexicographic over the sorted member list so that a
//! `BTreeSet` of sets iterates in canonical output order.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::marker::PhantomData;

use fixedbitset::FixedBitSet;

/// A dense identifier usable as an [`IdSet`] member.
pub trait DenseId: Copy + Ord + fmt::Debug {
    fn index(self) -> usize;
    fn from_index(index: usize) -> Self;
}

macro_rules! dense_id {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
        pub struct $name(pub usize);

        impl DenseId for $name {
            #[inline]
            fn index(self) -> usize {
                self.0
            }

            #[inline]
            fn from_index(index: usize) -> Self {
                Self(index)
            }
        }

        impl From<usize> for $name {
            fn from(index: usize) -> Self {
                Self(index)
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}", self.0)
            }
        }
    };
}

dense_id!(
    /// A sentence of an ABA language, numbered densely from zero.
    AtomId
);
dense_id!(
    /// An abstract argument of a (p)BAF, numbered densely from zero.
    ArgId
);
dense_id!(
    /// A premise label of a pBAF.
    PremiseId
);

/// A set of identifiers backed by a bitset.
#[derive(Clone)]
pub struct IdSet<I> {
    bits: FixedBitSet,
    _id: PhantomData<I>,
}

impl<I: DenseId> IdSet<I> {
    pub fn new() -> Self {
        Self::with_capacity(0)
    }

    pub fn with_capacity(capacity: usize) -> Self {
        Self {
            bits: FixedBitSet::with_capacity(capacity),
            _id: PhantomData,
        }
    }

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(n);
        bits.insert_range(..);
        Self::from_bits(bits)
    }

    pub(crate) fn from_bits(bits: FixedBitSet) -> Self {
        Self {
            bits,
            _id: PhantomData,
        }
    }

    pub(crate) fn bits(&self) -> &FixedBitSet {
        &self.bits
    }

    /// Inserts `id`, returning `true` if it was not present.
    pub fn insert(&mut self, id: I) -> bool {
        let i = id.index();
        if i >= self.bits.len() {
            self.bits.grow(i + 1);
        }
        !self.bits.put(i)
    }

    pub fn remove(&mut self, id: I) -> bool {
        let i = id.index();
        if i >= self.bits.len() || !self.bits.contains(i) {
            return false;
        }
        self.bits.set(i, false);
        true
    }

    #[inline]
    pub fn contains(&self, id: I) -> bool {
        self.bits.contains(id.index())
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn iter(&self) -> impl Iterator<Item = I> + '_ {
        self.bits.ones().map(I::from_index)
    }

    pub fn to_vec(&self) -> Vec<I> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn is_superset(&self, other: &Self) -> bool {
        other.is_subset(self)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.bits.is_disjoint(&other.bits)
    }

    pub fn intersects(&self, other: &Self) -> bool {
        !self.is_disjoint(other)
    }

    pub fn union_with(&mut self, other: &Self) {
        self.bits.union_with(&other.bits);
    }

    pub fn intersect_with(&mut self, other: &Self) {
        self.bits.intersect_with(&other.bits);
    }

    pub fn difference_with(&mut self, other: &Self) {
        self.bits.difference_with(&other.bits);
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.union_with(other);
        out
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.intersect_with(other);
        out
    }

    pub fn difference(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.difference_with(other);
        out
    }

    /// Largest member plus one, or zero for the empty set.
    pub fn bound(&self) -> usize {
        self.bits.maximum().map_or(0, |m| m + 1)
    }
}

impl<I> Default for IdSet<I> {
    fn default() -> Self {
        Self {
            bits: FixedBitSet::new(),
            _id: PhantomData,
        }
    }
}

impl<I: DenseId> PartialEq for IdSet<I> {
    fn eq(&self, other: &Self) -> bool {
        self.bits.ones().eq(other.bits.ones())
    }
}

impl<I: DenseId> Eq for IdSet<I> {}

impl<I: DenseId> Hash for IdSet<I> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        for i in self.bits.ones() {
            i.hash(state);
        }
        usize::MAX.hash(state);
    }
}

impl<I: DenseId> Ord for IdSet<I> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.bits.ones().cmp(other.bits.ones())
    }
}

impl<I: DenseId> PartialOrd for IdSet<I> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<I: DenseId> fmt::Debug for IdSet<I> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.bits.ones()).finish()
    }
}

impl<I: DenseId> FromIterator<I> for IdSet<I> {
    fn from_iter<T: IntoIterator<Item = I>>(iter: T) -> Self {
        let mut set = Self::new();
        set.extend(iter);
        set
    }
}

impl<I: DenseId> Extend<I> for IdSet<I> {
    fn extend<T: IntoIterator<Item = I>>(&mut self, iter: T) {
        for id in iter {
            self.insert(id);
        }
    }
}

impl<'a, I: DenseId> IntoIterator for &'a IdSet<I> {
    type Item = I;
    type IntoIter = std::iter::Map<fixedbitset::Ones<'a>, fn(usize) -> I>;

    fn into_iter(self) -> Self::IntoIter {
        self.bits.ones().map(I::from_index as fn(usize) -> I)
    }
}

impl<I: DenseId> serde::Serialize for IdSet<I> {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.bits.ones())
    }
}

impl<'de, I: DenseId> serde::Deserialize<'de> for IdSet<I> {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let members = Vec::<usize>::deserialize(deserializer)?;
        Ok(ids(members))
    }
}

/// Builds an [`IdSet`] from raw indices.
pub fn ids<I: DenseId>(indices: impl IntoIterator<Item = usize>) -> IdSet<I> {
    indices.into_iter().map(I::from_index).collect()
}
