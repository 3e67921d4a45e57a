use std::cmp::Ordering;
use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use fixedbitset::FixedBitSet;

use crate::group::Elem;

/// A subgroup of some ambient group, identified by its sorted element ids.
///
/// Equality, hashing and ordering look only at the element set, so two
/// subgroups built from different generators compare equal.
#[derive(Clone)]
pub struct Subgroup {
    elements: Vec<Elem>,
    members: FixedBitSet,
    gens: Vec<Elem>,
}

impl Subgroup {
    pub(crate) fn trivial(ambient_order: usize) -> Self {
        let mut members = FixedBitSet::with_capacity(ambient_order);
        members.insert(0);
        Subgroup {
            elements: vec![0],
            members,
            gens: Vec::new(),
        }
    }

    pub(crate) fn from_sorted(elements: Vec<Elem>, members: FixedBitSet, gens: Vec<Elem>) -> Self {
        Subgroup {
            elements,
            members,
            gens,
        }
    }

    pub(crate) fn from_parts(elements: Vec<Elem>, ambient_order: usize, gens: Vec<Elem>) -> Self {
        let mut members = FixedBitSet::with_capacity(ambient_order);
        for &x in &elements {
            members.insert(x as usize);
        }
        Subgroup {
            elements,
            members,
            gens,
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    #[inline]
    pub fn contains(&self, x: Elem) -> bool {
        self.members.contains(x as usize)
    }

    pub fn elements(&self) -> &[Elem] {
        &self.elements
    }

    pub fn generators(&self) -> &[Elem] {
        &self.gens
    }

    pub(crate) fn members(&self) -> &FixedBitSet {
        &self.members
    }

    pub fn is_subset(&self, other: &Subgroup) -> bool {
        self.order() <= other.order() && self.members.is_subset(&other.members)
    }

    /// Stable hash of the sorted element ids.
    pub fn canonical_hash(&self) -> u64 {
        let mut h = DefaultHasher::new();
        self.elements.hash(&mut h);
        h.finish()
    }

    /// Orders subgroups by `(order, canonical hash)`, breaking hash ties on the elements.
    pub fn canonical_cmp(&self, other: &Subgroup) -> Ordering {
        self.order()
            .cmp(&other.order())
            .then_with(|| self.canonical_hash().cmp(&other.canonical_hash()))
            .then_with(|| self.elements.cmp(&other.elements))
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.elements.hash(state);
    }
}

impl std::fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subgroup(order {}, gens {:?})", self.order(), self.gens)
    }
}
