use std::collections::BTreeMap;

use serde::Serialize;

use crate::construct::restrict;
use crate::error::{GpiError, Result};
use crate::group::Group;
use crate::primes::is_power_of;
use crate::subgroup::Subgroup;

/// Order, abelian flag, exponent and element-order histogram of a small group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Fingerprint {
    pub order: u64,
    pub abelian: bool,
    pub exponent: u64,
    /// element order → number of elements of that order
    pub histogram: BTreeMap<u32, usize>,
}

impl Fingerprint {
    pub fn involutions(&self) -> usize {
        self.histogram.get(&2).copied().unwrap_or(0)
    }

    pub fn is_two_group(&self) -> bool {
        is_power_of(self.order, 2)
    }

    /// Some element generates a subgroup of index 2.
    pub fn has_cyclic_maximal(&self) -> bool {
        self.order >= 2 && self.histogram.contains_key(&((self.order / 2) as u32))
    }

    pub fn is_cyclic(&self) -> bool {
        self.histogram.contains_key(&(self.order as u32))
    }

    /// Order 8, non-abelian, exactly one involution.
    pub fn is_q8(&self) -> bool {
        self.order == 8 && !self.abelian && self.involutions() == 1
    }

    /// Dihedral 2-group of order at least 8: cyclic maximal subgroup and
    /// `|G|/2 + 1` involutions.
    pub fn is_dihedral(&self) -> bool {
        self.is_two_group()
            && self.order >= 8
            && !self.abelian
            && self.has_cyclic_maximal()
            && self.involutions() as u64 == self.order / 2 + 1
    }

    /// Semidihedral 2-group (order at least 16): cyclic maximal subgroup and
    /// `|G|/4 + 1` involutions.
    pub fn is_semidihedral(&self) -> bool {
        self.is_two_group()
            && self.order >= 16
            && !self.abelian
            && self.has_cyclic_maximal()
            && self.involutions() as u64 == self.order / 4 + 1
    }

    /// Generalized quaternion 2-group: non-abelian, cyclic maximal subgroup,
    /// exactly one involution.
    pub fn is_generalized_quaternion(&self) -> bool {
        self.is_two_group()
            && self.order >= 8
            && !self.abelian
            && self.has_cyclic_maximal()
            && self.involutions() == 1
    }

    pub fn is_maximal_class_two_group(&self) -> bool {
        self.is_dihedral() || self.is_semidihedral() || self.is_generalized_quaternion()
    }
}

pub fn recognize_small(g: &Group) -> Result<Fingerprint> {
    let bound = g.limits().small_bound;
    if g.order() > bound {
        return Err(GpiError::TooLarge {
            what: "group order for recognition",
            size: g.order() as u128,
            limit: bound as u128,
        });
    }
    let mut histogram = BTreeMap::new();
    let mut exponent: u64 = 1;
    for &o in g.element_orders() {
        *histogram.entry(o).or_insert(0) += 1;
        exponent = lcm(exponent, o as u64);
    }
    Ok(Fingerprint {
        order: g.order() as u64,
        abelian: g.is_abelian(),
        exponent,
        histogram,
    })
}

pub fn recognize_subgroup(g: &Group, s: &Subgroup) -> Result<Fingerprint> {
    if s.order() > g.limits().small_bound {
        return Err(GpiError::TooLarge {
            what: "group order for recognition",
            size: s.order() as u128,
            limit: g.limits().small_bound as u128,
        });
    }
    recognize_small(&restrict(g, s)?.group)
}

fn lcm(a: u64, b: u64) -> u64 {
    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}
