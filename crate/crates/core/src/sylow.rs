//! Sylow subgroups and the subgroup families of a p-group that the theorem
//! hypotheses quantify over.
//!
//! Family enumerators take the p-group as a standalone [`Group`]; use
//! [`crate::construct::restrict`] and [`Embedded::lift`] to move between a
//! Sylow subgroup and its ambient group.
//!
//! [`Embedded::lift`]: crate::construct::Embedded::lift

use std::collections::HashSet;

use crate::construct::{quotient, restrict};
use crate::error::{GpiError, Result};
use crate::group::{Elem, Group};
use crate::primes::{is_power_of, p_part, prime_power_base, require_prime};
use crate::recognize::recognize_small;
use crate::series::normal_subgroups;
use crate::structure::{frattini_p, normalizer};
use crate::subgroup::Subgroup;

/// Grows `⟨x⟩` for a p-element `x` by p-elements of its normalizer until it
/// reaches the full p-part of `|G|`.
pub fn sylow_subgroup(g: &Group, p: u64) -> Result<Subgroup> {
    require_prime(p)?;
    let target = p_part(g.order() as u64, p) as usize;
    let orders = g.element_orders();
    let is_p_elem = |x: Elem| orders[x as usize] > 1 && is_power_of(orders[x as usize] as u64, p);
    let mut sylow = match g.elements().find(|&x| is_p_elem(x)) {
        Some(x) => g.subgroup_generated(&[x]),
        None => return Ok(g.trivial()),
    };
    while sylow.order() < target {
        let n = normalizer(g, &sylow);
        let y = n
            .elements()
            .iter()
            .copied()
            .find(|&y| is_p_elem(y) && !sylow.contains(y))
            .expect("a non-Sylow p-subgroup has a p-element of its normalizer outside it");
        sylow = g.extend(&sylow, &[y]);
    }
    Ok(sylow)
}

fn p_group_prime(g: &Group) -> Result<u64> {
    prime_power_base(g.order() as u64)
        .ok_or_else(|| GpiError::NotPGroup(format!("group of order {}", g.order())))
}

fn sorted(mut v: Vec<Subgroup>) -> Vec<Subgroup> {
    v.sort_by(|a, b| a.canonical_cmp(b));
    v
}

/// Distinct cyclic subgroups `⟨x⟩` with `|x| = n`.
pub fn cyclic_subgroups_of_order(g: &Group, n: u32) -> Vec<Subgroup> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for x in g.elements() {
        if g.element_order(x) == n {
            let c = g.subgroup_generated(&[x]);
            if seen.insert(c.elements().to_vec()) {
                out.push(c);
            }
        }
    }
    sorted(out)
}

/// All subgroups of order p²: the cyclic ones plus `⟨x, y⟩` for commuting
/// elements of order p with `y ∉ ⟨x⟩`.
pub fn two_minimal_subgroups(g: &Group) -> Result<Vec<Subgroup>> {
    let p = p_group_prime(g)?;
    if (g.order() as u64) < p * p {
        return Err(GpiError::Precondition(format!(
            "group of order {} has no subgroups of order {}",
            g.order(),
            p * p
        )));
    }
    let mut found: HashSet<Subgroup> = HashSet::new();
    for c in cyclic_subgroups_of_order(g, (p * p) as u32) {
        found.insert(c);
    }
    let order_p = cyclic_subgroups_of_order(g, p as u32);
    for (i, a) in order_p.iter().enumerate() {
        let x = a.generators()[0];
        for b in &order_p[i + 1..] {
            let y = b.generators()[0];
            if g.mul(x, y) == g.mul(y, x) {
                found.insert(g.extend(a, &[y]));
            }
        }
    }
    Ok(sorted(found.into_iter().collect()))
}

/// Maximal subgroups of a p-group: preimages of the hyperplanes of the
/// F_p-space `P/Φ(P)`.
pub fn maximal_subgroups_p_group(g: &Group) -> Result<Vec<Subgroup>> {
    let p = p_group_prime(g)? as usize;
    let phi = frattini_p(g)?;

    let mut span = phi.clone();
    let mut basis: Vec<Elem> = Vec::new();
    for x in g.elements() {
        if span.order() == g.order() {
            break;
        }
        if !span.contains(x) {
            span = g.extend(&span, &[x]);
            basis.push(x);
        }
    }
    let d = basis.len();

    // coords[x] = coordinates of xΦ in the basis
    let mut coords: Vec<Vec<usize>> = vec![Vec::new(); g.order()];
    let mut exps = vec![0usize; d];
    loop {
        let rep = exps
            .iter()
            .zip(&basis)
            .fold(g.identity(), |acc, (&e, &b)| g.mul(acc, g.pow(b, e as u64)));
        for &f in phi.elements() {
            coords[g.mul(f, rep) as usize] = exps.clone();
        }
        if !next_vector(&mut exps, p) {
            break;
        }
    }

    let mut out = Vec::new();
    let mut functional = vec![0usize; d];
    while next_vector(&mut functional, p) {
        // one representative per line: first nonzero coefficient is 1
        if functional.iter().find(|&&c| c != 0) != Some(&1) {
            continue;
        }
        let elems: Vec<Elem> = g
            .elements()
            .filter(|&x| {
                coords[x as usize]
                    .iter()
                    .zip(&functional)
                    .map(|(a, b)| a * b)
                    .sum::<usize>()
                    % p
                    == 0
            })
            .collect();
        out.push(g.subgroup_from_closed(elems));
    }
    Ok(sorted(out))
}

/// Increments a base-`p` counter; false after wrapping to zero.
fn next_vector(v: &mut [usize], p: usize) -> bool {
    for c in v.iter_mut() {
        *c += 1;
        if *c < p {
            return true;
        }
        *c = 0;
    }
    false
}

/// Subgroups of index p², as maximal subgroups of maximal subgroups.
pub fn two_maximal_subgroups(g: &Group) -> Result<Vec<Subgroup>> {
    let p = p_group_prime(g)?;
    if (g.order() as u64) < p * p {
        return Err(GpiError::Precondition(format!(
            "group of order {} has no subgroups of index {}",
            g.order(),
            p * p
        )));
    }
    let mut found: HashSet<Subgroup> = HashSet::new();
    for m in maximal_subgroups_p_group(g)? {
        let local = restrict(g, &m)?;
        for mm in maximal_subgroups_p_group(&local.group)? {
            found.insert(local.lift(g, &mm));
        }
    }
    Ok(sorted(found.into_iter().collect()))
}

fn require_two_group(g: &Group) -> Result<()> {
    if is_power_of(g.order() as u64, 2) {
        Ok(())
    } else {
        Err(GpiError::NotPGroup(format!("order {} is not a power of 2", g.order())))
    }
}

pub fn cyclic_order4_subgroups(g: &Group) -> Result<Vec<Subgroup>> {
    require_two_group(g)?;
    Ok(cyclic_subgroups_of_order(g, 4))
}

/// Every subgroup, by closing the cyclic subgroups under joins. Refuses
/// groups above the brute-force bound.
pub fn all_subgroups(g: &Group) -> Result<Vec<Subgroup>> {
    let bound = g.limits().brute_force_bound;
    if g.order() > bound {
        return Err(GpiError::TooLarge {
            what: "group order for subgroup enumeration",
            size: g.order() as u128,
            limit: bound as u128,
        });
    }
    let mut cyclics: Vec<Subgroup> = Vec::new();
    let mut seen: HashSet<Subgroup> = HashSet::new();
    for x in g.elements() {
        let c = g.subgroup_generated(&[x]);
        if seen.insert(c.clone()) {
            cyclics.push(c);
        }
    }
    let mut queue: Vec<Subgroup> = cyclics.clone();
    let mut head = 0;
    while head < queue.len() {
        let h = queue[head].clone();
        head += 1;
        for c in &cyclics {
            if c.is_subset(&h) {
                continue;
            }
            let j = g.join(&h, c);
            if seen.insert(j.clone()) {
                queue.push(j);
            }
        }
    }
    Ok(sorted(queue))
}

/// No section (quotient of a subgroup) is isomorphic to Q8.
pub fn is_quaternion_free(g: &Group) -> Result<bool> {
    require_two_group(g)?;
    let bound = g.limits().brute_force_bound;
    if g.order() > bound {
        return Err(GpiError::TooLarge {
            what: "2-group order for the section scan",
            size: g.order() as u128,
            limit: bound as u128,
        });
    }
    if g.is_abelian() {
        return Ok(true);
    }
    for s in all_subgroups(g)? {
        if s.order() < 8 {
            continue;
        }
        let local = restrict(g, &s)?;
        if local.group.is_abelian() {
            continue;
        }
        for n in normal_subgroups(&local.group) {
            if s.order() / n.order() != 8 {
                continue;
            }
            let q = quotient(&local.group, n)?;
            if recognize_small(&q.group)?.is_q8() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
