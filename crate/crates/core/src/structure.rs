//! Subgroup-relative structure: normalizers, centralizers, closures, and the
//! characteristic subgroups O_p, O_{p'}, O^p, O^{p'}, F and Φ.
//!
//! Normalizers and centralizers scan every element of the ambient group.

use crate::error::{GpiError, Result};
use crate::group::{Elem, Group};
use crate::primes::{is_power_of, prime_power_base, prime_set, require_prime};
use crate::series::normal_subgroups;
use crate::subgroup::Subgroup;

/// Which largest normal subgroup `o_lower` returns.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Core {
    /// O_p: largest normal p-subgroup.
    P,
    /// O_{p'}: largest normal subgroup of order prime to p.
    PPrime,
}

/// Which smallest normal subgroup `o_upper` returns.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Residual {
    /// O^p: smallest normal subgroup with p-group quotient.
    P,
    /// O^{p'}: smallest normal subgroup with quotient of order prime to p.
    PPrime,
}

pub fn normalizer(g: &Group, h: &Subgroup) -> Subgroup {
    let elems: Vec<Elem> = g
        .elements()
        .filter(|&x| h.generators().iter().all(|&y| h.contains(g.conj(y, x))))
        .collect();
    g.subgroup_from_closed(elems)
}

pub fn centralizer(g: &Group, h: &Subgroup) -> Subgroup {
    let elems: Vec<Elem> = g
        .elements()
        .filter(|&x| h.generators().iter().all(|&y| g.mul(x, y) == g.mul(y, x)))
        .collect();
    g.subgroup_from_closed(elems)
}

pub fn centre(g: &Group) -> Subgroup {
    centralizer(g, &g.whole())
}

/// Smallest normal subgroup containing `s`.
pub fn normal_closure(g: &Group, s: &[Elem]) -> Subgroup {
    normal_closure_over(g, &g.trivial(), s)
}

/// Smallest normal subgroup containing the normal subgroup `base` and `extra`.
pub fn normal_closure_over(g: &Group, base: &Subgroup, extra: &[Elem]) -> Subgroup {
    let mut cur = g.extend(base, extra);
    loop {
        let mut grown = false;
        for x in cur.generators().to_vec() {
            for &y in g.generators() {
                let c = g.conj(x, y);
                if !cur.contains(c) {
                    cur = g.extend(&cur, &[c]);
                    grown = true;
                }
            }
        }
        if !grown {
            return cur;
        }
    }
}

pub fn derived_subgroup(g: &Group) -> Subgroup {
    let gens = g.generators();
    let comms: Vec<Elem> = gens
        .iter()
        .enumerate()
        .flat_map(|(i, &a)| gens[i + 1..].iter().map(move |&b| (a, b)))
        .map(|(a, b)| g.commutator(a, b))
        .collect();
    normal_closure(g, &comms)
}

/// O_p(G) or O_{p'}(G), read off the normal-subgroup lattice.
pub fn o_lower(g: &Group, mode: Core, p: u64) -> Result<Subgroup> {
    require_prime(p)?;
    let best = normal_subgroups(g)
        .iter()
        .filter(|n| {
            let order = n.order() as u64;
            match mode {
                Core::P => is_power_of(order, p),
                Core::PPrime => order % p != 0,
            }
        })
        .max_by_key(|n| n.order())
        .expect("the trivial subgroup always qualifies")
        .clone();
    Ok(best)
}

/// O^p(G) (generated by the p'-elements) or O^{p'}(G) (generated by the p-elements).
pub fn o_upper(g: &Group, mode: Residual, p: u64) -> Result<Subgroup> {
    require_prime(p)?;
    let orders = g.element_orders();
    let gens: Vec<Elem> = g
        .elements()
        .filter(|&x| {
            let o = orders[x as usize] as u64;
            match mode {
                Residual::P => o % p != 0,
                Residual::PPrime => is_power_of(o, p),
            }
        })
        .collect();
    Ok(g.subgroup_generated(&gens))
}

/// F(G): the product of the O_q(G) over primes q dividing |G|.
pub fn fitting(g: &Group) -> Subgroup {
    let primes = prime_set(g.order() as u64).expect("group order is positive");
    primes.iter().fold(g.trivial(), |acc, q| {
        let oq = o_lower(g, Core::P, q).expect("q is prime");
        g.join(&acc, &oq)
    })
}

/// Φ(P) = P'P^p for a p-group P.
pub fn frattini_p(g: &Group) -> Result<Subgroup> {
    if g.order() == 1 {
        return Ok(g.trivial());
    }
    let p = prime_power_base(g.order() as u64)
        .ok_or_else(|| GpiError::NotPGroup(format!("group of order {}", g.order())))?;
    let mut gens: Vec<Elem> = g.elements().map(|x| g.pow(x, p)).collect();
    let ggens = g.generators();
    for (i, &a) in ggens.iter().enumerate() {
        for &b in &ggens[i + 1..] {
            gens.push(g.commutator(a, b));
        }
    }
    gens.sort_unstable();
    gens.dedup();
    Ok(normal_closure(g, &gens))
}
