//! Centrality of chief factors with respect to the supersoluble and
//! p-supersoluble formations, and the hypercentre built from them.

use std::fmt;

use serde::Serialize;

use crate::construct::{quotient, restrict, semidirect_product};
use crate::error::{GpiError, Result};
use crate::group::{Elem, Group};
use crate::primes::{is_prime, require_prime};
use crate::series::{is_p_supersoluble, is_supersoluble, minimal_normal_over, TieOrder};
use crate::subgroup::Subgroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Formation {
    Supersoluble,
    PSupersoluble(u64),
}

impl Formation {
    pub fn contains(self, g: &Group) -> Result<bool> {
        match self {
            Formation::Supersoluble => Ok(is_supersoluble(g)),
            Formation::PSupersoluble(p) => is_p_supersoluble(g, p),
        }
    }

    fn validate(self) -> Result<()> {
        match self {
            Formation::Supersoluble => Ok(()),
            Formation::PSupersoluble(p) => require_prime(p),
        }
    }
}

impl fmt::Display for Formation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formation::Supersoluble => write!(f, "U"),
            Formation::PSupersoluble(p) => write!(f, "U_{p}"),
        }
    }
}

fn require_chief_factor(g: &Group, k: &Subgroup, l: &Subgroup) -> Result<()> {
    if !g.is_normal(k) || !g.is_normal(l) {
        return Err(GpiError::Precondition("factor terms are not normal in G".into()));
    }
    if !(k.is_subset(l) && k.order() < l.order()) || !minimal_normal_over(g, k).contains(l) {
        return Err(GpiError::Precondition("L/K is not a chief factor of G".into()));
    }
    Ok(())
}

/// A chief factor is central for the supersoluble formation exactly when it
/// is cyclic, i.e. of prime order.
pub fn is_factor_u_central(g: &Group, k: &Subgroup, l: &Subgroup) -> Result<bool> {
    require_chief_factor(g, k, l)?;
    Ok(is_prime((l.order() / k.order()) as u64))
}

/// Elements acting trivially on `L/K` by conjugation.
pub fn factor_centralizer(g: &Group, k: &Subgroup, l: &Subgroup) -> Subgroup {
    let elems: Vec<Elem> = g
        .elements()
        .filter(|&x| l.generators().iter().all(|&y| k.contains(g.commutator(x, y))))
        .collect();
    g.subgroup_from_closed(elems)
}

/// Builds `(L/K) ⋊ G/C_G(L/K)` with `G` acting by conjugation and tests
/// whether it lies in `formation`.
pub fn is_factor_f_central_literal(g: &Group, k: &Subgroup, l: &Subgroup, formation: Formation) -> Result<bool> {
    formation.validate()?;
    require_chief_factor(g, k, l)?;
    f_central_unchecked(g, k, l, formation)
}

fn f_central_unchecked(g: &Group, k: &Subgroup, l: &Subgroup, formation: Formation) -> Result<bool> {
    let local_l = restrict(g, l)?;
    let local_k = local_l.pull(k).expect("K lies in L");
    let factor = quotient(&local_l.group, &local_k)?;
    // both formations are subgroup-closed and L/K is normal in the product
    if !formation.contains(&factor.group)? {
        return Ok(false);
    }
    let c = factor_centralizer(g, k, l);
    let top = quotient(g, &c)?;
    let product_order = factor.group.order() * top.group.order();
    if product_order > g.limits().max_table {
        return Err(GpiError::TooLarge {
            what: "semidirect product for the centrality test",
            size: product_order as u128,
            limit: g.limits().max_table as u128,
        });
    }

    // factor element → some element of L mapping onto it
    let mut lift = vec![Elem::MAX; factor.group.order()];
    for &x in l.elements() {
        let f = factor.project(local_l.local_elem(x).expect("x lies in L"));
        if lift[f as usize] == Elem::MAX {
            lift[f as usize] = x;
        }
    }
    let mut top_lift = vec![Elem::MAX; top.group.order()];
    for x in g.elements() {
        let t = top.project(x);
        if top_lift[t as usize] == Elem::MAX {
            top_lift[t as usize] = x;
        }
    }
    let to_factor = |x: Elem| factor.project(local_l.local_elem(x).expect("conjugate stays in L"));
    let action: Vec<Vec<Elem>> = top
        .group
        .generators()
        .iter()
        .map(|&t| {
            let x = top_lift[t as usize];
            factor
                .group
                .generators()
                .iter()
                .map(|&f| to_factor(g.conj(lift[f as usize], g.inv(x))))
                .collect()
        })
        .collect();
    let product = semidirect_product(&factor.group, &top.group, &action, g.limits())?;
    formation.contains(&product)
}

/// Greedy ascent: repeatedly move to a minimal normal subgroup over the
/// current term whose factor is central for `formation`.
pub fn f_hypercenter(g: &Group, formation: Formation) -> Result<Subgroup> {
    f_hypercenter_with(g, formation, TieOrder::Forward)
}

pub fn f_hypercenter_with(g: &Group, formation: Formation, tie: TieOrder) -> Result<Subgroup> {
    Ok(f_hypercentral_series(g, formation, tie)?.pop().expect("series starts at 1"))
}

/// The chain of normal subgroups visited by the greedy ascent.
pub fn f_hypercentral_series(g: &Group, formation: Formation, tie: TieOrder) -> Result<Vec<Subgroup>> {
    formation.validate()?;
    let mut terms = vec![g.trivial()];
    'ascend: loop {
        let z = terms.last().unwrap();
        if z.order() == g.order() {
            break;
        }
        let mut next = minimal_normal_over(g, z);
        tie.arrange(&mut next);
        for m in next {
            let central = match formation {
                Formation::Supersoluble => is_prime((m.order() / z.order()) as u64),
                Formation::PSupersoluble(_) => f_central_unchecked(g, z, &m, formation)?,
            };
            if central {
                terms.push(m);
                continue 'ascend;
            }
        }
        break;
    }
    Ok(terms)
}
