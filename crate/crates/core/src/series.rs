//! The normal-subgroup lattice, chief series, upper p-series and the
//! group-class predicates built on them.
//!
//! p-solubility and the multiset of chief-factor orders do not depend on the
//! chief series chosen (Jordan-Hölder), so one witness series decides the
//! predicates here.

use std::collections::{HashMap, HashSet};

use serde::Serialize;

use crate::construct::quotient;
use crate::error::{GpiError, Result};
use crate::group::Group;
use crate::primes::{is_power_of, p_part, prime_set, require_prime, PrimeSet};
use crate::structure::{centre, normal_closure, normal_closure_over, o_lower, Core};
use crate::subgroup::Subgroup;

/// How ties between equally ranked minimal normal subgroups are broken.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum TieOrder {
    /// Smallest `(order, canonical hash)` first.
    #[default]
    Forward,
    /// Largest first.
    Reverse,
}

impl TieOrder {
    pub fn arrange(self, subs: &mut [Subgroup]) {
        subs.sort_by(|a, b| a.canonical_cmp(b));
        if self == TieOrder::Reverse {
            subs.reverse();
        }
    }
}

/// All normal subgroups of `g`, sorted by `(order, canonical hash)`.
///
/// Every normal subgroup is a join of normal closures of conjugacy classes,
/// so closing the class closures under joins enumerates the lattice.
pub fn normal_subgroups(g: &Group) -> &[Subgroup] {
    g.normal_lattice.get_or_init(|| {
        let mut atoms: Vec<Subgroup> = Vec::new();
        for class in g.classes().classes.iter().skip(1) {
            let c = normal_closure(g, &class[..1]);
            if !atoms.contains(&c) {
                atoms.push(c);
            }
        }
        let mut seen: HashSet<Subgroup> = HashSet::new();
        let trivial = g.trivial();
        seen.insert(trivial.clone());
        let mut queue = vec![trivial];
        let mut head = 0;
        while head < queue.len() {
            let n = queue[head].clone();
            head += 1;
            for a in &atoms {
                if a.is_subset(&n) {
                    continue;
                }
                let j = g.join(&n, a);
                if seen.insert(j.clone()) {
                    queue.push(j);
                }
            }
        }
        let mut all: Vec<Subgroup> = queue;
        all.sort_by(|a, b| a.canonical_cmp(b));
        all
    })
}

/// Normal subgroups `M > N` of `g` with `M/N` minimal normal in `G/N`.
/// `n` must be normal in `g`.
pub fn minimal_normal_over(g: &Group, n: &Subgroup) -> Vec<Subgroup> {
    let classes = g.classes();
    let mut candidates: Vec<Subgroup> = Vec::new();
    for class in &classes.classes {
        let x = class[0];
        if n.contains(x) {
            continue;
        }
        let c = normal_closure_over(g, n, &[x]);
        if !candidates.contains(&c) {
            candidates.push(c);
        }
    }
    let minimal: Vec<Subgroup> = candidates
        .iter()
        .filter(|c| {
            !candidates
                .iter()
                .any(|d| d.order() < c.order() && d.is_subset(c))
        })
        .cloned()
        .collect();
    let mut minimal = minimal;
    minimal.sort_by(|a, b| a.canonical_cmp(b));
    minimal
}

/// Memoized [`minimal_normal_over`] for repeated searches on one group.
#[derive(Default)]
pub struct MinimalNormalCache {
    cache: HashMap<Subgroup, Vec<Subgroup>>,
}

impl MinimalNormalCache {
    pub fn over(&mut self, g: &Group, n: &Subgroup) -> &[Subgroup] {
        self.cache
            .entry(n.clone())
            .or_insert_with(|| minimal_normal_over(g, n))
    }
}

pub fn minimal_normal_subgroups(g: &Group) -> Result<Vec<Subgroup>> {
    if g.order() == 1 {
        return Err(GpiError::Precondition(
            "the trivial group has no minimal normal subgroups".into(),
        ));
    }
    Ok(minimal_normal_over(g, &g.trivial()))
}

/// Metadata for one chief factor `terms[i] / terms[i-1]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorInfo {
    pub order: u64,
    pub primes: PrimeSet,
    pub abelian: bool,
}

impl FactorInfo {
    pub fn is_p_group(&self, p: u64) -> bool {
        is_power_of(self.order, p) && self.order > 1
    }

    pub fn is_p_prime_group(&self, p: u64) -> bool {
        self.order % p != 0
    }
}

/// `1 = G_0 < G_1 < … < G_n = G` with every `G_i` normal in `G` and every
/// `G_i/G_{i-1}` minimal normal in `G/G_{i-1}`.
#[derive(Debug, Clone)]
pub struct ChiefSeries {
    pub terms: Vec<Subgroup>,
    pub factors: Vec<FactorInfo>,
}

pub(crate) fn factor_info(g: &Group, lower: &Subgroup, upper: &Subgroup) -> FactorInfo {
    let order = (upper.order() / lower.order()) as u64;
    let gens = upper.generators();
    let abelian = gens.iter().enumerate().all(|(i, &a)| {
        gens[i + 1..]
            .iter()
            .all(|&b| lower.contains(g.commutator(a, b)))
    });
    FactorInfo {
        order,
        primes: prime_set(order).expect("factor order is positive"),
        abelian,
    }
}

impl ChiefSeries {
    pub fn from_terms(g: &Group, terms: Vec<Subgroup>) -> Self {
        let factors = terms
            .windows(2)
            .map(|w| factor_info(g, &w[0], &w[1]))
            .collect();
        ChiefSeries { terms, factors }
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Checks that the terms run from 1 to G, are normal in G, and that no
    /// normal subgroup of G lies strictly between consecutive terms.
    pub fn validate(&self, g: &Group) -> Result<()> {
        let first = self.terms.first().ok_or_else(|| GpiError::Precondition("empty series".into()))?;
        if !first.is_trivial() {
            return Err(GpiError::Precondition("series does not start at 1".into()));
        }
        if self.terms.last().unwrap().order() != g.order() {
            return Err(GpiError::Precondition("series does not end at G".into()));
        }
        for (i, w) in self.terms.windows(2).enumerate() {
            if !g.is_normal(&w[1]) {
                return Err(GpiError::Precondition(format!("term {} is not normal in G", i + 1)));
            }
            if !(w[0].is_subset(&w[1]) && w[0].order() < w[1].order()) {
                return Err(GpiError::Precondition(format!("terms {i} and {} are not strictly nested", i + 1)));
            }
            if !minimal_normal_over(g, &w[0]).contains(&w[1]) {
                return Err(GpiError::Precondition(format!("factor {} is not a chief factor", i + 1)));
            }
        }
        Ok(())
    }
}

/// Bottom-up chief series taking the first minimal normal subgroup of each
/// quotient in `(order, canonical hash)` order.
pub fn one_chief_series(g: &Group) -> ChiefSeries {
    chief_series_with(g, TieOrder::Forward)
}

pub fn chief_series_with(g: &Group, tie: TieOrder) -> ChiefSeries {
    let mut terms = vec![g.trivial()];
    while terms.last().unwrap().order() < g.order() {
        let mut next = minimal_normal_over(g, terms.last().unwrap());
        tie.arrange(&mut next);
        terms.push(next.swap_remove(0));
    }
    ChiefSeries::from_terms(g, terms)
}

pub fn is_p_soluble(g: &Group, p: u64) -> Result<bool> {
    require_prime(p)?;
    Ok(one_chief_series(g)
        .factors
        .iter()
        .all(|f| f.is_p_group(p) || f.is_p_prime_group(p)))
}

pub fn is_soluble(g: &Group) -> bool {
    one_chief_series(g).factors.iter().all(|f| f.abelian)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum UpperStep {
    /// Quotient is a p'-group.
    PPrime,
    /// Quotient is a p-group.
    P,
}

/// `1 = P_0 ≤ M_0 < P_1 < M_1 < …` alternating largest normal p'- and
/// p-subgroups of successive quotients.
#[derive(Debug, Clone)]
pub struct UpperPSeries {
    pub terms: Vec<Subgroup>,
    /// `steps[i]` describes `terms[i+1] / terms[i]`.
    pub steps: Vec<UpperStep>,
    /// Whether the series reached G (equivalently, G is p-soluble).
    pub reaches_group: bool,
}

impl UpperPSeries {
    pub fn p_length(&self) -> usize {
        self.steps.iter().filter(|s| **s == UpperStep::P).count()
    }
}

/// Preimage in `g` of `O_p` or `O_{p'}` of `G/N`.
fn core_over(g: &Group, n: &Subgroup, mode: Core, p: u64) -> Result<Subgroup> {
    if n.is_trivial() {
        return o_lower(g, mode, p);
    }
    let q = quotient(g, n)?;
    let core = o_lower(&q.group, mode, p)?;
    Ok(q.preimage(g, &core))
}

pub fn upper_p_series(g: &Group, p: u64) -> Result<UpperPSeries> {
    require_prime(p)?;
    let mut terms = vec![g.trivial()];
    let mut steps = Vec::new();
    loop {
        let cur = terms.last().unwrap().clone();
        if cur.order() == g.order() {
            return Ok(UpperPSeries {
                terms,
                steps,
                reaches_group: true,
            });
        }
        let mut progressed = false;
        let next = core_over(g, &cur, Core::PPrime, p)?;
        let cur = if next.order() > cur.order() {
            terms.push(next.clone());
            steps.push(UpperStep::PPrime);
            progressed = true;
            next
        } else {
            cur
        };
        if cur.order() < g.order() {
            let next = core_over(g, &cur, Core::P, p)?;
            if next.order() > cur.order() {
                terms.push(next);
                steps.push(UpperStep::P);
                progressed = true;
            }
        }
        if !progressed {
            return Ok(UpperPSeries {
                terms,
                steps,
                reaches_group: false,
            });
        }
    }
}

pub fn p_length(g: &Group, p: u64) -> Result<usize> {
    let s = upper_p_series(g, p)?;
    if !s.reaches_group {
        return Err(GpiError::Precondition(format!(
            "group is not {p}-soluble; its upper {p}-series stalls"
        )));
    }
    Ok(s.p_length())
}

pub fn is_p_supersoluble(g: &Group, p: u64) -> Result<bool> {
    require_prime(p)?;
    Ok(one_chief_series(g).factors.iter().all(|f| {
        if f.is_p_group(p) {
            f.order == p
        } else {
            f.is_p_prime_group(p)
        }
    }))
}

pub fn is_supersoluble(g: &Group) -> bool {
    one_chief_series(g)
        .factors
        .iter()
        .all(|f| f.primes.len() == 1 && f.primes.iter().next() == Some(f.order))
}

/// A normal p-complement exists: `|G : O_{p'}(G)| = |G|_p`.
pub fn is_p_nilpotent(g: &Group, p: u64) -> Result<bool> {
    let core = o_lower(g, Core::PPrime, p)?;
    Ok((g.order() / core.order()) as u64 == p_part(g.order() as u64, p))
}

/// Limit of the upper central series.
pub fn hypercenter(g: &Group) -> Subgroup {
    let mut z = g.trivial();
    loop {
        let elems: Vec<_> = g
            .elements()
            .filter(|&x| g.generators().iter().all(|&y| z.contains(g.commutator(x, y))))
            .collect();
        if elems.len() == z.order() {
            return z;
        }
        z = g.subgroup_from_closed(elems);
    }
}

/// `Z_{i+1}/Z_i = Z(G/Z_i)` computed literally through quotients.
pub fn hypercenter_via_quotients(g: &Group) -> Result<Subgroup> {
    let mut z = g.trivial();
    loop {
        let next = if z.is_trivial() {
            centre(g)
        } else {
            let q = quotient(g, &z)?;
            q.preimage(g, &centre(&q.group))
        };
        if next.order() == z.order() {
            return Ok(z);
        }
        z = next;
    }
}

pub fn socle(g: &Group) -> Result<Subgroup> {
    let mins = minimal_normal_subgroups(g)?;
    Ok(mins.iter().fold(g.trivial(), |acc, m| g.join(&acc, m)))
}
