//! The partial Π-property: `H` has it in `G` when some chief series
//! `1 = G_0 < … < G_n = G` makes every index
//! `|G/G_{i-1} : N(HG_{i-1}/G_{i-1} ∩ G_i/G_{i-1})|` a π-number for the primes
//! of that intersection's order.
//!
//! The index is computed on preimages: with `A = HK ∩ M` for the factor
//! `M/K`, the quotient index equals `|G : N_G(A)|` and the intersection has
//! order `|A|/|K|`. No quotient group is built during the search.

use std::collections::HashSet;

use serde::Serialize;

use crate::construct::restrict;
use crate::error::{GpiError, Result};
use crate::group::{Elem, Group};
use crate::series::{minimal_normal_over, ChiefSeries, MinimalNormalCache, TieOrder};
use crate::subgroup::Subgroup;

pub use crate::primes::{is_pi_number, prime_set, PrimeSet};

/// Outcome of the index condition on one chief factor `M/K`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorCheck {
    /// 1-based position of the factor in its series; 0 when checked alone.
    pub index: usize,
    pub factor_order: u64,
    pub intersection_order: u64,
    pub normalizer_index: u64,
    pub pi: PrimeSet,
    pub pass: bool,
}

fn normalizer_order(g: &Group, a: &Subgroup) -> usize {
    if g.is_normal(a) {
        return g.order();
    }
    g.elements()
        .filter(|&x| a.generators().iter().all(|&y| a.contains(g.conj(y, x))))
        .count()
}

/// The index condition for the factor `m/k`, assuming the chief-factor
/// preconditions hold.
pub(crate) fn factor_check(g: &Group, h: &Subgroup, k: &Subgroup, m: &Subgroup) -> FactorCheck {
    let factor_order = (m.order() / k.order()) as u64;
    let a = if h.is_subset(k) {
        k.clone()
    } else {
        let hk = g.join(h, k);
        g.intersection(&hk, m)
    };
    let intersection_order = (a.order() / k.order()) as u64;
    let normalizer_index = if intersection_order == 1 {
        1
    } else {
        (g.order() / normalizer_order(g, &a)) as u64
    };
    let pi = prime_set(intersection_order).expect("positive order");
    let pass = is_pi_number(normalizer_index, &pi);
    FactorCheck {
        index: 0,
        factor_order,
        intersection_order,
        normalizer_index,
        pi,
        pass,
    }
}

/// Checks the index condition on the chief factor `m/k` of `g`.
pub fn factor_condition(g: &Group, h: &Subgroup, k: &Subgroup, m: &Subgroup) -> Result<FactorCheck> {
    if !h.is_subset(&g.whole()) || h.elements().iter().any(|&x| x as usize >= g.order()) {
        return Err(GpiError::Precondition("H is not a subgroup of G".into()));
    }
    if !g.is_normal(k) {
        return Err(GpiError::Precondition("K is not normal in G".into()));
    }
    if !g.is_normal(m) {
        return Err(GpiError::Precondition("M is not normal in G".into()));
    }
    if !(k.is_subset(m) && k.order() < m.order()) {
        return Err(GpiError::Precondition("K is not a proper subgroup of M".into()));
    }
    if !minimal_normal_over(g, k).contains(m) {
        return Err(GpiError::Precondition("M/K is not minimal normal in G/K".into()));
    }
    Ok(factor_check(g, h, k, m))
}

/// A chief series on which every factor passes the index condition.
#[derive(Debug, Clone)]
pub struct PiWitness {
    pub series: ChiefSeries,
    pub per_factor: Vec<FactorCheck>,
}

#[derive(Debug, Clone)]
pub enum PiVerdict {
    Witness(PiWitness),
    /// No chief series works; `explored` lists every normal subgroup the
    /// search reached, each of which was shown to be a dead end.
    Refusal { explored: Vec<Subgroup> },
}

impl PiVerdict {
    pub fn is_witness(&self) -> bool {
        matches!(self, PiVerdict::Witness(_))
    }

    pub fn witness(&self) -> Option<&PiWitness> {
        match self {
            PiVerdict::Witness(w) => Some(w),
            PiVerdict::Refusal { .. } => None,
        }
    }
}

/// Depth-first search for a witness series, reusable across subgroups of
/// one group.
pub struct PiChecker<'g> {
    g: &'g Group,
    tie: TieOrder,
    through: Option<Subgroup>,
    budget: usize,
    minimal: MinimalNormalCache,
}

impl<'g> PiChecker<'g> {
    pub fn new(g: &'g Group) -> Self {
        PiChecker {
            g,
            tie: TieOrder::Forward,
            through: None,
            budget: g.limits().max_search_states,
            minimal: MinimalNormalCache::default(),
        }
    }

    pub fn tie_order(mut self, tie: TieOrder) -> Self {
        self.tie = tie;
        self
    }

    pub fn budget(mut self, states: usize) -> Self {
        self.budget = states;
        self
    }

    /// Only accept series having `n` as a term.
    pub fn through(mut self, n: Subgroup) -> Result<Self> {
        if !self.g.is_normal(&n) {
            return Err(GpiError::NotNormal);
        }
        self.through = Some(n);
        Ok(self)
    }

    pub fn group(&self) -> &'g Group {
        self.g
    }

    pub fn check(&mut self, h: &Subgroup) -> Result<PiVerdict> {
        let g = self.g;
        if h.elements().last().is_some_and(|&x| x as usize >= g.order()) {
            return Err(GpiError::NotSubgroup);
        }
        let mut failed: HashSet<Subgroup> = HashSet::new();
        let mut explored = 0usize;
        let mut path: Vec<(Subgroup, FactorCheck)> = Vec::new();
        let start = g.trivial();
        if self.search(h, &start, &mut path, &mut failed, &mut explored)? {
            let mut terms = vec![start];
            let mut per_factor = Vec::with_capacity(path.len());
            for (i, (term, mut check)) in path.into_iter().enumerate() {
                check.index = i + 1;
                terms.push(term);
                per_factor.push(check);
            }
            Ok(PiVerdict::Witness(PiWitness {
                series: ChiefSeries::from_terms(g, terms),
                per_factor,
            }))
        } else {
            let mut explored: Vec<Subgroup> = failed.into_iter().collect();
            explored.sort_by(|a, b| a.canonical_cmp(b));
            Ok(PiVerdict::Refusal { explored })
        }
    }

    fn search(
        &mut self,
        h: &Subgroup,
        n: &Subgroup,
        path: &mut Vec<(Subgroup, FactorCheck)>,
        failed: &mut HashSet<Subgroup>,
        explored: &mut usize,
    ) -> Result<bool> {
        let g = self.g;
        if n.order() == g.order() {
            return Ok(true);
        }
        if failed.contains(n) {
            return Ok(false);
        }
        *explored += 1;
        if *explored > self.budget {
            return Err(GpiError::Budget { states: self.budget });
        }
        let mut next = self.minimal.over(g, n).to_vec();
        self.tie.arrange(&mut next);
        if let Some(t) = &self.through {
            if n.is_subset(t) && n.order() < t.order() {
                next.retain(|m| m.is_subset(t));
            }
        }
        for m in next {
            let check = factor_check(g, h, n, &m);
            if !check.pass {
                continue;
            }
            path.push((m.clone(), check));
            if self.search(h, &m, path, failed, explored)? {
                return Ok(true);
            }
            path.pop();
        }
        failed.insert(n.clone());
        Ok(false)
    }
}

pub fn satisfies_partial_pi(g: &Group, h: &Subgroup) -> Result<PiVerdict> {
    PiChecker::new(g).check(h)
}

/// Decides the property for `h` inside the subgroup `n`, treating `n` as a
/// group in its own right. Witness terms are lifted back into `g`.
pub fn satisfies_partial_pi_within(g: &Group, n: &Subgroup, h: &Subgroup) -> Result<PiVerdict> {
    if !h.is_subset(n) {
        return Err(GpiError::Precondition("H is not contained in N".into()));
    }
    let local = restrict(g, n)?;
    let local_h = local.pull(h).ok_or(GpiError::NotSubgroup)?;
    Ok(match satisfies_partial_pi(&local.group, &local_h)? {
        PiVerdict::Witness(w) => PiVerdict::Witness(PiWitness {
            series: ChiefSeries {
                terms: w.series.terms.iter().map(|t| local.lift(g, t)).collect(),
                factors: w.series.factors,
            },
            per_factor: w.per_factor,
        }),
        PiVerdict::Refusal { explored } => PiVerdict::Refusal {
            explored: explored.iter().map(|t| local.lift(g, t)).collect(),
        },
    })
}

/// Recomputes the index condition along a given chief series.
pub fn check_series(g: &Group, h: &Subgroup, series: &ChiefSeries) -> Result<Vec<FactorCheck>> {
    series.validate(g)?;
    Ok(series
        .terms
        .windows(2)
        .enumerate()
        .map(|(i, w)| FactorCheck {
            index: i + 1,
            ..factor_check(g, h, &w[0], &w[1])
        })
        .collect())
}

#[derive(Debug, Clone, Serialize)]
pub struct TermRecord {
    pub order: usize,
    pub generator_ids: Vec<Elem>,
    /// Cycle notation of the generators; present for permutation groups.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<Vec<Vec<usize>>>>,
}

impl TermRecord {
    pub fn new(g: &Group, s: &Subgroup) -> Self {
        TermRecord {
            order: s.order(),
            generator_ids: s.generators().to_vec(),
            generators: g
                .is_perm_backed()
                .then(|| s.generators().iter().map(|&x| g.perm_of(x).cycles()).collect()),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum VerdictRecord {
    Witness {
        series: Vec<TermRecord>,
        factors: Vec<FactorCheck>,
    },
    Refusal {
        explored: usize,
        states: Vec<TermRecord>,
    },
}

impl VerdictRecord {
    pub fn new(g: &Group, v: &PiVerdict) -> Self {
        match v {
            PiVerdict::Witness(w) => VerdictRecord::Witness {
                series: w.series.terms.iter().map(|t| TermRecord::new(g, t)).collect(),
                factors: w.per_factor.clone(),
            },
            PiVerdict::Refusal { explored } => VerdictRecord::Refusal {
                explored: explored.len(),
                states: explored.iter().map(|t| TermRecord::new(g, t)).collect(),
            },
        }
    }
}
