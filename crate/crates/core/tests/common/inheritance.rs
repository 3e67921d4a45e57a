//! Metamorphic checks: each suite returns the number of applicable cases
//! and a description of every counterexample.

use gpi_core::construct::quotient;
use gpi_core::pi::{satisfies_partial_pi_within, PiChecker};
use gpi_core::series::normal_subgroups;
use gpi_core::sylow::all_subgroups;
use gpi_core::{Group, Subgroup};

use super::{catalog_groups, is_prime_power};

pub struct Outcome {
    pub cases: usize,
    pub counterexamples: Vec<String>,
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Groups small enough for all-subgroup sweeps.
pub fn suite_groups() -> Vec<(String, Group)> {
    catalog_groups(120)
        .into_iter()
        .map(|(e, g)| (e.name.to_string(), g))
        .collect()
}

fn witnessed(g: &Group) -> Vec<Subgroup> {
    let mut checker = PiChecker::new(g);
    all_subgroups(g)
        .unwrap()
        .into_iter()
        .filter(|h| checker.check(h).unwrap().is_witness())
        .collect()
}

/// Witness for H in G and (N ≤ H or gcd(|H|,|N|) = 1) ⇒ witness for HN/N in G/N.
pub fn quotient_inheritance(groups: &[(String, Group)]) -> Outcome {
    let mut out = Outcome {
        cases: 0,
        counterexamples: Vec::new(),
    };
    for (name, g) in groups {
        let normals: Vec<Subgroup> = normal_subgroups(g).iter().filter(|n| !n.is_trivial()).cloned().collect();
        let hs = witnessed(g);
        for n in &normals {
            let q = quotient(g, n).unwrap();
            let mut checker = PiChecker::new(&q.group);
            for h in &hs {
                if !(n.is_subset(h) || gcd(h.order(), n.order()) == 1) {
                    continue;
                }
                out.cases += 1;
                if !checker.check(&q.image(h)).unwrap().is_witness() {
                    out.counterexamples
                        .push(format!("{name}: |H|={} |N|={}", h.order(), n.order()));
                }
            }
        }
    }
    out
}

/// Witness for a p-subgroup H in G ⇒ witness for H in every N with H ≤ N ≤ G.
pub fn subgroup_inheritance(groups: &[(String, Group)]) -> Outcome {
    let mut out = Outcome {
        cases: 0,
        counterexamples: Vec::new(),
    };
    for (name, g) in groups {
        if g.order() > 60 {
            continue;
        }
        let subs = all_subgroups(g).unwrap();
        for h in witnessed(g) {
            if h.is_trivial() || is_prime_power(h.order()).is_none() {
                continue;
            }
            for n in subs.iter().filter(|n| h.is_subset(n) && n.order() > h.order()) {
                out.cases += 1;
                if !satisfies_partial_pi_within(g, n, &h).unwrap().is_witness() {
                    out.counterexamples
                        .push(format!("{name}: |H|={} |N|={}", h.order(), n.order()));
                }
            }
        }
    }
    out
}

/// Witness for a p-subgroup H inside a normal N ⇒ a witness series passing
/// through N.
pub fn series_through_normal(groups: &[(String, Group)]) -> Outcome {
    let mut out = Outcome {
        cases: 0,
        counterexamples: Vec::new(),
    };
    for (name, g) in groups {
        let normals: Vec<Subgroup> = normal_subgroups(g).to_vec();
        for h in witnessed(g) {
            if h.is_trivial() || is_prime_power(h.order()).is_none() {
                continue;
            }
            for n in normals.iter().filter(|n| h.is_subset(n)) {
                out.cases += 1;
                let verdict = PiChecker::new(g).through(n.clone()).unwrap().check(&h).unwrap();
                let ok = verdict.witness().is_some_and(|w| w.series.terms.contains(n));
                if !ok {
                    out.counterexamples
                        .push(format!("{name}: |H|={} |N|={}", h.order(), n.order()));
                }
            }
        }
    }
    out
}
