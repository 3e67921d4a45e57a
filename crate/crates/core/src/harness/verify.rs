//! Hypothesis/conclusion checks for each theorem on one concrete group.

use std::collections::HashMap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::construct::restrict;
use crate::error::{GpiError, Result};
use crate::formation::{f_hypercenter_with, Formation};
use crate::group::Group;
use crate::pi::{PiChecker, TermRecord};
use crate::primes::{is_power_of, p_part, require_prime};
use crate::recognize::recognize_small;
use crate::series::{hypercenter, is_p_soluble, normal_subgroups, p_length, TieOrder};
use crate::structure::{centralizer, o_upper, Residual};
use crate::subgroup::Subgroup;
use crate::sylow::{
    cyclic_order4_subgroups, cyclic_subgroups_of_order, is_quaternion_free, maximal_subgroups_p_group,
    sylow_subgroup, two_maximal_subgroups, two_minimal_subgroups,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum TheoremId {
    #[serde(rename = "T1.1")]
    T11,
    #[serde(rename = "T1.2")]
    T12,
    #[serde(rename = "T1.3")]
    T13,
    #[serde(rename = "T1.4")]
    T14,
    #[serde(rename = "CLS4.4")]
    Cls,
    #[serde(rename = "L2.8")]
    L28,
    #[serde(rename = "L2.14")]
    L214,
}

impl TheoremId {
    pub const ALL: [TheoremId; 7] = [
        TheoremId::T11,
        TheoremId::T12,
        TheoremId::T13,
        TheoremId::T14,
        TheoremId::Cls,
        TheoremId::L28,
        TheoremId::L214,
    ];

    pub fn parse(s: &str) -> Option<TheoremId> {
        match s.to_ascii_lowercase().as_str() {
            "t11" | "t1.1" => Some(TheoremId::T11),
            "t12" | "t1.2" => Some(TheoremId::T12),
            "t13" | "t1.3" => Some(TheoremId::T13),
            "t14" | "t1.4" => Some(TheoremId::T14),
            "cls" | "cls4.4" => Some(TheoremId::Cls),
            "l28" | "l2.8" => Some(TheoremId::L28),
            "l214" | "l2.14" => Some(TheoremId::L214),
            _ => None,
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TheoremId::T11 => "T1.1",
            TheoremId::T12 => "T1.2",
            TheoremId::T13 => "T1.3",
            TheoremId::T14 => "T1.4",
            TheoremId::Cls => "CLS4.4",
            TheoremId::L28 => "L2.8",
            TheoremId::L214 => "L2.14",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Holds,
    Fails,
    NotEvaluated,
}

impl Status {
    fn of(b: bool) -> Status {
        if b {
            Status::Holds
        } else {
            Status::Fails
        }
    }
}

/// The normal subgroup (or normal p-subgroup) a report is about, identified
/// by its position in the sorted normal-subgroup lattice.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Subject {
    pub lattice_index: usize,
    pub order: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct TheoremReport {
    pub theorem: TheoremId,
    pub group: String,
    pub prime: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subject: Option<Subject>,
    pub hypothesis: Status,
    /// Subgroups without a witness that made the hypothesis fail.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub failing: Vec<TermRecord>,
    pub conclusion: Status,
    /// Which outcome of a disjunctive conclusion applied.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub branch: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    /// Hypothesis holds and conclusion fails. For the two-sided statement
    /// L2.14 it flags any disagreement between the two sides.
    pub violation: bool,
}

impl TheoremReport {
    fn new(theorem: TheoremId, group: &str, prime: u64) -> Self {
        TheoremReport {
            theorem,
            group: group.to_string(),
            prime,
            subject: None,
            hypothesis: Status::NotEvaluated,
            failing: Vec::new(),
            conclusion: Status::NotEvaluated,
            branch: None,
            note: None,
            violation: false,
        }
    }

    fn finish(mut self) -> Self {
        self.violation = self.hypothesis == Status::Holds && self.conclusion == Status::Fails;
        self
    }

    fn resource(mut self, e: GpiError) -> Self {
        self.note = Some(e.to_string());
        self.finish()
    }

    /// Everything but the failing-subgroup evidence, for comparing runs.
    pub fn verdict_key(&self) -> (TheoremId, String, u64, Option<Subject>, Status, Status) {
        (
            self.theorem,
            self.group.clone(),
            self.prime,
            self.subject.clone(),
            self.hypothesis,
            self.conclusion,
        )
    }
}

#[derive(Debug, Clone, Default)]
pub struct VerifyOptions {
    pub tie: TieOrder,
    /// Record every failing subgroup instead of stopping at the first.
    pub exhaustive: bool,
    /// Replace each Sylow subgroup by a conjugate chosen with this seed.
    pub conjugate_sylow: Option<u64>,
}

/// Runs the verifiers on one group, sharing Sylow subgroups and witness
/// verdicts across theorems.
pub struct Verifier<'g> {
    g: &'g Group,
    name: String,
    opts: VerifyOptions,
    checker: PiChecker<'g>,
    verdicts: HashMap<Subgroup, bool>,
    sylows: HashMap<(Subgroup, u64), Subgroup>,
    hypercentres: HashMap<u64, Subgroup>,
    rng: Option<ChaCha8Rng>,
}

impl<'g> Verifier<'g> {
    pub fn new(g: &'g Group, name: &str, opts: VerifyOptions) -> Self {
        Verifier {
            g,
            name: name.to_string(),
            checker: PiChecker::new(g).tie_order(opts.tie),
            rng: opts.conjugate_sylow.map(ChaCha8Rng::seed_from_u64),
            opts,
            verdicts: HashMap::new(),
            sylows: HashMap::new(),
            hypercentres: HashMap::new(),
        }
    }

    pub fn group(&self) -> &'g Group {
        self.g
    }

    fn has_witness(&mut self, h: &Subgroup) -> Result<bool> {
        if let Some(&v) = self.verdicts.get(h) {
            return Ok(v);
        }
        let v = self.checker.check(h)?.is_witness();
        self.verdicts.insert(h.clone(), v);
        Ok(v)
    }

    /// Sylow p-subgroup of `e`, conjugated by a random element of `e` when
    /// requested.
    pub fn sylow(&mut self, e: &Subgroup, p: u64) -> Result<Subgroup> {
        if let Some(s) = self.sylows.get(&(e.clone(), p)) {
            return Ok(s.clone());
        }
        let local = restrict(self.g, e)?;
        let mut s = local.lift(self.g, &sylow_subgroup(&local.group, p)?);
        if let Some(rng) = &mut self.rng {
            let x = e.elements()[rng.gen_range(0..e.order())];
            s = self.g.conjugate_subgroup(&s, x);
        }
        self.sylows.insert((e.clone(), p), s.clone());
        Ok(s)
    }

    fn u_p_hypercentre(&mut self, p: u64) -> Result<Subgroup> {
        if let Some(z) = self.hypercentres.get(&p) {
            return Ok(z.clone());
        }
        let z = f_hypercenter_with(self.g, Formation::PSupersoluble(p), self.opts.tie)?;
        self.hypercentres.insert(p, z.clone());
        Ok(z)
    }

    /// Checks that every listed subgroup of `p` (given inside the standalone
    /// group of `p`) has a witness in G.
    fn all_have_witnesses(
        &mut self,
        p: &Subgroup,
        family: impl FnOnce(&Group) -> Result<Vec<Subgroup>>,
        failing: &mut Vec<TermRecord>,
    ) -> Result<bool> {
        let local = restrict(self.g, p)?;
        let mut ok = true;
        for s in family(&local.group)? {
            let h = local.lift(self.g, &s);
            if !self.has_witness(&h)? {
                ok = false;
                failing.push(TermRecord::new(self.g, &h));
                if !self.opts.exhaustive {
                    break;
                }
            }
        }
        Ok(ok)
    }

    fn subject(&self, e: &Subgroup) -> Subject {
        let lattice_index = normal_subgroups(self.g)
            .iter()
            .position(|n| n == e)
            .expect("subject is a normal subgroup");
        Subject {
            lattice_index,
            order: e.order(),
        }
    }

    fn p_soluble_length_one(&self, p: u64) -> Result<bool> {
        Ok(is_p_soluble(self.g, p)? && p_length(self.g, p)? <= 1)
    }

    fn run(
        &mut self,
        mut report: TheoremReport,
        body: impl FnOnce(&mut Self, &mut TheoremReport) -> Result<()>,
    ) -> Result<TheoremReport> {
        match body(self, &mut report) {
            Ok(()) => Ok(report.finish()),
            Err(e) if e.is_resource() => Ok(report.resource(e)),
            Err(e) => Err(e),
        }
    }

    fn require_normal(&self, e: &Subgroup) -> Result<()> {
        if self.g.is_normal(e) {
            Ok(())
        } else {
            Err(GpiError::NotNormal)
        }
    }

    /// Every maximal subgroup of a Sylow p-subgroup P of E has a witness ⇒
    /// E ≤ Z_{U_p}(G) or |E|_p = p.
    pub fn verify_t11(&mut self, e: &Subgroup, p: u64) -> Result<TheoremReport> {
        require_prime(p)?;
        self.require_normal(e)?;
        let mut report = TheoremReport::new(TheoremId::T11, &self.name, p);
        report.subject = Some(self.subject(e));
        self.run(report, |v, r| {
            let sylow = v.sylow(e, p)?;
            let held = if sylow.is_trivial() {
                true
            } else {
                v.all_have_witnesses(&sylow, maximal_subgroups_p_group, &mut r.failing)?
            };
            r.hypothesis = Status::of(held);
            if p_part(e.order() as u64, p) == p {
                r.branch = Some("|E|_p = p".into());
                r.conclusion = Status::Holds;
            } else {
                let z = v.u_p_hypercentre(p)?;
                let inside = e.is_subset(&z);
                if inside {
                    r.branch = Some("E <= Z_U_p(G)".into());
                }
                r.conclusion = Status::of(inside);
            }
            Ok(())
        })
    }

    /// Every order-p subgroup of P (and every cyclic order-4 subgroup when P
    /// is a 2-group that is not quaternion-free) has a witness ⇒
    /// E ≤ Z_{U_p}(G).
    pub fn verify_t12(&mut self, e: &Subgroup, p: u64) -> Result<TheoremReport> {
        require_prime(p)?;
        self.require_normal(e)?;
        let mut report = TheoremReport::new(TheoremId::T12, &self.name, p);
        report.subject = Some(self.subject(e));
        self.run(report, |v, r| {
            let sylow = v.sylow(e, p)?;
            let mut held = v.all_have_witnesses(&sylow, |pg| Ok(cyclic_subgroups_of_order(pg, p as u32)), &mut r.failing)?;
            if p == 2 && (held || v.opts.exhaustive) && sylow.order() >= 8 {
                let local = restrict(v.g, &sylow)?;
                if !is_quaternion_free(&local.group)? {
                    r.note = Some("P is not quaternion-free".into());
                    held &= v.all_have_witnesses(&sylow, cyclic_order4_subgroups, &mut r.failing)?;
                }
            }
            r.hypothesis = Status::of(held);
            let z = v.u_p_hypercentre(p)?;
            r.conclusion = Status::of(e.is_subset(&z));
            Ok(())
        })
    }

    /// |P| ≥ p² and every order-p² subgroup of P has a witness ⇒ G is
    /// p-soluble of p-length at most 1.
    pub fn verify_t13(&mut self, p: u64) -> Result<TheoremReport> {
        require_prime(p)?;
        let report = TheoremReport::new(TheoremId::T13, &self.name, p);
        let whole = self.g.whole();
        self.run(report, |v, r| {
            let sylow = v.sylow(&whole, p)?;
            let held = if (sylow.order() as u64) < p * p {
                r.note = Some("|P| < p^2".into());
                false
            } else {
                v.all_have_witnesses(&sylow, two_minimal_subgroups, &mut r.failing)?
            };
            r.hypothesis = Status::of(held);
            r.conclusion = Status::of(v.p_soluble_length_one(p)?);
            Ok(())
        })
    }

    /// |P| ≥ p³, every index-p² subgroup of P has a witness, and for P ≅ Q8
    /// every cyclic order-4 subgroup has one ⇒ p-soluble of p-length ≤ 1.
    pub fn verify_t14(&mut self, p: u64) -> Result<TheoremReport> {
        require_prime(p)?;
        let report = TheoremReport::new(TheoremId::T14, &self.name, p);
        let whole = self.g.whole();
        self.run(report, |v, r| {
            let sylow = v.sylow(&whole, p)?;
            let held = if (sylow.order() as u64) < p * p * p {
                r.note = Some("|P| < p^3".into());
                false
            } else {
                let mut held = v.all_have_witnesses(&sylow, two_maximal_subgroups, &mut r.failing)?;
                if p == 2 && sylow.order() == 8 && (held || v.opts.exhaustive) {
                    let local = restrict(v.g, &sylow)?;
                    if recognize_small(&local.group)?.is_q8() {
                        r.note = Some("P is Q8".into());
                        held &= v.all_have_witnesses(&sylow, cyclic_order4_subgroups, &mut r.failing)?;
                    }
                }
                held
            };
            r.hypothesis = Status::of(held);
            r.conclusion = Status::of(v.p_soluble_length_one(p)?);
            Ok(())
        })
    }

    /// Every index-p² subgroup of P has a witness ⇒ G is p-soluble, or
    /// |P| = p², or p = 2 and P ≅ Q8.
    pub fn verify_cls(&mut self, p: u64) -> Result<TheoremReport> {
        require_prime(p)?;
        let report = TheoremReport::new(TheoremId::Cls, &self.name, p);
        let whole = self.g.whole();
        self.run(report, |v, r| {
            let sylow = v.sylow(&whole, p)?;
            let held = if (sylow.order() as u64) < p * p {
                r.note = Some("|P| < p^2".into());
                false
            } else {
                v.all_have_witnesses(&sylow, two_maximal_subgroups, &mut r.failing)?
            };
            r.hypothesis = Status::of(held);
            let branch = if is_p_soluble(v.g, p)? {
                Some("p-soluble")
            } else if sylow.order() as u64 == p * p {
                Some("|P| = p^2")
            } else if p == 2 && sylow.order() == 8 && recognize_small(&restrict(v.g, &sylow)?.group)?.is_q8() {
                Some("P is Q8")
            } else {
                None
            };
            r.branch = branch.map(String::from);
            r.conclusion = Status::of(branch.is_some());
            Ok(())
        })
    }

    /// A Sylow p-subgroup with a witness forces p-solubility.
    pub fn verify_l28(&mut self, p: u64) -> Result<TheoremReport> {
        require_prime(p)?;
        let report = TheoremReport::new(TheoremId::L28, &self.name, p);
        let whole = self.g.whole();
        self.run(report, |v, r| {
            let sylow = v.sylow(&whole, p)?;
            let held = v.has_witness(&sylow)?;
            if !held {
                r.failing.push(TermRecord::new(v.g, &sylow));
            }
            r.hypothesis = Status::of(held);
            r.conclusion = Status::of(is_p_soluble(v.g, p)?);
            Ok(())
        })
    }

    /// For a normal p-subgroup P: P ≤ Z∞(G) exactly when O^p(G) ≤ C_G(P).
    /// The hypothesis field holds the left side, the conclusion the right.
    pub fn verify_l214(&mut self, pn: &Subgroup) -> Result<TheoremReport> {
        self.require_normal(pn)?;
        let p = crate::primes::prime_power_base(pn.order() as u64)
            .ok_or_else(|| GpiError::NotPGroup(format!("subgroup of order {}", pn.order())))?;
        let mut report = TheoremReport::new(TheoremId::L214, &self.name, p);
        report.subject = Some(self.subject(pn));
        self.run(report, |v, r| {
            let left = pn.is_subset(&hypercenter(v.g));
            let op = o_upper(v.g, Residual::P, p)?;
            let right = op.is_subset(&centralizer(v.g, pn));
            r.hypothesis = Status::of(left);
            r.conclusion = Status::of(right);
            Ok(())
        })
        .map(|mut rep| {
            rep.violation = rep.hypothesis != Status::NotEvaluated
                && rep.conclusion != Status::NotEvaluated
                && rep.hypothesis != rep.conclusion;
            rep
        })
    }

    /// Every verifier over every normal subgroup (T1.1, T1.2) and every
    /// nontrivial normal p-subgroup (L2.14), for prime `p`.
    pub fn verify_all(&mut self, p: u64, theorems: &[TheoremId]) -> Result<Vec<TheoremReport>> {
        let mut out = Vec::new();
        let normals: Vec<Subgroup> = normal_subgroups(self.g).to_vec();
        for &t in theorems {
            match t {
                TheoremId::T11 | TheoremId::T12 => {
                    for e in &normals {
                        out.push(if t == TheoremId::T11 {
                            self.verify_t11(e, p)?
                        } else {
                            self.verify_t12(e, p)?
                        });
                    }
                }
                TheoremId::T13 => out.push(self.verify_t13(p)?),
                TheoremId::T14 => out.push(self.verify_t14(p)?),
                TheoremId::Cls => out.push(self.verify_cls(p)?),
                TheoremId::L28 => out.push(self.verify_l28(p)?),
                TheoremId::L214 => {
                    for n in &normals {
                        if n.order() > 1 && is_power_of(n.order() as u64, p) {
                            out.push(self.verify_l214(n)?);
                        }
                    }
                }
            }
        }
        Ok(out)
    }
}
