//! One function per acceptance criterion. Each returns a one-line summary on
//! success and a description of the first mismatches on failure.

use std::collections::{BTreeSet, HashSet};

use gpi_core::bsgs::StabilizerChain;
use gpi_core::harness::catalog::lookup;
use gpi_core::harness::corpus::{run_corpus, CorpusConfig};
use gpi_core::harness::verify::{Verifier, VerifyOptions};
use gpi_core::pi::{check_series, factor_condition, PiChecker, PiVerdict};
use gpi_core::recognize::recognize_small;
use gpi_core::series::{
    hypercenter, is_p_soluble, is_p_supersoluble, minimal_normal_subgroups, normal_subgroups, p_length, socle,
    ChiefSeries, TieOrder,
};
use gpi_core::structure::{centre, fitting};
use gpi_core::sylow::{
    all_subgroups, cyclic_order4_subgroups, cyclic_subgroups_of_order, sylow_subgroup, two_maximal_subgroups,
    two_minimal_subgroups,
};
use gpi_core::{restrict, Group, Limits, Perm, Subgroup};

use super::inheritance::{quotient_inheritance, series_through_normal, subgroup_inheritance, suite_groups};
use super::{catalog_groups, is_prime_power, primes_of, to_subgroup, Brute, SeriesOracle, Set};

pub type Check = Result<String, String>;

fn group(name: &str) -> Group {
    lookup(name).unwrap().build(&Limits::default()).unwrap()
}

fn set_of(s: &Subgroup) -> Set {
    s.elements().to_vec()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn five_number(n: u64) -> bool {
    primes_of(n).iter().all(|&q| q == 5)
}

/// Order-25 subgroups of the order-1875 example, enumerated from elements.
pub fn order_25_oracle(b: &Brute) -> BTreeSet<Set> {
    let mut out = BTreeSet::new();
    let fives: Vec<u32> = (0..b.n as u32).filter(|&x| b.order_of(x) == 5).collect();
    for x in 0..b.n as u32 {
        if b.order_of(x) == 25 {
            out.insert(b.closure(&[x]));
        }
    }
    for (i, &x) in fives.iter().enumerate() {
        let cx = b.closure(&[x]);
        for &y in &fives[i + 1..] {
            if b.m(x, y) == b.m(y, x) && cx.binary_search(&y).is_err() {
                out.insert(b.closure(&[x, y]));
            }
        }
    }
    out
}

pub fn criterion1() -> Check {
    let g = group("Example1875");
    ensure(g.order() == 1875, || format!("order {}", g.order()))?;
    let b = Brute::new(&g);
    let oracle = order_25_oracle(&b);

    let p = sylow_subgroup(&g, 5).map_err(|e| e.to_string())?;
    let local = restrict(&g, &p).map_err(|e| e.to_string())?;
    let library: BTreeSet<Set> = two_minimal_subgroups(&local.group)
        .map_err(|e| e.to_string())?
        .iter()
        .map(|s| set_of(&local.lift(&g, s)))
        .collect();
    ensure(library == oracle, || {
        format!("order-25 enumeration {} vs oracle {}", library.len(), oracle.len())
    })?;

    let minimal = minimal_normal_subgroups(&g).map_err(|e| e.to_string())?;
    let mut checker = PiChecker::new(&g);
    let mut shaped = 0;
    let mut own_shape = 0;
    for s in &oracle {
        let h = to_subgroup(&g, s);
        let witness = match checker.check(&h).map_err(|e| e.to_string())? {
            PiVerdict::Witness(w) => w,
            PiVerdict::Refusal { .. } => return Err(format!("refusal for order-25 subgroup {:?}", &s[..4])),
        };
        if witness.per_factor.iter().any(|f| !five_number(f.normalizer_index)) {
            return Err("witness with a non-5 index".into());
        }
        let t = &witness.series.terms;
        if t.len() == 4 && t[2] == g.join(&h, &t[1]) && g.intersection(&h, &t[1]).is_trivial() {
            own_shape += 1;
        }
        // 1 < K < HK < G with K minimal normal, H ∩ K = 1 and HK normal.
        let series = minimal
            .iter()
            .filter(|k| g.intersection(&h, k).is_trivial())
            .map(|k| (k, g.join(&h, k)))
            .find(|(k, hk)| hk.order() == h.order() * k.order() && g.is_normal(hk) && hk.order() < g.order())
            .map(|(k, hk)| ChiefSeries::from_terms(&g, vec![g.trivial(), k.clone(), hk, g.whole()]));
        let Some(series) = series else {
            return Err("no series of shape 1 < K < HK < G".into());
        };
        series.validate(&g).map_err(|e| format!("1 < K < HK < G is not a chief series: {e}"))?;
        let checks = check_series(&g, &h, &series).map_err(|e| e.to_string())?;
        ensure(checks.iter().all(|f| f.pass && five_number(f.normalizer_index)), || {
            "series 1 < K < HK < G fails".into()
        })?;
        ensure(b.series_ok(s, &series.terms.iter().map(set_of).collect::<Vec<_>>()), || {
            "oracle rejects 1 < K < HK < G".into()
        })?;
        shaped += 1;
    }
    let supersoluble = is_p_supersoluble(&g, 5).map_err(|e| e.to_string())?;
    ensure(!supersoluble, || "group reported 5-supersoluble".into())?;
    Ok(format!(
        "|G| = 1875, {} order-25 subgroups (oracle {}), all witnessed ({own_shape} search witnesses already 1 < K < HK < G), {shaped} pass on 1 < K < HK < G, not 5-supersoluble",
        library.len(),
        oracle.len()
    ))
}

pub fn criterion2() -> Check {
    let g = group("A5");
    let p = sylow_subgroup(&g, 2).map_err(|e| e.to_string())?;
    let verdict = PiChecker::new(&g).check(&p).map_err(|e| e.to_string())?;
    ensure(!verdict.is_witness(), || "Sylow 2-subgroup of A5 has a witness".into())?;
    let f = factor_condition(&g, &p, &g.trivial(), &g.whole()).map_err(|e| e.to_string())?;
    ensure(f.normalizer_index == 5 && !f.pass, || format!("index {}", f.normalizer_index))?;
    let soluble = is_p_soluble(&g, 2).map_err(|e| e.to_string())?;
    ensure(!soluble, || "A5 reported 2-soluble".into())?;
    Ok("A5 Sylow 2-subgroup refused, normalizer index 5, A5 not 2-soluble".into())
}

pub fn criterion3() -> Check {
    let g = group("SL(2,5)");
    let z = centre(&g);
    ensure(z.order() == 2, || format!("centre order {}", z.order()))?;
    let mut checker = PiChecker::new(&g);
    ensure(checker.check(&z).map_err(|e| e.to_string())?.is_witness(), || {
        "centre has no witness".into()
    })?;
    let cyc4 = cyclic_subgroups_of_order(&g, 4);
    for h in &cyc4 {
        ensure(!checker.check(h).map_err(|e| e.to_string())?.is_witness(), || {
            "cyclic order-4 subgroup has a witness".into()
        })?;
        let f = factor_condition(&g, h, &z, &g.whole()).map_err(|e| e.to_string())?;
        ensure(f.normalizer_index == 15 && !f.pass, || {
            format!("top factor index {}", f.normalizer_index)
        })?;
    }
    let report = Verifier::new(&g, "SL(2,5)", VerifyOptions::default())
        .verify_t14(2)
        .map_err(|e| e.to_string())?;
    ensure(report.note.as_deref() == Some("P is Q8") && !report.failing.is_empty(), || {
        format!("Q8 clause not exercised: {:?}", report.note)
    })?;
    Ok(format!(
        "centre witnessed, {} cyclic order-4 subgroups refused at index 15, Q8 clause exercised",
        cyc4.len()
    ))
}

pub fn criterion4() -> Check {
    let base = run_corpus(&CorpusConfig::default());
    ensure(base.errors.is_empty(), || format!("entry errors: {:?}", base.errors))?;
    ensure(base.summary.groups >= 15, || format!("only {} groups", base.summary.groups))?;
    let violations: Vec<String> = base
        .reports
        .iter()
        .filter(|r| r.violation)
        .map(|r| format!("{} {} p={}", r.group, r.theorem, r.prime))
        .collect();
    ensure(violations.is_empty(), || format!("violations: {violations:?}"))?;

    let varied = run_corpus(&CorpusConfig {
        verify: VerifyOptions {
            tie: TieOrder::Reverse,
            exhaustive: false,
            conjugate_sylow: Some(0x5eed),
        },
        ..CorpusConfig::default()
    });
    let keys = |r: &gpi_core::harness::corpus::CorpusReport| r.reports.iter().map(|t| t.verdict_key()).collect::<Vec<_>>();
    ensure(keys(&base) == keys(&varied), || "verdicts change under reversed ties and conjugated Sylow".into())?;
    Ok(format!(
        "{} groups, {} reports, {} hypotheses held, 0 violations, stable under reversed ties and conjugated Sylow",
        base.summary.groups, base.summary.reports, base.summary.hypotheses_held
    ))
}

/// Distinct group elements reached by multiplying generator permutations.
fn enumerate_perms(gens: &[Perm]) -> usize {
    let id = Perm::identity(gens[0].degree());
    let mut seen: HashSet<Perm> = HashSet::from([id.clone()]);
    let mut stack = vec![id];
    while let Some(x) = stack.pop() {
        for s in gens {
            let y = x.compose(s).unwrap();
            if seen.insert(y.clone()) {
                stack.push(y);
            }
        }
    }
    seen.len()
}

pub fn criterion5a() -> Check {
    let groups = catalog_groups(5000);
    for (e, g) in &groups {
        if g.order() == 1 {
            continue;
        }
        let gens: Vec<Perm> = g.generators().iter().map(|&x| g.perm_of(x)).collect();
        let chain = StabilizerChain::new(gens[0].degree(), &gens);
        let counted = enumerate_perms(&gens);
        ensure(chain.order() == counted as u128 && counted == g.order(), || {
            format!("{}: chain {} enumeration {} group {}", e.name, chain.order(), counted, g.order())
        })?;
    }
    Ok(format!("{} groups, chain order = enumeration count", groups.len()))
}

/// Catalog p-groups and the Sylow subgroups of every catalog group, up to `max`.
pub fn p_groups(max: usize) -> Vec<(String, Group)> {
    let mut out = Vec::new();
    for (e, g) in catalog_groups(5000) {
        if g.order() > 1 && g.order() <= max && is_prime_power(g.order()).is_some() {
            out.push((e.name.to_string(), g));
            continue;
        }
        for p in primes_of(g.order() as u64) {
            let s = sylow_subgroup(&g, p).unwrap();
            if s.order() > 1 && s.order() <= max {
                out.push((format!("Syl{p}({})", e.name), restrict(&g, &s).unwrap().group));
            }
        }
    }
    out
}

pub fn criterion5b() -> Check {
    let groups = p_groups(128);
    let mut compared = 0;
    for (name, g) in &groups {
        let p = is_prime_power(g.order()).unwrap() as usize;
        let b = Brute::new(g);
        let subs = b.all_subgroups();
        let by_order = |n: usize| subs.iter().filter(|s| s.len() == n).cloned().collect::<BTreeSet<_>>();
        let sets = |v: Vec<Subgroup>| v.iter().map(set_of).collect::<BTreeSet<_>>();
        if g.order() >= p * p {
            let minimal = sets(two_minimal_subgroups(g).map_err(|e| e.to_string())?);
            ensure(minimal == by_order(p * p), || {
                format!("{name}: {} order-p^2 subgroups vs oracle {}", minimal.len(), by_order(p * p).len())
            })?;
            let maximal = sets(two_maximal_subgroups(g).map_err(|e| e.to_string())?);
            let want = by_order(g.order() / (p * p));
            ensure(maximal == want, || {
                format!("{name}: {} index-p^2 subgroups vs oracle {}", maximal.len(), want.len())
            })?;
            compared += 1;
        }
        if p == 2 {
            let cyc4 = sets(cyclic_order4_subgroups(g).map_err(|e| e.to_string())?);
            let want: BTreeSet<Set> = by_order(4).into_iter().filter(|s| s.iter().any(|&x| b.order_of(x) == 4)).collect();
            ensure(cyc4 == want, || format!("{name}: cyclic order-4 mismatch"))?;
        }
    }
    Ok(format!("{} p-groups, {compared} with |P| >= p^2, all families match", groups.len()))
}

pub struct PiSweep {
    pub groups: usize,
    pub subjects: usize,
    pub refusals: usize,
}

/// Subgroups the pi-checker is compared on: everything for small groups,
/// otherwise the Sylow families for each prime.
fn pi_subjects(g: &Group) -> Vec<Subgroup> {
    if g.order() <= 120 {
        return all_subgroups(g).unwrap();
    }
    let mut out = vec![g.trivial(), g.whole(), centre(g)];
    for p in primes_of(g.order() as u64) {
        let s = sylow_subgroup(g, p).unwrap();
        out.push(s.clone());
        let local = restrict(g, &s).unwrap();
        let lift = |v: Vec<Subgroup>| v.into_iter().map(|x| local.lift(g, &x)).collect::<Vec<_>>();
        if s.order() as u64 >= p * p {
            out.extend(lift(two_minimal_subgroups(&local.group).unwrap()));
            out.extend(lift(two_maximal_subgroups(&local.group).unwrap()));
        }
        if p == 2 {
            out.extend(lift(cyclic_order4_subgroups(&local.group).unwrap()));
        }
        out.extend(cyclic_subgroups_of_order(g, p as u32));
    }
    let mut seen = HashSet::new();
    out.retain(|s| seen.insert(s.clone()));
    out
}

pub fn pi_sweep(max_order: usize) -> Result<PiSweep, String> {
    let groups = catalog_groups(max_order);
    let mut sweep = PiSweep {
        groups: groups.len(),
        subjects: 0,
        refusals: 0,
    };
    for (e, g) in &groups {
        let b = Brute::new(g);
        let oracle = SeriesOracle::new(&b);
        let mut checker = PiChecker::new(g);
        let (mut lib_refusals, mut oracle_refusals) = (0, 0);
        for h in pi_subjects(g) {
            let want = oracle.verdict(&set_of(&h));
            let got = checker.check(&h).map_err(|e| e.to_string())?;
            match &got {
                PiVerdict::Witness(w) => {
                    let terms: Vec<Set> = w.series.terms.iter().map(set_of).collect();
                    ensure(oracle.chains.iter().any(|c| c.iter().map(|&i| &oracle.normals[i]).eq(terms.iter())), || {
                        format!("{}: witness is not a chief series", e.name)
                    })?;
                    ensure(b.series_ok(&set_of(&h), &terms), || format!("{}: witness fails the oracle", e.name))?;
                }
                PiVerdict::Refusal { explored } => {
                    lib_refusals += 1;
                    ensure(explored.len() == want.reachable, || {
                        format!(
                            "{}: |H|={} explored {} states, oracle reaches {}",
                            e.name,
                            h.order(),
                            explored.len(),
                            want.reachable
                        )
                    })?;
                }
            }
            if !want.witness {
                oracle_refusals += 1;
            }
            ensure(got.is_witness() == want.witness, || {
                format!("{}: |H|={} checker {} oracle {}", e.name, h.order(), got.is_witness(), want.witness)
            })?;
            sweep.subjects += 1;
        }
        ensure(lib_refusals == oracle_refusals, || {
            format!("{}: {lib_refusals} refusals vs oracle {oracle_refusals}", e.name)
        })?;
        sweep.refusals += lib_refusals;
    }
    Ok(sweep)
}

pub fn criterion5c() -> Check {
    let s = pi_sweep(2000)?;
    Ok(format!(
        "{} groups, {} subgroups, {} refusals, all match the all-chief-series oracle",
        s.groups, s.subjects, s.refusals
    ))
}

pub fn criterion6() -> Check {
    let groups = suite_groups();
    let mut parts = Vec::new();
    for (label, outcome) in [
        ("quotient", quotient_inheritance(&groups)),
        ("subgroup", subgroup_inheritance(&groups)),
        ("through-normal", series_through_normal(&groups)),
    ] {
        ensure(outcome.cases >= 100, || format!("{label}: only {} cases", outcome.cases))?;
        ensure(outcome.counterexamples.is_empty(), || {
            format!("{label}: {:?}", &outcome.counterexamples[..outcome.counterexamples.len().min(5)])
        })?;
        parts.push(format!("{label} {}", outcome.cases));
    }
    Ok(format!("cases: {}, no counterexamples", parts.join(", ")))
}

pub fn criterion7() -> Check {
    let s4 = group("S4");
    let sl23 = group("SL(2,3)");
    let (b4, b23) = (Brute::new(&s4), Brute::new(&sl23));
    let err = |e: gpi_core::GpiError| e.to_string();

    let l = p_length(&s4, 2).map_err(err)?;
    ensure(l == 2 && b4.p_length(2) == 2, || format!("p_length(S4,2) = {l}, oracle {}", b4.p_length(2)))?;
    let l = p_length(&sl23, 2).map_err(err)?;
    ensure(l == 1 && b23.p_length(2) == 1, || format!("p_length(SL(2,3),2) = {l}, oracle {}", b23.p_length(2)))?;

    let z = hypercenter(&sl23);
    ensure(z.order() == 2 && set_of(&z) == b23.hypercenter(), || format!("hypercenter order {}", z.order()))?;

    let v4 = b4.normal_subgroups().into_iter().find(|s| s.len() == 4).unwrap();
    let f = fitting(&s4);
    ensure(set_of(&f) == v4 && b4.fitting() == v4, || format!("fitting order {}", f.order()))?;
    let so = socle(&s4).map_err(err)?;
    ensure(set_of(&so) == v4 && b4.socle() == v4, || format!("socle order {}", so.order()))?;
    Ok("p_length(S4,2)=2, p_length(SL(2,3),2)=1, |Z*(SL(2,3))|=2, F(S4)=Soc(S4)=V4".into())
}

pub fn criterion8() -> Check {
    let groups: Vec<(String, Group)> = p_groups(64)
        .into_iter()
        .filter(|(_, g)| g.order() % 2 == 0 && !g.is_abelian())
        .collect();
    let mut unique = 0;
    for (name, g) in &groups {
        let b = Brute::new(g);
        let oracle = b.normal_subgroups().iter().filter(|s| s.len() * 4 == g.order()).count();
        let library = normal_subgroups(g).iter().filter(|s| s.order() * 4 == g.order()).count();
        ensure(oracle == library, || format!("{name}: {library} index-4 normal subgroups, oracle {oracle}"))?;
        let f = recognize_small(g).map_err(|e| e.to_string())?;
        ensure((oracle == 1) == f.is_maximal_class_two_group(), || {
            format!("{name}: {oracle} index-4 normal subgroups, maximal class {}", f.is_maximal_class_two_group())
        })?;
        unique += usize::from(oracle == 1);
    }
    Ok(format!(
        "{} non-abelian 2-groups, {unique} with a unique normal index-4 subgroup, all recognized",
        groups.len()
    ))
}
