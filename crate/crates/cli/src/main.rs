use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand};
use serde_json::json;

use gpi_core::construct::restrict;
use gpi_core::desc::{cycles_to_elem, Cycles, GroupDesc};
use gpi_core::harness::corpus::{run_corpus, CorpusConfig, SCHEMA};
use gpi_core::harness::verify::{Status, TheoremId, TheoremReport, Verifier, VerifyOptions};
use gpi_core::pi::{PiChecker, PiVerdict, TermRecord, VerdictRecord};
use gpi_core::primes::{factorize, is_prime};
use gpi_core::series::{is_p_soluble, is_soluble, is_supersoluble, one_chief_series, p_length, TieOrder};
use gpi_core::structure::{centre, fitting, o_lower, Core};
use gpi_core::sylow::{cyclic_order4_subgroups, sylow_subgroup, two_maximal_subgroups, two_minimal_subgroups};
use gpi_core::{Elem, Group, Limits, Subgroup};

/// `println!` that reports a closed stdout as an error instead of panicking.
macro_rules! outln {
    ($($arg:tt)*) => {
        writeln!(std::io::stdout(), $($arg)*)?
    };
}

const EXIT_VIOLATION: u8 = 1;
const EXIT_ERROR: u8 = 2;

#[derive(Parser)]
#[command(name = "gpi", version, about = "Chief series, Sylow families and the partial Π-property on concrete finite groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Summarize a group: order, solubility, chief factors, Sylow data.
    Info {
        /// Inline JSON description, path to a JSON file, or catalog name.
        group: String,
        #[arg(long)]
        json: bool,
    },
    /// Decide the partial Π-property for a subgroup or a family of subgroups.
    Check {
        #[arg(long)]
        group: String,
        #[arg(long)]
        prime: u64,
        /// JSON list of generator cycle lists, `ids:1,2,3`, or
        /// `family:2min|2max|cyc4|sylow` (subgroups of a Sylow p-subgroup).
        #[arg(long)]
        subgroup: String,
        #[arg(long)]
        json: bool,
        /// Try minimal normal subgroups largest-first.
        #[arg(long)]
        reverse_ties: bool,
    },
    /// Check one theorem's hypothesis and conclusion on a group.
    Theorem {
        /// t11 | t12 | t13 | t14 | cls | l28 | l214
        #[arg(long)]
        id: String,
        #[arg(long)]
        group: String,
        #[arg(long)]
        prime: Option<u64>,
        /// Generators of the normal subgroup E (t11, t12) or normal
        /// p-subgroup P (l214). Defaults to G, or O_p(G) for l214.
        #[arg(long)]
        normal: Option<String>,
        /// List every failing subgroup, not just the first.
        #[arg(long)]
        exhaustive: bool,
        #[arg(long)]
        json: bool,
    },
    /// Run every verifier over the catalog.
    Corpus {
        /// Keep entries whose name contains this text.
        #[arg(long)]
        filter: Option<String>,
        /// Write the JSON report here (`-` for stdout).
        #[arg(long)]
        json: Option<PathBuf>,
        /// List every failing subgroup, not just the first.
        #[arg(long)]
        exhaustive: bool,
        /// Try minimal normal subgroups largest-first.
        #[arg(long)]
        reverse_ties: bool,
        /// Conjugate every Sylow subgroup by a random element (seeded).
        #[arg(long)]
        conjugate_sylow: Option<u64>,
        /// Verify one group at a time.
        #[arg(long)]
        sequential: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) if e.downcast_ref::<io::Error>().is_some_and(|e| e.kind() == io::ErrorKind::BrokenPipe) => {
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    let limits = Limits::default();
    match cli.command {
        Command::Info { group, json } => info(&load_group(&group, &limits)?, json),
        Command::Check {
            group,
            prime,
            subgroup,
            json,
            reverse_ties,
        } => {
            let g = load_group(&group, &limits)?;
            require_prime(prime)?;
            let tie = if reverse_ties { TieOrder::Reverse } else { TieOrder::Forward };
            check(&g, prime, &subgroup, tie, json)
        }
        Command::Theorem {
            id,
            group,
            prime,
            normal,
            exhaustive,
            json,
        } => {
            let id = TheoremId::parse(&id).ok_or_else(|| anyhow!("unknown theorem id {id:?}"))?;
            let g = load_group(&group, &limits)?;
            theorem(&g, &group, id, prime, normal.as_deref(), exhaustive, json)
        }
        Command::Corpus {
            filter,
            json,
            exhaustive,
            reverse_ties,
            conjugate_sylow,
            sequential,
        } => {
            let config = CorpusConfig {
                filter,
                verify: VerifyOptions {
                    tie: if reverse_ties { TieOrder::Reverse } else { TieOrder::Forward },
                    exhaustive,
                    conjugate_sylow,
                },
                limits,
                parallel: !sequential,
                ..CorpusConfig::default()
            };
            corpus(&config, json.as_deref())
        }
    }
}

fn require_prime(p: u64) -> anyhow::Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        bail!("{p} is not prime")
    }
}

/// Inline JSON, a JSON file, or a catalog name.
fn parse_desc(arg: &str) -> anyhow::Result<GroupDesc> {
    let trimmed = arg.trim_start();
    if trimmed.starts_with('{') {
        return Ok(GroupDesc::parse(arg)?);
    }
    let path = Path::new(arg);
    if path.is_file() {
        let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        return Ok(GroupDesc::parse(&text)?);
    }
    Ok(GroupDesc::Catalog { name: arg.to_string() })
}

fn load_group(arg: &str, limits: &Limits) -> anyhow::Result<Group> {
    Ok(parse_desc(arg)?.build(limits)?)
}

fn parse_generators(g: &Group, arg: &str) -> anyhow::Result<Vec<Elem>> {
    if let Some(ids) = arg.strip_prefix("ids:") {
        return ids
            .split(',')
            .filter(|s| !s.trim().is_empty())
            .map(|s| {
                let x: Elem = s.trim().parse().with_context(|| format!("bad element id {s:?}"))?;
                if x as usize >= g.order() {
                    bail!("element id {x} out of range for a group of order {}", g.order());
                }
                Ok(x)
            })
            .collect();
    }
    let cycles: Vec<Cycles> =
        serde_json::from_str(arg).context("generators must be a JSON list of cycle lists, or ids:...")?;
    cycles
        .iter()
        .map(|c| cycles_to_elem(g, c).map_err(Into::into))
        .collect()
}

fn subgroups_for(g: &Group, p: u64, arg: &str) -> anyhow::Result<Vec<Subgroup>> {
    let Some(family) = arg.strip_prefix("family:") else {
        return Ok(vec![g.subgroup_generated(&parse_generators(g, arg)?)]);
    };
    let sylow = sylow_subgroup(g, p)?;
    if family == "sylow" {
        return Ok(vec![sylow]);
    }
    let local = restrict(g, &sylow)?;
    let members = match family {
        "2min" => two_minimal_subgroups(&local.group)?,
        "2max" => two_maximal_subgroups(&local.group)?,
        "cyc4" => cyclic_order4_subgroups(&local.group)?,
        other => bail!("unknown family {other:?} (expected 2min, 2max, cyc4 or sylow)"),
    };
    Ok(members.iter().map(|s| local.lift(g, s)).collect())
}

fn info(g: &Group, as_json: bool) -> anyhow::Result<u8> {
    let series = one_chief_series(g);
    let factors: Vec<u64> = series.factors.iter().map(|f| f.order).collect();
    let mut per_prime = Vec::new();
    for (p, _) in factorize(g.order() as u64) {
        let sylow = sylow_subgroup(g, p)?;
        per_prime.push(json!({
            "prime": p,
            "sylow_order": sylow.order(),
            "p_soluble": is_p_soluble(g, p)?,
            "p_length": p_length(g, p).ok(),
            "o_p_order": o_lower(g, Core::P, p)?.order(),
        }));
    }
    let record = json!({
        "order": g.order(),
        "backend": if g.is_perm_backed() { "perm" } else { "table" },
        "degree": g.degree(),
        "abelian": g.is_abelian(),
        "soluble": is_soluble(g),
        "supersoluble": is_supersoluble(g),
        "centre_order": centre(g).order(),
        "fitting_order": fitting(g).order(),
        "chief_factors": factors,
        "primes": per_prime,
    });
    if as_json {
        outln!("{}", serde_json::to_string_pretty(&record)?);
    } else {
        outln!("order        {}", g.order());
        outln!("backend      {} (degree {})", record["backend"].as_str().unwrap(), g.degree());
        outln!("abelian      {}", g.is_abelian());
        outln!("soluble      {}", record["soluble"]);
        outln!("supersoluble {}", record["supersoluble"]);
        outln!("|Z(G)|       {}", record["centre_order"]);
        outln!("|F(G)|       {}", record["fitting_order"]);
        outln!("chief factor orders {:?}", factors);
        for p in &per_prime {
            outln!(
                "p={}: |P|={} p-soluble={} p-length={} |O_p|={}",
                p["prime"], p["sylow_order"], p["p_soluble"], p["p_length"], p["o_p_order"]
            );
        }
    }
    Ok(0)
}

fn check(g: &Group, p: u64, arg: &str, tie: TieOrder, as_json: bool) -> anyhow::Result<u8> {
    let subgroups = subgroups_for(g, p, arg)?;
    let mut checker = PiChecker::new(g).tie_order(tie);
    let mut records = Vec::new();
    for h in &subgroups {
        let verdict = checker.check(h)?;
        if as_json {
            records.push(json!({
                "subgroup": TermRecord::new(g, h),
                "result": VerdictRecord::new(g, &verdict),
            }));
        } else {
            print_verdict(g, h, &verdict)?;
        }
    }
    if as_json {
        outln!("{}", serde_json::to_string_pretty(&json!({ "schema": SCHEMA, "checks": records }))?);
    } else if subgroups.is_empty() {
        outln!("family is empty");
    }
    Ok(0)
}

fn describe(g: &Group, s: &Subgroup) -> String {
    let gens: Vec<String> = s
        .generators()
        .iter()
        .map(|&x| {
            if g.is_perm_backed() {
                g.perm_of(x).to_string()
            } else {
                format!("#{x}")
            }
        })
        .collect();
    format!("order {} <{}>", s.order(), gens.join(", "))
}

fn print_verdict(g: &Group, h: &Subgroup, verdict: &PiVerdict) -> io::Result<()> {
    match verdict {
        PiVerdict::Witness(w) => {
            outln!("witness for {}", describe(g, h));
            let orders: Vec<String> = w.series.terms.iter().map(|t| t.order().to_string()).collect();
            outln!("  series orders {}", orders.join(" < "));
            for c in &w.per_factor {
                outln!(
                    "  factor {}: |factor|={} |intersection|={} index={} pi={}",
                    c.index, c.factor_order, c.intersection_order, c.normalizer_index, c.pi
                );
            }
        }
        PiVerdict::Refusal { explored } => {
            outln!(
                "refusal for {}: no chief series works ({} dead-end states)",
                describe(g, h),
                explored.len()
            );
        }
    }
    Ok(())
}

fn theorem(
    g: &Group,
    name: &str,
    id: TheoremId,
    prime: Option<u64>,
    normal: Option<&str>,
    exhaustive: bool,
    as_json: bool,
) -> anyhow::Result<u8> {
    let opts = VerifyOptions {
        exhaustive,
        ..VerifyOptions::default()
    };
    let mut v = Verifier::new(g, name, opts);
    let need_prime = || prime.ok_or_else(|| anyhow!("--prime is required for {id}"));
    let normal_arg = |default: Subgroup| -> anyhow::Result<Subgroup> {
        match normal {
            Some(arg) => Ok(g.subgroup_generated(&parse_generators(g, arg)?)),
            None => Ok(default),
        }
    };
    let report = match id {
        TheoremId::T11 | TheoremId::T12 => {
            let p = need_prime()?;
            require_prime(p)?;
            let e = normal_arg(g.whole())?;
            if id == TheoremId::T11 {
                v.verify_t11(&e, p)?
            } else {
                v.verify_t12(&e, p)?
            }
        }
        TheoremId::T13 => v.verify_t13(need_prime()?)?,
        TheoremId::T14 => v.verify_t14(need_prime()?)?,
        TheoremId::Cls => v.verify_cls(need_prime()?)?,
        TheoremId::L28 => v.verify_l28(need_prime()?)?,
        TheoremId::L214 => {
            let pn = match (normal, prime) {
                (Some(_), _) => normal_arg(g.trivial())?,
                (None, Some(p)) => o_lower(g, Core::P, p)?,
                (None, None) => bail!("l214 needs --normal or --prime"),
            };
            if pn.is_trivial() {
                bail!("the normal p-subgroup is trivial");
            }
            v.verify_l214(&pn)?
        }
    };
    if as_json {
        outln!(
            "{}",
            serde_json::to_string_pretty(&json!({ "schema": SCHEMA, "reports": [report] }))?
        );
    } else {
        print_report(&report)?;
    }
    Ok(if report.violation { EXIT_VIOLATION } else { 0 })
}

fn status(s: Status) -> &'static str {
    match s {
        Status::Holds => "holds",
        Status::Fails => "fails",
        Status::NotEvaluated => "not-evaluated",
    }
}

fn print_report(r: &TheoremReport) -> io::Result<()> {
    let subject = r
        .subject
        .as_ref()
        .map(|s| format!(" [normal subgroup #{} of order {}]", s.lattice_index, s.order))
        .unwrap_or_default();
    outln!(
        "{} {} p={}{}: hypothesis {}, conclusion {}{}",
        r.theorem,
        r.group,
        r.prime,
        subject,
        status(r.hypothesis),
        status(r.conclusion),
        if r.violation { "  VIOLATION" } else { "" }
    );
    if let Some(b) = &r.branch {
        outln!("  branch: {b}");
    }
    if let Some(n) = &r.note {
        outln!("  note: {n}");
    }
    for f in &r.failing {
        outln!("  no witness: subgroup of order {} (generator ids {:?})", f.order, f.generator_ids);
    }
    Ok(())
}

fn corpus(config: &CorpusConfig, json_out: Option<&Path>) -> anyhow::Result<u8> {
    let report = run_corpus(config);
    match json_out {
        Some(path) if path == Path::new("-") => outln!("{}", report.to_json()),
        Some(path) => {
            fs::write(path, report.to_json()).with_context(|| format!("writing {}", path.display()))?;
        }
        None => {}
    }
    if json_out != Some(Path::new("-")) {
        for r in report.reports.iter().filter(|r| r.violation) {
            print_report(r)?;
        }
        for e in &report.errors {
            outln!("error in {}: {}", e.group, e.message);
        }
        let s = &report.summary;
        outln!(
            "groups {} reports {} hypotheses-held {} conclusions-held {} not-evaluated {} violations {} errors {}",
            s.groups, s.reports, s.hypotheses_held, s.conclusions_held, s.not_evaluated, s.violations, s.errors
        );
    }
    if report.has_violation() {
        return Ok(EXIT_VIOLATION);
    }
    if !report.errors.is_empty() {
        return Ok(EXIT_ERROR);
    }
    Ok(0)
}
