//! Sweeps every verifier over the catalog and collects one report.

use rayon::prelude::*;
use serde::Serialize;

use super::catalog::{build_catalog, CatalogEntry};
use super::verify::{Status, TheoremId, TheoremReport, Verifier, VerifyOptions};
use crate::error::Result;
use crate::group::Limits;
use crate::primes::factorize;

pub const SCHEMA: &str = "gpi-report/1";

#[derive(Debug, Clone)]
pub struct CorpusConfig {
    /// Case-insensitive substring of entry names to keep.
    pub filter: Option<String>,
    pub theorems: Vec<TheoremId>,
    pub verify: VerifyOptions,
    pub limits: Limits,
    pub parallel: bool,
}

impl Default for CorpusConfig {
    fn default() -> Self {
        CorpusConfig {
            filter: None,
            theorems: TheoremId::ALL.to_vec(),
            verify: VerifyOptions::default(),
            limits: Limits::default(),
            parallel: true,
        }
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Summary {
    pub groups: usize,
    pub reports: usize,
    pub hypotheses_held: usize,
    pub conclusions_held: usize,
    pub not_evaluated: usize,
    pub violations: usize,
    pub errors: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct EntryError {
    pub group: String,
    pub message: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct CorpusReport {
    pub schema: &'static str,
    pub summary: Summary,
    pub reports: Vec<TheoremReport>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub errors: Vec<EntryError>,
}

impl CorpusReport {
    pub fn from_reports(groups: usize, mut reports: Vec<TheoremReport>, errors: Vec<EntryError>) -> Self {
        reports.sort_by(|a, b| {
            (&a.group, a.theorem, a.prime, a.subject.as_ref().map(|s| s.lattice_index)).cmp(&(
                &b.group,
                b.theorem,
                b.prime,
                b.subject.as_ref().map(|s| s.lattice_index),
            ))
        });
        let summary = Summary {
            groups,
            reports: reports.len(),
            hypotheses_held: reports.iter().filter(|r| r.hypothesis == Status::Holds).count(),
            conclusions_held: reports.iter().filter(|r| r.conclusion == Status::Holds).count(),
            not_evaluated: reports
                .iter()
                .filter(|r| r.hypothesis == Status::NotEvaluated || r.conclusion == Status::NotEvaluated)
                .count(),
            violations: reports.iter().filter(|r| r.violation).count(),
            errors: errors.len(),
        };
        CorpusReport {
            schema: SCHEMA,
            summary,
            reports,
            errors,
        }
    }

    pub fn has_violation(&self) -> bool {
        self.summary.violations > 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// All verifiers for every prime dividing the order of one catalog group.
pub fn verify_entry(entry: &CatalogEntry, config: &CorpusConfig) -> Result<Vec<TheoremReport>> {
    let g = entry.build(&config.limits)?;
    let mut v = Verifier::new(&g, entry.name, config.verify.clone());
    let mut out = Vec::new();
    for (p, _) in factorize(g.order() as u64) {
        out.extend(v.verify_all(p, &config.theorems)?);
    }
    Ok(out)
}

pub fn run_entries(entries: &[CatalogEntry], config: &CorpusConfig) -> CorpusReport {
    let run = |e: &CatalogEntry| (e.name, verify_entry(e, config));
    let results: Vec<_> = if config.parallel {
        entries.par_iter().map(run).collect()
    } else {
        entries.iter().map(run).collect()
    };
    let mut reports = Vec::new();
    let mut errors = Vec::new();
    for (name, r) in results {
        match r {
            Ok(rs) => reports.extend(rs),
            Err(e) => errors.push(EntryError {
                group: name.to_string(),
                message: e.to_string(),
            }),
        }
    }
    CorpusReport::from_reports(entries.len(), reports, errors)
}

pub fn run_corpus(config: &CorpusConfig) -> CorpusReport {
    let entries: Vec<CatalogEntry> = build_catalog()
        .into_iter()
        .filter(|e| match &config.filter {
            Some(f) => e.name.to_ascii_lowercase().contains(&f.to_ascii_lowercase()),
            None => true,
        })
        .collect();
    run_entries(&entries, config)
}
