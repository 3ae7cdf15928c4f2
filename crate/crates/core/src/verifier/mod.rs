//! Exhaustive checks over all small connected block graphs: the gap-one
//! bracket for the equitable chromatic number and gap-freeness of the
//! equitable chromatic spectrum.

mod canon;
mod enumerate;

pub use canon::{canonical_code, CanonicalCode};
pub use enumerate::{enumerate, enumerate_levels};

use std::time::Duration;

use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{conjecture_bounds, BoundsReport};
use crate::coloring::{decide_equitable, spectrum_with_budget, Decision};
use crate::graph::{Graph, GraphError};

/// Where the equitable chromatic number landed relative to the bracket.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    AtLower,
    AtUpper,
    Violation,
    /// The oracle ran out of budget.
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationRecord {
    pub n: usize,
    pub code: CanonicalCode,
    pub bounds: BoundsReport,
    pub chi_eq: Option<usize>,
    pub verdict: Outcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spectrum_gaps: Option<Vec<usize>>,
}

/// Evidence for a bracket violation: the graph and every k up to `chi_eq`
/// that the oracle proved infeasible.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub bounds: BoundsReport,
    pub infeasible: Vec<usize>,
    pub chi_eq: Option<usize>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct LevelSummary {
    pub n: usize,
    pub graphs: usize,
    pub at_lower: usize,
    pub at_upper: usize,
    pub unknown: usize,
    pub violations: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub records: Vec<VerificationRecord>,
    pub summary: Vec<LevelSummary>,
    pub violation: Option<Certificate>,
}

impl VerificationReport {
    pub fn total(&self) -> LevelSummary {
        self.summary.iter().fold(LevelSummary::default(), |acc, s| LevelSummary {
            n: acc.n.max(s.n),
            graphs: acc.graphs + s.graphs,
            at_lower: acc.at_lower + s.at_lower,
            at_upper: acc.at_upper + s.at_upper,
            unknown: acc.unknown + s.unknown,
            violations: acc.violations + s.violations,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Per-(graph, k) oracle budget.
    pub budget: Option<Duration>,
    /// When set, also compute the spectrum up to `chi_eq + slack`.
    pub spectrum_slack: Option<usize>,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { budget: Some(Duration::from_secs(10)), spectrum_slack: None, jobs: None }
    }
}

/// Classifies one block graph against the bracket. Returns the record and,
/// on a violation, its certificate.
pub fn verify_graph(g: &Graph, opts: &VerifyOptions) -> Result<(VerificationRecord, Option<Certificate>), GraphError> {
    let code = canonical_code(g)?;
    let mut bounds = conjecture_bounds(g)?;
    bounds.code = Some(code.to_string());
    let mut infeasible = Vec::new();
    let mut chi_eq = None;
    let mut verdict = Outcome::Unknown;
    let mut k = bounds.lower;
    loop {
        match decide_equitable(g, k, opts.budget) {
            Decision::Feasible(_) => {
                chi_eq = Some(k);
                verdict = match k - bounds.lower {
                    0 => Outcome::AtLower,
                    1 => Outcome::AtUpper,
                    _ => Outcome::Violation,
                };
                break;
            }
            Decision::Infeasible => {
                infeasible.push(k);
                k += 1;
            }
            Decision::Unknown => {
                if k > bounds.upper {
                    verdict = Outcome::Violation;
                }
                break;
            }
        }
    }
    bounds.chi_eq = chi_eq;
    let spectrum_gaps = match (opts.spectrum_slack, chi_eq) {
        (Some(slack), Some(chi)) => Some(spectrum_with_budget(g, chi + slack, opts.budget).gaps),
        _ => None,
    };
    let certificate = (verdict == Outcome::Violation).then(|| Certificate {
        n: g.n(),
        edges: g.edges().collect(),
        bounds: bounds.clone(),
        infeasible,
        chi_eq,
    });
    let record = VerificationRecord { n: g.n(), code, bounds, chi_eq, verdict, spectrum_gaps };
    Ok((record, certificate))
}

fn with_pool<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match jobs {
        Some(j) => rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build().expect("thread pool").install(f),
        None => f(),
    }
}

/// Checks every connected block graph on at most `n_max` vertices, level by
/// level. Stops after the first level that contains a violation.
pub fn verify_conjecture(n_max: usize, opts: &VerifyOptions) -> VerificationReport {
    with_pool(opts.jobs, || {
        let levels = enumerate_levels(n_max);
        let mut records = Vec::new();
        let mut summary = Vec::new();
        let mut violation = None;
        for (n, level) in levels.iter().enumerate().skip(1) {
            let results: Vec<(VerificationRecord, Option<Certificate>)> = level
                .par_iter()
                .map(|(_, g)| verify_graph(g, opts).expect("enumerated graphs are connected block graphs"))
                .collect();
            let mut s = LevelSummary { n, graphs: results.len(), ..Default::default() };
            for (record, cert) in results {
                match record.verdict {
                    Outcome::AtLower => s.at_lower += 1,
                    Outcome::AtUpper => s.at_upper += 1,
                    Outcome::Unknown => s.unknown += 1,
                    Outcome::Violation => s.violations += 1,
                }
                if violation.is_none() {
                    violation = cert;
                }
                records.push(record);
            }
            log::info!(
                "n = {n}: {} graphs, {} at lower, {} at upper, {} unknown, {} violations",
                s.graphs,
                s.at_lower,
                s.at_upper,
                s.unknown,
                s.violations
            );
            summary.push(s);
            if violation.is_some() {
                break;
            }
        }
        VerificationReport { records, summary, violation }
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpectrumEntry {
    pub n: usize,
    pub code: CanonicalCode,
    pub omega: usize,
    pub chi_eq: Option<usize>,
    pub threshold: Option<usize>,
    pub gaps: Vec<usize>,
    pub unknown: Vec<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SpectrumReport {
    pub graphs_checked: usize,
    pub entries: Vec<SpectrumEntry>,
}

impl SpectrumReport {
    pub fn with_gaps(&self) -> impl Iterator<Item = &SpectrumEntry> {
        self.entries.iter().filter(|e| !e.gaps.is_empty())
    }
}

/// Spectrum of every enumerated block graph on at most `n_max` vertices that
/// passes `filter`, up to `chi_eq + slack`. Gaps are reported, not asserted.
pub fn verify_spectrum<F>(n_max: usize, slack: usize, opts: &VerifyOptions, filter: F) -> SpectrumReport
where
    F: Fn(&Graph) -> bool + Sync + Send,
{
    with_pool(opts.jobs, || {
        let levels = enumerate_levels(n_max);
        let entries: Vec<SpectrumEntry> = levels
            .iter()
            .flatten()
            .collect::<Vec<_>>()
            .into_par_iter()
            .filter(|(_, g)| filter(g))
            .map(|(code, g)| {
                let bounds = conjecture_bounds(g).expect("enumerated graphs are block graphs");
                // chi_eq >= omega, so the spectrum must reach past omega
                let k_max = (bounds.upper + slack).min(g.n().max(1));
                let first = spectrum_with_budget(g, k_max, opts.budget);
                let spec = match first.chi_eq {
                    Some(chi) if chi + slack > k_max => spectrum_with_budget(g, chi + slack, opts.budget),
                    _ => first,
                };
                SpectrumEntry {
                    n: g.n(),
                    code: code.clone(),
                    omega: bounds.omega,
                    chi_eq: spec.chi_eq,
                    threshold: spec.threshold,
                    gaps: spec.gaps,
                    unknown: spec.unknown,
                }
            })
            .collect();
        SpectrumReport { graphs_checked: entries.len(), entries }
    })
}
