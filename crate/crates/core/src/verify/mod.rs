//! Claim verification harness.
//!
//! Each claim is a published statement about stability numbers, a corpus of
//! instances derived from a [`Scale`], and a checker run against the exact
//! engines. Instances outside a claim's hypothesis are counted as vacuous,
//! not as passes.

mod claims;
mod corpus;

use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use thiserror::Error;

use crate::graph::{FamilySpec, Graph};
use crate::io::format_graph6;

pub use claims::catalog;
pub use corpus::{Scale, LABELED_CAP, MAX_SCALE};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error("unknown claim id `{0}`")]
    UnknownClaim(String),
    #[error("scale {what} = {value} exceeds the cap of {cap}")]
    ScaleOverCap {
        what: &'static str,
        value: usize,
        cap: usize,
    },
}

/// One object a claim is evaluated on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Instance {
    Graph(Graph),
    Family(FamilySpec),
    Corona(Graph, Graph),
    Join(Graph, Graph),
    /// A family sequence along which a quantity must grow.
    Sequence(Vec<FamilySpec>),
}

fn g6(g: &Graph) -> String {
    format_graph6(g).unwrap_or_else(|_| format!("<{} vertices>", g.n()))
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Instance::Graph(g) => write!(f, "{}", g6(g)),
            Instance::Family(spec) => match crate::graph::generate(spec) {
                Ok(g) => write!(f, "{spec} {}", g6(&g)),
                Err(_) => write!(f, "{spec}"),
            },
            Instance::Corona(g, h) => write!(f, "corona({}, {})", g6(g), g6(h)),
            Instance::Join(g, h) => write!(f, "join({}, {})", g6(g), g6(h)),
            Instance::Sequence(specs) => {
                write!(f, "[")?;
                for (i, s) in specs.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{s}")?;
                }
                write!(f, "]")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    /// The hypothesis does not hold for this instance.
    Vacuous,
    Fail {
        expected: String,
        actual: String,
        /// The mismatch is a known, explained deviation of the published
        /// statement rather than a new counterexample.
        documented: bool,
    },
}

/// The result of checking one instance, with an optional tally key for
/// side observations (for example, two readings of a definition disagreeing).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub verdict: Verdict,
    pub note: Option<&'static str>,
}

impl Outcome {
    pub fn pass() -> Self {
        Outcome {
            verdict: Verdict::Pass,
            note: None,
        }
    }

    pub fn vacuous() -> Self {
        Outcome {
            verdict: Verdict::Vacuous,
            note: None,
        }
    }

    pub fn fail(expected: impl fmt::Display, actual: impl fmt::Display) -> Self {
        Outcome {
            verdict: Verdict::Fail {
                expected: expected.to_string(),
                actual: actual.to_string(),
                documented: false,
            },
            note: None,
        }
    }

    pub fn documented(expected: impl fmt::Display, actual: impl fmt::Display) -> Self {
        Outcome {
            verdict: Verdict::Fail {
                expected: expected.to_string(),
                actual: actual.to_string(),
                documented: true,
            },
            note: None,
        }
    }

    pub fn noted(mut self, note: &'static str) -> Self {
        self.note = Some(note);
        self
    }

    pub fn is_fail(&self) -> bool {
        matches!(self.verdict, Verdict::Fail { .. })
    }
}

pub struct Claim {
    pub id: &'static str,
    /// Section and quoted statement the claim reproduces.
    pub anchor: &'static str,
    pub description: &'static str,
    pub(crate) instances: fn(&Scale) -> Vec<Instance>,
    pub(crate) check: fn(&Instance) -> Outcome,
}

impl Claim {
    pub fn instances(&self, scale: &Scale) -> Vec<Instance> {
        (self.instances)(scale)
    }

    pub fn check(&self, instance: &Instance) -> Outcome {
        (self.check)(instance)
    }
}

impl fmt::Debug for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Claim")
            .field("id", &self.id)
            .finish_non_exhaustive()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    DocumentedDiscrepancy,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::DocumentedDiscrepancy => "DOCUMENTED-DISCREPANCY",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub instance: Instance,
    pub expected: String,
    pub actual: String,
    pub documented: bool,
}

#[derive(Debug, Clone)]
pub struct ClaimReport {
    pub id: &'static str,
    pub anchor: &'static str,
    pub instances: usize,
    pub vacuous: usize,
    pub failures: Vec<Failure>,
    /// Note key → (count, first instance).
    pub notes: BTreeMap<&'static str, (usize, String)>,
    pub elapsed: Duration,
    pub status: Status,
}

impl ClaimReport {
    /// Instances where the hypothesis held.
    pub fn fired(&self) -> usize {
        self.instances - self.vacuous
    }
}

pub fn find_claim(id: &str) -> Result<&'static Claim, VerifyError> {
    catalog()
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| VerifyError::UnknownClaim(id.to_string()))
}

fn run_claim(claim: &Claim, scale: &Scale) -> ClaimReport {
    let start = Instant::now();
    let instances = claim.instances(scale);
    let outcomes: Vec<Outcome> = instances.par_iter().map(|i| claim.check(i)).collect();
    let mut vacuous = 0;
    let mut failures = Vec::new();
    let mut notes: BTreeMap<&'static str, (usize, String)> = BTreeMap::new();
    for (instance, outcome) in instances.iter().zip(outcomes) {
        if let Some(key) = outcome.note {
            notes
                .entry(key)
                .or_insert_with(|| (0, instance.to_string()))
                .0 += 1;
        }
        match outcome.verdict {
            Verdict::Pass => {}
            Verdict::Vacuous => vacuous += 1,
            Verdict::Fail {
                expected,
                actual,
                documented,
            } => failures.push(Failure {
                instance: instance.clone(),
                expected,
                actual,
                documented,
            }),
        }
    }
    let status = if failures.iter().any(|f| !f.documented) {
        Status::Fail
    } else if failures.is_empty() {
        Status::Pass
    } else {
        Status::DocumentedDiscrepancy
    };
    ClaimReport {
        id: claim.id,
        anchor: claim.anchor,
        instances: instances.len(),
        vacuous,
        failures,
        notes,
        elapsed: start.elapsed(),
        status,
    }
}

pub fn check_claim(id: &str, scale: &Scale) -> Result<ClaimReport, VerifyError> {
    scale.validate()?;
    Ok(run_claim(find_claim(id)?, scale))
}

/// Runs the whole catalogue, or only `ids` when given, in catalogue order.
pub fn run_suite(scale: &Scale, ids: Option<&[String]>) -> Result<Vec<ClaimReport>, VerifyError> {
    scale.validate()?;
    if let Some(ids) = ids {
        for id in ids {
            find_claim(id)?;
        }
    }
    let selected: Vec<&Claim> = catalog()
        .iter()
        .filter(|c| ids.is_none_or(|ids| ids.iter().any(|i| i == c.id)))
        .collect();
    Ok(selected.par_iter().map(|c| run_claim(c, scale)).collect())
}

/// Re-runs a claim's checker on a single instance, independently of any
/// earlier report.
pub fn recheck(id: &str, instance: &Instance) -> Result<Outcome, VerifyError> {
    Ok(find_claim(id)?.check(instance))
}

/// Traceability table plus one line per counterexample and note. Timing is
/// left out so that equal runs render identically.
pub fn render_reports(reports: &[ClaimReport]) -> String {
    let mut out = String::new();
    let id_w = reports.iter().map(|r| r.id.len()).max().unwrap_or(0).max(5);
    out.push_str(&format!(
        "{:<id_w$}  {:<22}  {:>9}  {:>7}  {:>8}  anchor\n",
        "claim", "status", "instances", "vacuous", "failures"
    ));
    for r in reports {
        out.push_str(&format!(
            "{:<id_w$}  {:<22}  {:>9}  {:>7}  {:>8}  {}\n",
            r.id,
            r.status.to_string(),
            r.instances,
            r.vacuous,
            r.failures.len(),
            r.anchor
        ));
    }
    for r in reports {
        for f in &r.failures {
            let tag = if f.documented {
                "documented"
            } else {
                "counterexample"
            };
            out.push_str(&format!(
                "{} {tag}: {} expected {} got {}\n",
                r.id, f.instance, f.expected, f.actual
            ));
        }
        for (key, (count, first)) in &r.notes {
            out.push_str(&format!("{} note: {key} ({count}x, first {first})\n", r.id));
        }
    }
    let count = |s: Status| reports.iter().filter(|r| r.status == s).count();
    out.push_str(&format!(
        "summary: {} pass, {} fail, {} documented-discrepancy\n",
        count(Status::Pass),
        count(Status::Fail),
        count(Status::DocumentedDiscrepancy)
    ));
    out
}
