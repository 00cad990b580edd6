//! The theorem catalog. Each id is a checkable claim about finite
//! hyperrings, quantified exhaustively over a fixture.

mod checks;
mod fixtures;
mod survey;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::ideals::{check_order, Mode};
use crate::kernel::{Distributivity, HyperRing};
use crate::subset::SubsetMask;

pub use checks::{AVOIDANCE_BUDGET, MAX_COUNTEREXAMPLES};
pub use fixtures::{fixture, paper_example_spec, z2_as_33_spec, DEFAULT_SUITE, FIXTURES};
pub use survey::Survey;

/// The S-condition for `p` computed three ways: a direct product scan,
/// `p` as a fixed point of every residual `p_t` (t ∈ s), and `p` as a
/// fixed point of saturation by `s`.
pub fn tri_equivalence(ring: &HyperRing, p: &SubsetMask, s: &SubsetMask) -> Result<[bool; 3]> {
    ring.check_mask(p)?;
    ring.check_mask(s)?;
    Ok(checks::tri_equivalence(ring, p.bits(), s.bits()))
}

macro_rules! theorem_ids {
    ($($variant:ident => $name:literal),* $(,)?) => {
        /// A catalog entry.
        #[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub enum TheoremId {
            $($variant),*
        }

        impl TheoremId {
            /// Catalog order.
            pub const ALL: [TheoremId; 22] = [$(TheoremId::$variant),*];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(TheoremId::$variant => $name),*
                }
            }
        }

        impl FromStr for TheoremId {
            type Err = Error;

            fn from_str(s: &str) -> Result<Self> {
                match s {
                    $($name => Ok(TheoremId::$variant),)*
                    other => Err(Error::UnknownTheorem(other.to_string())),
                }
            }
        }
    };
}

theorem_ids! {
    T1_1 => "T1.1",
    T1_2 => "T1.2",
    T1_3 => "T1.3",
    P2 => "P2",
    T7 => "T7",
    T6 => "T6",
    T3 => "T3",
    T4 => "T4",
    T5 => "T5",
    TPrimaryEq => "TPRIMARY-EQ",
    TDecomp => "TDECOMP",
    PInt => "PINT",
    P8 => "P8",
    T9Fwd => "T9-FWD",
    T10 => "T10",
    T12 => "T12",
    TAvoid => "TAVOID",
    ThomPre => "THOM-PRE",
    ThomImg => "THOM-IMG",
    TQuot => "TQUOT",
    TProd => "TPROD",
    FwSr => "FW-SR",
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for TheoremId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// Parses a comma-separated id list such as `T1.1,T5`.
pub fn parse_theorem_list(s: &str) -> Result<Vec<TheoremId>> {
    s.split(',').map(str::parse).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TheoremStatus {
    Holds,
    Counterexample,
    HypothesisNeverMet,
}

impl TheoremStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            TheoremStatus::Holds => "holds",
            TheoremStatus::Counterexample => "counterexample",
            TheoremStatus::HypothesisNeverMet => "hypothesis-never-met",
        }
    }
}

/// Outcome of one checker on one ring.
#[derive(Clone, Debug, Serialize)]
pub struct TheoremReport {
    pub id: TheoremId,
    pub ring: String,
    pub mode: Mode,
    pub status: TheoremStatus,
    pub instances_checked: u64,
    pub hypothesis_met: u64,
    pub counterexample_count: u64,
    /// At most [`MAX_COUNTEREXAMPLES`] witnesses.
    pub counterexamples: Vec<Value>,
    pub notes: Vec<String>,
    pub truncated: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<u64>,
}

/// Runs one checker against a prepared survey.
pub fn check_with_survey(survey: &Survey, id: TheoremId) -> Result<TheoremReport> {
    let start = Instant::now();
    let mut t = checks::run(id, survey)?;
    if survey.ring.distributivity() == Distributivity::Includes {
        t.notes.insert(0, "g distributes over f only up to inclusion on this ring".into());
    }
    let status = if t.failures > 0 {
        TheoremStatus::Counterexample
    } else if t.met == 0 {
        TheoremStatus::HypothesisNeverMet
    } else {
        TheoremStatus::Holds
    };
    Ok(TheoremReport {
        id,
        ring: survey.ring.name().to_string(),
        mode: survey.mode,
        status,
        instances_checked: t.instances,
        hypothesis_met: t.met,
        counterexample_count: t.failures,
        counterexamples: t.examples,
        notes: t.notes,
        truncated: t.truncated,
        runtime_ms: Some(start.elapsed().as_millis() as u64),
    })
}

pub fn check_theorem(ring: &Arc<HyperRing>, id: TheoremId, mode: Mode) -> Result<TheoremReport> {
    check_order(ring)?;
    let survey = Survey::new(Arc::clone(ring), mode)?;
    check_with_survey(&survey, id)
}

/// Every (ring, theorem) cell, ring-major and in catalog order. An empty
/// or absent filter means the whole catalog.
pub fn run_suite(
    rings: &[Arc<HyperRing>],
    mode: Mode,
    filter: Option<&[TheoremId]>,
) -> Result<Vec<TheoremReport>> {
    let ids: Vec<TheoremId> = match filter {
        Some(f) if !f.is_empty() => TheoremId::ALL.into_iter().filter(|id| f.contains(id)).collect(),
        _ => TheoremId::ALL.to_vec(),
    };
    for r in rings {
        check_order(r)?;
    }
    let surveys: Vec<Survey> = rings
        .par_iter()
        .map(|r| Survey::new(Arc::clone(r), mode))
        .collect::<Result<_>>()?;
    let cells: Vec<(usize, TheoremId)> = (0..surveys.len())
        .flat_map(|i| ids.iter().map(move |&id| (i, id)))
        .collect();
    cells
        .par_iter()
        .map(|&(i, id)| check_with_survey(&surveys[i], id))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuiteOutcome {
    Pass,
    Counterexample,
    /// Some id never met its hypotheses on any ring.
    HypothesisGap,
}

impl SuiteOutcome {
    pub fn as_str(self) -> &'static str {
        match self {
            SuiteOutcome::Pass => "pass",
            SuiteOutcome::Counterexample => "counterexample",
            SuiteOutcome::HypothesisGap => "hypothesis-gap",
        }
    }
}

/// Ids present in `reports` that no ring exercised.
pub fn unexercised(reports: &[TheoremReport]) -> Vec<TheoremId> {
    let mut ids: Vec<TheoremId> = reports.iter().map(|r| r.id).collect();
    ids.sort();
    ids.dedup();
    ids.retain(|id| reports.iter().filter(|r| r.id == *id).all(|r| r.hypothesis_met == 0));
    ids
}

pub fn suite_outcome(reports: &[TheoremReport]) -> SuiteOutcome {
    if reports.iter().any(|r| r.status == TheoremStatus::Counterexample) {
        SuiteOutcome::Counterexample
    } else if !unexercised(reports).is_empty() {
        SuiteOutcome::HypothesisGap
    } else {
        SuiteOutcome::Pass
    }
}

/// Strips timings so two runs compare byte for byte.
pub fn without_timings(reports: &mut [TheoremReport]) {
    for r in reports {
        r.runtime_ms = None;
    }
}

pub fn render_json(reports: &[TheoremReport]) -> String {
    serde_json::to_string_pretty(reports).expect("reports serialize")
}

pub fn render_table(reports: &[TheoremReport]) -> String {
    let ring_w = reports.iter().map(|r| r.ring.len()).max().unwrap_or(4).max(4);
    let timed = reports.iter().any(|r| r.runtime_ms.is_some());
    let mut out = format!(
        "{:<12} {:<ring_w$} {:<21} {:>10} {:>10} {:>8}",
        "id", "ring", "status", "instances", "met", "failures"
    );
    if timed {
        out.push_str(&format!(" {:>8}", "ms"));
    }
    out.push('\n');
    for r in reports {
        let status = if r.truncated {
            format!("{} (truncated)", r.status.as_str())
        } else {
            r.status.as_str().to_string()
        };
        out.push_str(&format!(
            "{:<12} {:<ring_w$} {:<21} {:>10} {:>10} {:>8}",
            r.id.as_str(),
            r.ring,
            status,
            r.instances_checked,
            r.hypothesis_met,
            r.counterexample_count
        ));
        if let Some(ms) = r.runtime_ms {
            out.push_str(&format!(" {ms:>8}"));
        }
        out.push('\n');
    }
    out
}
