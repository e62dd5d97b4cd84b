//! Per-case results and the JSON-lines report.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
    #[serde(rename = "DISCREPANCY-CANDIDATE")]
    DiscrepancyCandidate,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::DiscrepancyCandidate => "DISCREPANCY-CANDIDATE",
        })
    }
}

/// What the criterion computed. Rationals are written as `p/q` strings.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Computed {
    pub outcome: Option<String>,
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness_rank: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub required_rank: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub contains_g2alpha: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub error: Option<String>,
}

/// Dimensions of `h`, its split parts (`k_H`/`p_H` or `m_H`/`a_H`/`n_H`) and the complement.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Dims {
    pub h: usize,
    pub parts: BTreeMap<String, usize>,
    pub complement: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseResult {
    pub case_id: String,
    pub theorem_id: String,
    pub family: Option<String>,
    pub n: Option<usize>,
    pub row: String,
    pub params: BTreeMap<String, String>,
    pub expected: String,
    pub provenance: String,
    pub computed: Computed,
    pub dims: Option<Dims>,
    pub ranks_at_samples: Vec<usize>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub discrepancy_candidates: usize,
}

impl Summary {
    pub fn of(cases: &[CaseResult]) -> Self {
        let count = |s| cases.iter().filter(|c| c.status == s).count();
        Summary {
            total: cases.len(),
            pass: count(Status::Pass),
            fail: count(Status::Fail),
            discrepancy_candidates: count(Status::DiscrepancyCandidate),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
struct SummaryLine {
    tool_version: String,
    seed: u64,
    summary: Summary,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub tool_version: String,
    pub seed: u64,
    pub cases: Vec<CaseResult>,
    pub summary: Summary,
}

#[derive(Debug, thiserror::Error)]
pub enum ReportError {
    #[error("line {line}: {source}")]
    Json { line: usize, source: serde_json::Error },
    #[error("report has no summary line")]
    MissingSummary,
    #[error("summary does not match the case lines")]
    SummaryMismatch,
}

impl Report {
    pub fn new(seed: u64, cases: Vec<CaseResult>) -> Self {
        let summary = Summary::of(&cases);
        Report { tool_version: env!("CARGO_PKG_VERSION").to_string(), seed, cases, summary }
    }

    pub fn has_failures(&self) -> bool {
        self.summary.fail > 0
    }

    pub fn exit_code(&self) -> i32 {
        i32::from(self.has_failures())
    }

    /// One case per line, the summary last. Timing is left out so reruns are byte-identical.
    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        for c in &self.cases {
            out.push_str(&serde_json::to_string(c).expect("case serializes"));
            out.push('\n');
        }
        let line = SummaryLine { tool_version: self.tool_version.clone(), seed: self.seed, summary: self.summary.clone() };
        out.push_str(&serde_json::to_string(&line).expect("summary serializes"));
        out.push('\n');
        out
    }

    pub fn from_jsonl(text: &str) -> Result<Self, ReportError> {
        let lines: Vec<&str> = text.lines().filter(|l| !l.trim().is_empty()).collect();
        let (last, body) = lines.split_last().ok_or(ReportError::MissingSummary)?;
        let json = |line: usize, source| ReportError::Json { line, source };
        let cases = body
            .iter()
            .enumerate()
            .map(|(i, l)| serde_json::from_str::<CaseResult>(l).map_err(|e| json(i + 1, e)))
            .collect::<Result<Vec<_>, _>>()?;
        let s: SummaryLine = serde_json::from_str(last).map_err(|e| json(lines.len(), e))?;
        if s.summary != Summary::of(&cases) {
            return Err(ReportError::SummaryMismatch);
        }
        Ok(Report { tool_version: s.tool_version, seed: s.seed, cases, summary: s.summary })
    }
}
