use serde::{Deserialize, Serialize};

use super::corpus::CorpusSpec;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Counterexample,
}

/// One checked item: a corpus ideal, or one clause of a fixed reproduction.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub index: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mask: Option<u64>,
    pub ideal: String,
    pub status: Status,
    pub outcome: String,
    #[serde(default, skip_serializing_if = "serde_json::Value::is_null")]
    pub detail: serde_json::Value,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Totals {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub counterexample: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub schema: u32,
    pub suite: String,
    pub tool_version: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub corpus: Option<CorpusSpec>,
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub totals: Totals,
    pub verdicts: Vec<Verdict>,
    /// Only written when timing is requested, so that reports stay
    /// byte-identical across runs.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

impl CheckReport {
    pub fn new(suite: &str, corpus: Option<CorpusSpec>, verdicts: Vec<Verdict>) -> Self {
        let mut totals = Totals {
            total: verdicts.len(),
            ..Totals::default()
        };
        for v in &verdicts {
            match v.status {
                Status::Pass => totals.pass += 1,
                Status::Fail => totals.fail += 1,
                Status::Counterexample => totals.counterexample += 1,
            }
        }
        CheckReport {
            schema: SCHEMA_VERSION,
            suite: suite.to_string(),
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            seed: corpus.as_ref().map_or(0, |c| c.seed),
            corpus,
            notes: Vec::new(),
            totals,
            verdicts,
            wall_time_ms: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.totals.fail == 0 && self.totals.counterexample == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &Verdict> {
        self.verdicts.iter().filter(|v| v.status != Status::Pass)
    }

    pub fn count_outcome(&self, outcome: &str) -> usize {
        self.verdicts
            .iter()
            .filter(|v| v.outcome == outcome)
            .count()
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// One line per verdict status plus the totals.
    pub fn summary(&self) -> String {
        let t = &self.totals;
        let mut s = format!(
            "{}: {} checked, {} pass, {} fail, {} counterexample",
            self.suite, t.total, t.pass, t.fail, t.counterexample
        );
        for v in self.failures().take(10) {
            s.push_str(&format!(
                "\n  [{:?}] #{} {} ({})",
                v.status, v.index, v.ideal, v.outcome
            ));
        }
        s
    }
}
