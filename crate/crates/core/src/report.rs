//! Structured outcome of a verification suite.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::laurent::LaurentPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// The unconditional part held but a conditional part produced
    /// counterexamples.
    Partial,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub params: BTreeMap<String, i64>,
    /// What was being checked when this failed.
    pub check: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub poly: Option<LaurentPoly>,
}

impl Counterexample {
    pub fn new(check: impl Into<String>, params: &[(&str, i64)]) -> Self {
        Counterexample {
            params: params.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            check: check.into(),
            poly: None,
        }
    }

    pub fn with_poly(mut self, poly: LaurentPoly) -> Self {
        self.poly = Some(poly);
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub claim_id: String,
    pub range: String,
    pub status: Status,
    pub counterexamples: Vec<Counterexample>,
    /// Informational findings that do not affect the status.
    #[serde(default)]
    pub notes: Vec<String>,
    pub elapsed_s: f64,
}

impl Report {
    /// `Pass` if there are no counterexamples, `Fail` otherwise.
    pub fn from_counterexamples(
        claim_id: impl Into<String>,
        range: impl Into<String>,
        counterexamples: Vec<Counterexample>,
        started: Instant,
    ) -> Self {
        let status = if counterexamples.is_empty() { Status::Pass } else { Status::Fail };
        Report {
            claim_id: claim_id.into(),
            range: range.into(),
            status,
            counterexamples,
            notes: Vec::new(),
            elapsed_s: started.elapsed().as_secs_f64(),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    /// Zeroes the timing so that serialized output is reproducible.
    pub fn without_timing(mut self) -> Self {
        self.elapsed_s = 0.0;
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

/// One CSV row per report: `claim_id,range,status,counterexamples,elapsed_s`.
pub fn summary_csv(reports: &[Report]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["claim_id", "range", "status", "counterexamples", "elapsed_s"])
        .expect("in-memory write");
    for r in reports {
        let status = serde_json::to_value(r.status).unwrap();
        w.write_record([
            r.claim_id.as_str(),
            r.range.as_str(),
            status.as_str().unwrap(),
            &r.counterexamples.len().to_string(),
            &format!("{:.3}", r.elapsed_s),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
}
