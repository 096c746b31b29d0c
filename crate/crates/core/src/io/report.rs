//! Reports: results plus a ledger of every cross-check performed.
//!
//! Serialization is canonical. Given the same inputs and seed a report is
//! byte-identical whatever the worker count, unless timing is requested.

use std::fmt::Write as _;

use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use super::format::{int_value, poly_to_value, weight_to_value};
use crate::algebra::{Int, SparsePoly};
use crate::engine::StatsSnapshot;
use crate::error::Result;
use crate::invariants::MinkowskiWeight;

#[derive(Clone, Debug)]
pub enum Item {
    Poly(SparsePoly),
    Int(Int),
    Weight(MinkowskiWeight),
    Grid(Vec<Vec<Int>>),
    Text(String),
}

impl Item {
    fn to_value(&self) -> Value {
        match self {
            Item::Poly(p) => poly_to_value(p),
            Item::Int(x) => int_value(x),
            Item::Weight(w) => weight_to_value(w),
            Item::Grid(g) => Value::Array(
                g.iter()
                    .map(|r| Value::Array(r.iter().map(int_value).collect()))
                    .collect(),
            ),
            Item::Text(s) => json!(s),
        }
    }

    fn render(&self) -> String {
        match self {
            Item::Poly(p) => p.to_string(),
            Item::Int(x) => x.to_string(),
            Item::Weight(w) if w.is_zero() => "{}".into(),
            Item::Weight(w) => {
                let mut s = format!("dimension {}", w.dim);
                for (c, x) in &w.weights {
                    let _ = write!(s, "\n    {:?}: {x}", c.to_lists());
                }
                s
            }
            Item::Grid(g) => g
                .iter()
                .map(|r| r.iter().map(Int::to_string).collect::<Vec<_>>().join(" "))
                .collect::<Vec<_>>()
                .join("\n    "),
            Item::Text(s) => s.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub identity: String,
    pub subject: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct Report {
    pub command: Vec<String>,
    pub seed: u64,
    pub inputs_digest: String,
    pub results: Vec<(String, Item)>,
    pub ledger: Vec<Check>,
    pub stats: StatsSnapshot,
    pub timing_ms: Option<u128>,
}

impl Report {
    pub fn new(command: Vec<String>, seed: u64, canonical_inputs: &[String]) -> Self {
        let mut h = Sha256::new();
        for s in canonical_inputs {
            h.update(s.as_bytes());
            h.update(b"\n");
        }
        Report {
            command,
            seed,
            inputs_digest: hex::encode(h.finalize()),
            results: vec![],
            ledger: vec![],
            stats: StatsSnapshot::default(),
            timing_ms: None,
        }
    }

    pub fn push(&mut self, name: impl Into<String>, item: Item) {
        self.results.push((name.into(), item));
    }

    /// Records a cross-check. `Ok(None)` passes, `Ok(Some(why))` fails with
    /// a reason, and `Err` fails with the error.
    pub fn check(
        &mut self,
        identity: &str,
        subject: &str,
        outcome: Result<Option<String>>,
    ) -> bool {
        let (passed, detail) = match outcome {
            Ok(None) => (true, String::new()),
            Ok(Some(why)) => (false, why),
            Err(e) => (false, e.to_string()),
        };
        self.ledger.push(Check {
            identity: identity.into(),
            subject: subject.into(),
            passed,
            detail,
        });
        passed
    }

    pub fn all_passed(&self) -> bool {
        self.ledger.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.ledger.iter().filter(|c| !c.passed)
    }

    pub fn to_json(&self) -> Value {
        let mut results = Map::new();
        for (k, v) in &self.results {
            results.insert(k.clone(), v.to_value());
        }
        let ledger: Vec<Value> = self
            .ledger
            .iter()
            .map(|c| {
                let mut o = json!({ "identity": c.identity, "subject": c.subject, "verdict": if c.passed { "pass" } else { "fail" } });
                if !c.detail.is_empty() {
                    o["detail"] = json!(c.detail);
                }
                o
            })
            .collect();
        let s = &self.stats;
        let mut out = json!({
            "command": self.command,
            "seed": self.seed,
            "inputs_sha256": self.inputs_digest,
            "results": results,
            "ledger": ledger,
            "engine": {
                "graded_runs": s.graded_runs,
                "two_point_agreements": s.two_point_agreements,
                "subdegree_coefficients_checked": s.subdegree_coefficients_checked,
                "kchi_runs": s.kchi_runs,
                "kchi_verifications": s.kchi_verifications,
                "inhom_runs": s.inhom_runs,
                "inhom_verifications": s.inhom_verifications,
                "escalations": s.escalations,
                "exact_fallback_blocks": s.exact_fallback_blocks,
                "chi_route_agreements": s.chi_route_agreements,
            },
        });
        if let Some(ms) = self.timing_ms {
            out["timing_ms"] = json!(ms as u64);
        }
        out
    }

    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("plain data");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "tautmat {}", self.command.join(" "));
        let _ = writeln!(
            s,
            "seed {}  inputs {}",
            self.seed,
            &self.inputs_digest[..16]
        );
        for (k, v) in &self.results {
            let _ = writeln!(s, "{k}: {}", v.render());
        }
        if !self.ledger.is_empty() {
            let passed = self.ledger.iter().filter(|c| c.passed).count();
            let _ = writeln!(s, "checks: {passed}/{} passed", self.ledger.len());
            for c in &self.ledger {
                let verdict = if c.passed { "pass" } else { "FAIL" };
                let _ = write!(s, "  [{verdict}] {} on {}", c.identity, c.subject);
                if !c.detail.is_empty() {
                    let _ = write!(s, ": {}", c.detail);
                }
                s.push('\n');
            }
        }
        if let Some(ms) = self.timing_ms {
            let _ = writeln!(s, "time {ms} ms");
        }
        s
    }
}
