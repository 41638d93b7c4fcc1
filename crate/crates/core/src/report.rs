//! Machine-readable suite reports.
//!
//! Everything in a report is a function of the corpus, the checks and the
//! seed: no timings, no thread counts, results in (instance, check) order.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::harness::InstanceDescriptor;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub check: String,
    /// Index into the report's instance list.
    pub instance: usize,
    pub outcome: Outcome,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    /// Skip counts per check and reason.
    #[serde(default)]
    pub skipped_by_reason: BTreeMap<String, BTreeMap<String, usize>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub tool_version: String,
    pub seed: u64,
    pub instances: Vec<InstanceDescriptor>,
    pub results: Vec<CheckResult>,
    pub summary: Summary,
}

impl SuiteReport {
    pub fn new(seed: u64, instances: Vec<InstanceDescriptor>, results: Vec<CheckResult>) -> Self {
        let mut summary = Summary::default();
        for r in &results {
            match r.outcome {
                Outcome::Pass => summary.pass += 1,
                Outcome::Fail => summary.fail += 1,
                Outcome::Skipped => {
                    summary.skipped += 1;
                    let reason = r.reason.clone().unwrap_or_default();
                    *summary
                        .skipped_by_reason
                        .entry(r.check.clone())
                        .or_default()
                        .entry(reason)
                        .or_default() += 1;
                }
            }
        }
        SuiteReport {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            seed,
            instances,
            results,
            summary,
        }
    }

    pub fn passed(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.results.iter().filter(|r| r.outcome == Outcome::Fail)
    }

    /// Per-check `(pass, fail, skipped)` counts, in check order of appearance.
    pub fn per_check(&self) -> Vec<(String, [usize; 3])> {
        let mut order: Vec<String> = Vec::new();
        let mut counts: BTreeMap<String, [usize; 3]> = BTreeMap::new();
        for r in &self.results {
            let c = counts.entry(r.check.clone()).or_insert_with(|| {
                order.push(r.check.clone());
                [0; 3]
            });
            c[match r.outcome {
                Outcome::Pass => 0,
                Outcome::Fail => 1,
                Outcome::Skipped => 2,
            }] += 1;
        }
        order.into_iter().map(|k| { let c = counts[&k]; (k, c) }).collect()
    }

    /// Compact JSON with one instance or result per line.
    pub fn to_json(&self) -> String {
        let mut s = String::new();
        s.push_str(&format!(
            "{{\"tool_version\":{},\"seed\":{},\n\"instances\":[",
            line(&self.tool_version),
            self.seed
        ));
        push_lines(&mut s, self.instances.iter().map(line));
        s.push_str("],\n\"results\":[");
        push_lines(&mut s, self.results.iter().map(line));
        s.push_str(&format!("],\n\"summary\":{}}}\n", line(&self.summary)));
        s
    }
}

fn push_lines(s: &mut String, items: impl Iterator<Item = String>) {
    let mut first = true;
    for item in items {
        s.push_str(if first { "\n" } else { ",\n" });
        s.push_str(&item);
        first = false;
    }
    if !first {
        s.push('\n');
    }
}

fn line<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("reports serialize")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn layout_is_valid_json() {
        let r = CheckResult {
            check: "x".into(),
            instance: 0,
            outcome: Outcome::Skipped,
            witness: None,
            counterexample: None,
            reason: Some("why".into()),
        };
        let report = SuiteReport::new(7, vec![], vec![r.clone(), r]);
        let text = report.to_json();
        let back: SuiteReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, report);
        assert_eq!(back.summary.skipped, 2);
        assert_eq!(text.lines().count(), 7);
        let empty = SuiteReport::new(0, vec![], vec![]).to_json();
        assert!(serde_json::from_str::<SuiteReport>(&empty).is_ok());
    }
}
