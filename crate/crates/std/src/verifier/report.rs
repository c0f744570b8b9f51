use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// Counterexamples beyond this many are counted but not listed.
pub const COUNTEREXAMPLE_CAP: usize = 64;

/// One named check inside a report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Detail {
    pub item: String,
    pub passed: bool,
    #[serde(default)]
    pub values: BTreeMap<String, Value>,
}

impl Detail {
    pub fn new(item: impl Into<String>, passed: bool) -> Detail {
        Detail {
            item: item.into(),
            passed,
            values: BTreeMap::new(),
        }
    }

    pub fn with(mut self, key: &str, value: impl Into<Value>) -> Detail {
        self.values.insert(key.to_string(), value.into());
        self
    }
}

/// Machine-readable outcome of a verification task.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub task: String,
    pub params: BTreeMap<String, Value>,
    pub graphs_examined: u64,
    /// graph6 strings, at most [`COUNTEREXAMPLE_CAP`] of them.
    pub counterexamples: Vec<String>,
    pub counterexample_count: u64,
    pub extremal_hits: u64,
    pub details: Vec<Detail>,
    pub wall_time_ms: u64,
    pub passed: bool,
}

impl Report {
    pub fn new(task: &str) -> Report {
        Report {
            task: task.to_string(),
            params: BTreeMap::new(),
            graphs_examined: 0,
            counterexamples: Vec::new(),
            counterexample_count: 0,
            extremal_hits: 0,
            details: Vec::new(),
            wall_time_ms: 0,
            passed: false,
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> Report {
        self.params.insert(key.to_string(), value.into());
        self
    }

    pub fn push_counterexample(&mut self, graph6: String) {
        self.counterexample_count += 1;
        if self.counterexamples.len() < COUNTEREXAMPLE_CAP {
            self.counterexamples.push(graph6);
        }
    }

    /// Sets `passed` from the counterexamples and details.
    pub fn finish(&mut self, wall_time_ms: u64) {
        self.wall_time_ms = wall_time_ms;
        self.passed = self.counterexample_count == 0 && self.details.iter().all(|d| d.passed);
    }

    pub fn detail(&self, item: &str) -> Option<&Detail> {
        self.details.iter().find(|d| d.item == item)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// The report with the timing zeroed, for comparisons.
    pub fn without_timing(&self) -> Report {
        Report {
            wall_time_ms: 0,
            ..self.clone()
        }
    }

    /// A plain-text rendering with one row per detail.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let status = if self.passed { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "{} [{status}]", self.task);
        for (k, v) in &self.params {
            let _ = writeln!(out, "  {k:<22} {v}");
        }
        let _ = writeln!(out, "  {:<22} {}", "graphs_examined", self.graphs_examined);
        let _ = writeln!(
            out,
            "  {:<22} {}",
            "counterexamples", self.counterexample_count
        );
        let _ = writeln!(out, "  {:<22} {}", "extremal_hits", self.extremal_hits);
        let width = self.details.iter().map(|d| d.item.len()).max().unwrap_or(0);
        for d in &self.details {
            let values: Vec<String> = d.values.iter().map(|(k, v)| format!("{k}={v}")).collect();
            let _ = writeln!(
                out,
                "  {:<width$}  {}  {}",
                d.item,
                if d.passed { "ok  " } else { "FAIL" },
                values.join(" ")
            );
        }
        for g in &self.counterexamples {
            let _ = writeln!(out, "  counterexample {g}");
        }
        out
    }
}

/// Field-level differences between two reports, ignoring wall time.
pub fn diff_reports(a: &Report, b: &Report) -> Vec<String> {
    let to_map = |r: &Report| match serde_json::to_value(r.without_timing()) {
        Ok(Value::Object(m)) => m,
        _ => unreachable!("reports serialize to objects"),
    };
    let (ma, mb) = (to_map(a), to_map(b));
    let mut out = Vec::new();
    for (k, va) in &ma {
        let vb = &mb[k];
        if va != vb {
            out.push(format!("{k}: {va} != {vb}"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pass_requires_clean_details_and_no_counterexamples() {
        let mut r = Report::new("t");
        r.details.push(Detail::new("a", true));
        r.finish(3);
        assert!(r.passed);
        r.push_counterexample("A_".into());
        r.finish(3);
        assert!(!r.passed);
        let mut r = Report::new("t");
        r.details.push(Detail::new("a", false));
        r.finish(0);
        assert!(!r.passed);
    }

    #[test]
    fn counterexamples_are_capped_but_counted() {
        let mut r = Report::new("t");
        for _ in 0..COUNTEREXAMPLE_CAP + 5 {
            r.push_counterexample("A_".into());
        }
        assert_eq!(r.counterexamples.len(), COUNTEREXAMPLE_CAP);
        assert_eq!(r.counterexample_count, COUNTEREXAMPLE_CAP as u64 + 5);
    }

    #[test]
    fn json_round_trip_and_diff() {
        let mut r = Report::new("theorem").param("n", 6);
        r.details.push(Detail::new("x", true).with("q", 8.27));
        r.finish(10);
        let back: Report = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
        let mut later = r.clone();
        later.wall_time_ms = 99;
        assert!(diff_reports(&r, &later).is_empty());
        later.graphs_examined = 1;
        assert_eq!(diff_reports(&r, &later), ["graphs_examined: 0 != 1"]);
        assert!(r.to_table().contains("theorem [PASS]"));
    }
}
