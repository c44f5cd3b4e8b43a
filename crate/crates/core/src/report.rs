//! Structured pass/fail records for named verification checks.

use std::fmt;
use std::time::Duration;

use serde::Serialize;
use serde_json::{json, Value};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Discrepancy,
    Inconclusive,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Discrepancy => "discrepancy",
            Status::Inconclusive => "inconclusive",
            Status::Fail => "fail",
        })
    }
}

/// One named comparison inside a report.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct Detail {
    pub name: String,
    pub computed: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<Value>,
    pub ok: bool,
}

/// Outcome of one named check.
///
/// `status` is the worst outcome recorded: any failed comparison makes the
/// check fail; inconclusive and discrepancy marks only apply otherwise.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct VerificationReport {
    pub check: String,
    pub status: Status,
    pub anchor: String,
    pub details: Vec<Detail>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn new(check: &str, anchor: &str) -> Self {
        VerificationReport {
            check: check.to_string(),
            status: Status::Pass,
            anchor: anchor.to_string(),
            details: Vec::new(),
            witness: None,
            elapsed: Duration::ZERO,
        }
    }

    fn escalate(&mut self, s: Status) {
        self.status = self.status.max(s);
    }

    /// Records a computed value with no expectation attached.
    pub fn note(&mut self, name: &str, computed: Value) {
        self.details.push(Detail { name: name.to_string(), computed, expected: None, ok: true });
    }

    /// Records a boolean assertion.
    pub fn assert(&mut self, name: &str, ok: bool) -> bool {
        self.details.push(Detail { name: name.to_string(), computed: json!(ok), expected: Some(json!(true)), ok });
        if !ok {
            self.escalate(Status::Fail);
        }
        ok
    }

    /// Records an exact comparison of textual renderings.
    pub fn expect_eq(&mut self, name: &str, computed: &str, expected: &str) -> bool {
        self.expect_value(name, json!(computed), json!(expected))
    }

    pub fn expect_value(&mut self, name: &str, computed: Value, expected: Value) -> bool {
        let ok = computed == expected;
        self.details.push(Detail { name: name.to_string(), computed, expected: Some(expected), ok });
        if !ok {
            self.escalate(Status::Fail);
        }
        ok
    }

    /// A comparison whose mismatch is a discrepancy rather than a failure.
    pub fn diff_value(&mut self, name: &str, computed: Value, expected: Value) -> bool {
        let ok = computed == expected;
        self.details.push(Detail { name: name.to_string(), computed, expected: Some(expected), ok });
        if !ok {
            self.escalate(Status::Discrepancy);
        }
        ok
    }

    pub fn fail(&mut self, name: &str, reason: &str) {
        self.details.push(Detail { name: name.to_string(), computed: json!(reason), expected: None, ok: false });
        self.escalate(Status::Fail);
    }

    pub fn inconclusive(&mut self, name: &str, reason: &str) {
        self.details.push(Detail { name: name.to_string(), computed: json!(reason), expected: None, ok: false });
        self.escalate(Status::Inconclusive);
    }

    pub fn set_witness(&mut self, witness: Value) {
        self.witness = Some(witness);
    }

    pub fn finish(self) -> Self {
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// One JSON object per line; byte-identical for identical inputs.
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn to_json_line_with_timing(&self) -> String {
        let mut v = serde_json::to_value(self).expect("report serializes");
        v["elapsed_ms"] = json!(self.elapsed.as_millis() as u64);
        v.to_string()
    }

    pub fn to_text(&self, verbose: bool) -> String {
        let mut out = format!("[{}] {} ({}) {:.3}s\n", self.status, self.check, self.anchor, self.elapsed.as_secs_f64());
        for d in &self.details {
            if verbose || !d.ok {
                let mark = if d.ok { "ok " } else { "BAD" };
                match &d.expected {
                    Some(e) => out.push_str(&format!("  {mark} {}: {} (expected {})\n", d.name, render(&d.computed), render(e))),
                    None => out.push_str(&format!("  {mark} {}: {}\n", d.name, render(&d.computed))),
                }
            }
        }
        out
    }
}

fn render(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
