use std::fmt::Write;

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Row {
    pub group: String,
    pub check: String,
    pub expected: Value,
    pub computed: Value,
    pub pass: bool,
}

impl Row {
    pub fn new(group: &str, check: &str, expected: Value, computed: Value, pass: bool) -> Self {
        Row { group: group.to_string(), check: check.to_string(), expected, computed, pass }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    /// Entries that were checked (including those that failed to build).
    pub entries: usize,
    /// Entries above the order bound.
    pub skipped: usize,
    pub checks: usize,
    pub passed: usize,
    pub failed: usize,
    /// Entries whose construction or analysis failed.
    pub errors: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct VerificationReport {
    pub rows: Vec<Row>,
    pub summary: Summary,
}

impl VerificationReport {
    /// Sorts rows and recomputes the pass/fail counts.
    pub(crate) fn finish(&mut self) {
        self.rows.sort_by(|a, b| (&a.group, &a.check).cmp(&(&b.group, &b.check)));
        self.summary.checks = self.rows.len();
        self.summary.passed = self.rows.iter().filter(|r| r.pass).count();
        self.summary.failed = self.summary.checks - self.summary.passed;
    }

    pub(crate) fn from_rows(rows: Vec<Row>) -> Self {
        let mut report = VerificationReport { rows, summary: Summary::default() };
        report.finish();
        report
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &Row> {
        self.rows.iter().filter(|r| !r.pass)
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }

    /// Fixed-width table, one line per row, followed by a summary line.
    pub fn to_table(&self) -> String {
        let cells: Vec<[String; 5]> = self
            .rows
            .iter()
            .map(|r| {
                [
                    r.group.clone(),
                    r.check.clone(),
                    compact(&r.expected),
                    compact(&r.computed),
                    if r.pass { "PASS" } else { "FAIL" }.to_string(),
                ]
            })
            .collect();
        let header = ["GROUP", "CHECK", "EXPECTED", "COMPUTED", "RESULT"].map(String::from);
        let mut widths = header.clone().map(|h| h.len());
        for row in &cells {
            for (w, c) in widths.iter_mut().zip(row) {
                *w = (*w).max(c.len());
            }
        }
        let mut out = String::new();
        for row in std::iter::once(&header).chain(&cells) {
            let line: Vec<String> = row.iter().zip(widths).map(|(c, w)| format!("{c:<w$}")).collect();
            writeln!(out, "{}", line.join("  ").trim_end()).unwrap();
        }
        let s = &self.summary;
        writeln!(
            out,
            "{} entries ({} skipped, {} errors), {} checks: {} passed, {} failed",
            s.entries, s.skipped, s.errors, s.checks, s.passed, s.failed
        )
        .unwrap();
        out
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
