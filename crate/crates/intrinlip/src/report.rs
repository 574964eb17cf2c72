//! Self-describing check reports.
//!
//! A suite run produces one [`CheckReport`]: the group/map/seed/tolerances
//! needed to reproduce it, plus one [`CheckRecord`] per verified property.
//! A record's `worst_margin` is the largest excess `lhs − rhs` seen over its
//! sample (clamped at zero, so a passing check reports 0). Suites pass only
//! with zero violations. Serialization uses sorted maps and struct order
//! only, so identical runs serialize identically; `wall_ms` is the one field
//! excluded from determinism comparisons.

use crate::tol::Tolerances;
use serde::Serialize;
use std::collections::BTreeMap;

/// Outcome of one named check.
#[derive(Debug, Clone, Serialize)]
pub struct CheckRecord {
    pub id: String,
    /// The inequality or identity being checked, in formula form.
    pub anchor: String,
    pub samples: u64,
    pub skipped: u64,
    pub violations: u64,
    pub worst_margin: f64,
    pub constants: BTreeMap<String, f64>,
}

impl CheckRecord {
    pub fn new(id: impl Into<String>, anchor: impl Into<String>) -> Self {
        CheckRecord {
            id: id.into(),
            anchor: anchor.into(),
            samples: 0,
            skipped: 0,
            violations: 0,
            worst_margin: 0.0,
            constants: BTreeMap::new(),
        }
    }

    /// Record one sample with its violation excess (`lhs − rhs`); positive
    /// excess counts as a violation.
    pub fn tally(&mut self, excess: f64) {
        self.samples += 1;
        if excess > 0.0 {
            self.violations += 1;
            self.worst_margin = self.worst_margin.max(sanitize(excess));
        }
    }

    /// Record a sample that must hold outright.
    pub fn require(&mut self, ok: bool) {
        self.tally(if ok { -1.0 } else { 1.0 });
    }

    pub fn skip(&mut self, count: u64) {
        self.skipped += count;
    }

    pub fn constant(&mut self, name: impl Into<String>, value: f64) -> &mut Self {
        self.constants.insert(name.into(), sanitize(value));
        self
    }

    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

/// JSON cannot carry IEEE infinities; clamp them to a sentinel magnitude.
fn sanitize(x: f64) -> f64 {
    if x.is_nan() {
        return -1e308;
    }
    x.clamp(-1e308, 1e308)
}

/// One suite run.
#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub suite: String,
    pub group: String,
    pub map: Option<String>,
    pub seed: u64,
    pub samples: u64,
    pub exhaustive: bool,
    pub sample_box: String,
    pub tolerances: Tolerances,
    pub checks: Vec<CheckRecord>,
    pub violations_total: u64,
    pub wall_ms: u64,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.violations_total == 0
    }

    /// Recompute the aggregate violation count from the records.
    pub fn finalize(&mut self) {
        self.violations_total = self.checks.iter().map(|c| c.violations).sum();
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    /// One human-readable line per check.
    pub fn summary_lines(&self) -> Vec<String> {
        self.checks
            .iter()
            .map(|c| {
                format!(
                    "{} {:<32} samples={} skipped={} violations={} worst={:.3e}",
                    if c.passed() { "PASS" } else { "FAIL" },
                    c.id,
                    c.samples,
                    c.skipped,
                    c.violations,
                    c.worst_margin
                )
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tally_counts_violations_and_margins() {
        let mut rec = CheckRecord::new("demo", "lhs <= rhs");
        rec.tally(-0.5);
        rec.tally(0.25);
        rec.tally(0.75);
        assert_eq!(rec.samples, 3);
        assert_eq!(rec.violations, 2);
        assert_eq!(rec.worst_margin, 0.75);
        assert!(!rec.passed());
    }

    #[test]
    fn report_json_has_no_nonfinite_values() {
        let mut rec = CheckRecord::new("demo", "x");
        rec.constant("inf", f64::INFINITY);
        rec.tally(f64::INFINITY);
        let mut report = CheckReport {
            suite: "s".into(),
            group: "g".into(),
            map: None,
            seed: 0,
            samples: 0,
            exhaustive: false,
            sample_box: "[-1,1]".into(),
            tolerances: Tolerances::default(),
            checks: vec![rec],
            violations_total: 0,
            wall_ms: 0,
        };
        report.finalize();
        assert_eq!(report.violations_total, 1);
        let json = report.to_json();
        assert!(!json.contains("null"), "infinities must be clamped: {json}");
    }
}
