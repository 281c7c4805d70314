//! Outcome records for seeded verification runs.

use crate::matrix::Matrix;
use crate::scalar::Scalar;
use crate::vector::Vector;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ReportStatus {
    Pass,
    Fail,
    /// An expected-failure regression (e.g. a real-field counterexample kept
    /// on purpose). Fixtures do not fail a run; a fixture that stops failing
    /// is itself reported as a failure.
    Fixture,
}

/// One suite's outcome. Serialized shape:
/// `{"suite", "seed", "trials", "failures", "worst_violation", "witness", "status"}`.
/// Invariant: `failures == 0` exactly when `status == pass`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub suite: String,
    pub seed: u64,
    pub trials: u64,
    pub failures: u64,
    pub worst_violation: f64,
    pub witness: Option<Value>,
    pub status: ReportStatus,
}

impl PropertyReport {
    pub fn passed(&self) -> bool {
        self.status == ReportStatus::Pass
    }

    /// Reinterpret this report as an expected-failure fixture: observed
    /// failures become status `fixture`; a clean pass means the regression
    /// disappeared, which is flagged as a failure in its own right.
    pub fn expect_failure(mut self) -> PropertyReport {
        if self.failures > 0 {
            self.status = ReportStatus::Fixture;
        } else {
            self.failures = 1;
            self.status = ReportStatus::Fail;
            self.witness = Some(json!({
                "fixture": "expected a violation, but the run passed"
            }));
        }
        self
    }
}

/// Accumulates per-check outcomes into a [`PropertyReport`]. The witness is
/// captured lazily for the worst violation seen so far.
#[derive(Debug)]
pub struct ReportBuilder {
    suite: String,
    seed: u64,
    failures: u64,
    worst_violation: f64,
    witness: Option<Value>,
}

impl ReportBuilder {
    pub fn new(suite: &str, seed: u64) -> Self {
        Self {
            suite: suite.to_string(),
            seed,
            failures: 0,
            worst_violation: 0.0,
            witness: None,
        }
    }

    /// Record one check: its normalized violation measure, whether it counts
    /// as a failure, and a lazy description of the inputs involved.
    pub fn record(&mut self, violation: f64, failed: bool, witness: impl FnOnce() -> Value) {
        if failed {
            self.failures += 1;
        }
        if violation > self.worst_violation {
            self.worst_violation = violation;
            self.witness = Some(witness());
        }
    }

    pub fn failures(&self) -> u64 {
        self.failures
    }

    pub fn finish(self, trials: u64) -> PropertyReport {
        let status = if self.failures == 0 {
            ReportStatus::Pass
        } else {
            ReportStatus::Fail
        };
        PropertyReport {
            suite: self.suite,
            seed: self.seed,
            trials,
            failures: self.failures,
            worst_violation: self.worst_violation,
            witness: self.witness,
            status,
        }
    }
}

/// Wire encoding of a scalar: `[re, im]`.
pub fn scalar_json(s: Scalar) -> Value {
    json!([s.re, s.im])
}

/// Wire encoding of a vector: `[[re, im], ...]`.
pub fn vector_json(v: &Vector) -> Value {
    Value::Array(v.entries().iter().map(|&e| scalar_json(e)).collect())
}

/// Wire encoding of a matrix: row-major `[[[re, im], ...], ...]`.
pub fn matrix_json(m: &Matrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array((0..m.cols()).map(|j| scalar_json(m.get(i, j))).collect()))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builder_tracks_worst_violation_and_failures() {
        let mut b = ReportBuilder::new("demo", 3);
        b.record(0.5, false, || json!({"case": 1}));
        b.record(2.0, true, || json!({"case": 2}));
        b.record(1.0, true, || json!({"case": 3}));
        let r = b.finish(10);
        assert_eq!(r.failures, 2);
        assert_eq!(r.worst_violation, 2.0);
        assert_eq!(r.witness, Some(json!({"case": 2})));
        assert_eq!(r.status, ReportStatus::Fail);
        assert_eq!(r.trials, 10);
    }

    #[test]
    fn zero_failures_means_pass() {
        let r = ReportBuilder::new("demo", 0).finish(5);
        assert!(r.passed());
        assert_eq!(r.witness, None);
    }

    #[test]
    fn expect_failure_flips_failing_report_to_fixture() {
        let mut b = ReportBuilder::new("fixture-case", 0);
        b.record(1.0, true, || json!({}));
        let r = b.finish(1).expect_failure();
        assert_eq!(r.status, ReportStatus::Fixture);
        assert_eq!(r.failures, 1);
    }

    #[test]
    fn expect_failure_flags_a_vanished_regression() {
        let r = ReportBuilder::new("fixture-case", 0)
            .finish(1)
            .expect_failure();
        assert_eq!(r.status, ReportStatus::Fail);
        assert_eq!(r.failures, 1);
    }

    #[test]
    fn serialization_shape_is_stable() {
        let r = PropertyReport {
            suite: "axioms".into(),
            seed: 0,
            trials: 2,
            failures: 0,
            worst_violation: 1.5e-12,
            witness: None,
            status: ReportStatus::Pass,
        };
        let s = serde_json::to_string(&r).unwrap();
        assert!(s.contains("\"suite\":\"axioms\""));
        assert!(s.contains("\"witness\":null"));
        assert!(s.contains("\"status\":\"pass\""));
        let back: PropertyReport = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn wire_encodings_are_re_im_pairs() {
        let v = Vector::new(vec![Scalar::new(1.0, -2.0)]).unwrap();
        assert_eq!(vector_json(&v), json!([[1.0, -2.0]]));
        let m = Matrix::identity(1);
        assert_eq!(matrix_json(&m), json!([[[1.0, 0.0]]]));
    }
}
