//! One comparison rule for the whole crate.

use serde::{Deserialize, Serialize};

/// Mixed absolute/relative tolerance. Every approximate comparison in the
/// crate goes through [`TolerancePolicy::approx_eq`] or a margin derived from
/// [`TolerancePolicy::margin`], so tightening or loosening a run means
/// changing exactly one value.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TolerancePolicy {
    pub abs_tol: f64,
    pub rel_tol: f64,
}

impl Default for TolerancePolicy {
    fn default() -> Self {
        Self {
            abs_tol: 1e-9,
            rel_tol: 1e-9,
        }
    }
}

impl TolerancePolicy {
    pub fn new(abs_tol: f64, rel_tol: f64) -> Self {
        assert!(
            abs_tol >= 0.0 && rel_tol >= 0.0 && abs_tol.is_finite() && rel_tol.is_finite(),
            "tolerances must be finite and non-negative"
        );
        Self { abs_tol, rel_tol }
    }

    /// `abs_tol + rel_tol * scale`: the allowed discrepancy at a given scale.
    pub fn margin(&self, scale: f64) -> f64 {
        self.abs_tol + self.rel_tol * scale.abs()
    }

    /// `|a - b| <= abs_tol + rel_tol * max(|a|, |b|)`.
    pub fn approx_eq(&self, a: f64, b: f64) -> bool {
        (a - b).abs() <= self.margin(a.abs().max(b.abs()))
    }

    /// `|a| <= abs_tol + rel_tol * scale`: is `a` zero at the given scale?
    pub fn approx_zero(&self, a: f64, scale: f64) -> bool {
        a.abs() <= self.margin(scale)
    }
}
