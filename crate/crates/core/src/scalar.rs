//! Scalar type and field-mode tagging.
//!
//! All arithmetic runs over `Complex<f64>`; "real mode" is a restriction on
//! the *data* (zero imaginary parts everywhere), not a second scalar type.
//! That keeps every code path identical across the two modes and makes the
//! real counterexamples (where a complex identity genuinely fails) easy to
//! express.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

pub type Scalar = Complex64;

/// The imaginary unit.
pub const IM: Scalar = Scalar { re: 0.0, im: 1.0 };

pub const ZERO: Scalar = Scalar { re: 0.0, im: 0.0 };
pub const ONE: Scalar = Scalar { re: 1.0, im: 0.0 };

#[inline]
pub fn scalar(re: f64, im: f64) -> Scalar {
    Scalar::new(re, im)
}

#[inline]
pub fn real(re: f64) -> Scalar {
    Scalar::new(re, 0.0)
}

#[inline]
pub fn is_finite(s: Scalar) -> bool {
    s.re.is_finite() && s.im.is_finite()
}

/// Which field the instance data lives over.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FieldMode {
    Real,
    #[default]
    Complex,
}

impl FieldMode {
    pub fn is_real(self) -> bool {
        matches!(self, FieldMode::Real)
    }
}

impl std::fmt::Display for FieldMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FieldMode::Real => write!(f, "real"),
            FieldMode::Complex => write!(f, "complex"),
        }
    }
}

impl std::str::FromStr for FieldMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "real" => Ok(FieldMode::Real),
            "complex" => Ok(FieldMode::Complex),
            other => Err(format!(
                "unknown field mode `{other}` (expected real|complex)"
            )),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_mode_round_trips_through_serde() {
        let m: FieldMode = serde_json::from_str("\"real\"").unwrap();
        assert_eq!(m, FieldMode::Real);
        assert_eq!(
            serde_json::to_string(&FieldMode::Complex).unwrap(),
            "\"complex\""
        );
    }

    #[test]
    fn finiteness_checks_both_components() {
        assert!(is_finite(scalar(1.0, -2.0)));
        assert!(!is_finite(scalar(f64::NAN, 0.0)));
        assert!(!is_finite(scalar(0.0, f64::INFINITY)));
    }
}
