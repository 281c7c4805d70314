//! Dense complex vectors with validated construction.

use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};
use std::ops::{Add, Index, Neg, Sub};

/// A vector in `C^d`, `d >= 1`, with all entries finite. Construction is the
/// only validation point; once a `Vector` exists the numeric code trusts it.
#[derive(Debug, Clone, PartialEq)]
pub struct Vector {
    entries: Vec<Scalar>,
}

impl Vector {
    pub fn new(entries: Vec<Scalar>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidSpec(
                "vector dimension must be positive".into(),
            ));
        }
        if !entries.iter().all(|&e| scalar::is_finite(e)) {
            return Err(Error::NonFinite);
        }
        Ok(Self { entries })
    }

    pub fn from_real(entries: &[f64]) -> Result<Self> {
        Self::new(entries.iter().map(|&r| scalar::real(r)).collect())
    }

    pub fn zeros(dim: usize) -> Self {
        assert!(dim > 0, "vector dimension must be positive");
        Self {
            entries: vec![scalar::ZERO; dim],
        }
    }

    /// Standard basis vector `e_i` (zero-based index).
    pub fn basis(dim: usize, i: usize) -> Self {
        assert!(i < dim, "basis index {i} out of range for dimension {dim}");
        let mut v = Self::zeros(dim);
        v.entries[i] = scalar::ONE;
        v
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub(crate) fn entries_mut(&mut self) -> &mut [Scalar] {
        &mut self.entries
    }

    /// Base inner product `<u, v> = sum_t u_t * conj(v_t)`: linear in the
    /// first slot, conjugate-linear in the second.
    pub fn dot(&self, other: &Vector) -> Result<Scalar> {
        self.check_dim(other.dim())?;
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&u, &v)| u * v.conj())
            .sum())
    }

    /// Plain bilinear pairing `sum_t u_t * v_t` (no conjugation anywhere).
    pub fn dot_unconjugated(&self, other: &Vector) -> Result<Scalar> {
        self.check_dim(other.dim())?;
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&u, &v)| u * v)
            .sum())
    }

    /// Euclidean norm in the base space.
    pub fn norm(&self) -> f64 {
        self.entries
            .iter()
            .map(|e| e.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.entries.iter().map(|e| e.norm()).fold(0.0, f64::max)
    }

    pub fn conj(&self) -> Vector {
        Vector {
            entries: self.entries.iter().map(|e| e.conj()).collect(),
        }
    }

    pub fn scale(&self, a: Scalar) -> Vector {
        Vector {
            entries: self.entries.iter().map(|&e| e * a).collect(),
        }
    }

    /// True when every imaginary part is at most `tol` in magnitude.
    pub fn is_real_within(&self, tol: f64) -> bool {
        self.entries.iter().all(|e| e.im.abs() <= tol)
    }

    fn check_dim(&self, got: usize) -> Result<()> {
        if self.dim() != got {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got,
            });
        }
        Ok(())
    }
}

impl Index<usize> for Vector {
    type Output = Scalar;

    fn index(&self, i: usize) -> &Scalar {
        &self.entries[i]
    }
}

impl Add for &Vector {
    type Output = Vector;

    fn add(self, rhs: &Vector) -> Vector {
        assert_eq!(self.dim(), rhs.dim(), "vector dimensions must agree");
        Vector {
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(&a, &b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Vector {
    type Output = Vector;

    fn sub(self, rhs: &Vector) -> Vector {
        assert_eq!(self.dim(), rhs.dim(), "vector dimensions must agree");
        Vector {
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(&a, &b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &Vector {
    type Output = Vector;

    fn neg(self) -> Vector {
        self.scale(crate::scalar::real(-1.0))
    }
}
