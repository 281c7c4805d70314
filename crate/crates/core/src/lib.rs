//! Finite-dimensional n-inner-product spaces, realized concretely on `C^d`.
//!
//! The base space is `C^d` with the usual inner product (conjugate-linear in
//! the second slot). Fixing `n - 1` linearly independent "anchor" vectors
//! `b_2, ..., b_n` turns the Gram-determinant pairing
//!
//! ```text
//! <x, y | b> = det [ <x,y>    <x,b_j>  ]
//!                  [ <b_i,y>  <b_i,b_j>]
//! ```
//!
//! into an honest semi-inner product whose kernel is exactly
//! `span(b_2, ..., b_n)`. Everything else in the crate is built on top of
//! that pairing: the induced n-norm, b-orthogonality, the Riesz
//! representation of bounded b-linear functionals (both a closed-form
//! projection solver and a constructive null-space solver), and the theory
//! of b-sesquilinear forms (polarization, norm relations, the generalized
//! Schwarz inequality, and operator representation).
//!
//! A small deterministic property-check layer ([`report`], [`rng`]) supports
//! seeded randomized verification of all of the above.

pub mod error;
pub mod functional;
pub mod linalg;
pub mod matrix;
pub mod nspace;
pub mod report;
pub mod rng;
pub mod scalar;
pub mod sesquilinear;
pub mod tolerance;
pub mod vector;

pub use error::{Error, Result};
pub use matrix::Matrix;
pub use scalar::{FieldMode, Scalar};
pub use tolerance::TolerancePolicy;
pub use vector::Vector;
