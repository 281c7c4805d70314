//! Wire format for problem instances.
//!
//! Scalars travel as `[re, im]` pairs, vectors as arrays of pairs, matrices
//! as arrays of rows. Anchors are either given explicitly or drawn from a
//! seed; drawn data uses unit-box entries (each component uniform in
//! `[-1, 1)`) with the independence/conditioning policy of
//! [`nhilbert_core::nspace::random_anchor`].

use nhilbert_core::error::{Error, Result};
use nhilbert_core::functional::BLinearFunctional;
use nhilbert_core::nspace::{new_space, random_anchor, NSpace};
use nhilbert_core::rng::trial_rng;
use nhilbert_core::scalar::{scalar, FieldMode};
use nhilbert_core::sesquilinear::BSesquilinearForm;
use nhilbert_core::{Matrix, TolerancePolicy, Vector};
use serde::{Deserialize, Serialize};

/// `[re, im]` on the wire.
pub type WireScalar = (f64, f64);

/// Distinct derivation stream for the anchor draw, so instance generation
/// never collides with any suite's per-trial streams.
const ANCHOR_STREAM: u64 = 0xA11C_4042_0000_0000;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AnchorSource {
    /// `{"seed": 7}`: draw `order - 1` anchor vectors from this seed.
    Seeded { seed: u64 },
    /// Explicit vectors, one array of `[re, im]` pairs per anchor.
    Explicit(Vec<Vec<WireScalar>>),
}

/// A complete, self-contained description of one problem instance.
/// Every field has a default, so `{}` is a valid spec (complex field,
/// dimension 4, order 2, seed 0, anchors drawn from the seed).
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceSpec {
    #[serde(default = "default_dim")]
    pub dim: usize,
    #[serde(default = "default_order")]
    pub order: usize,
    #[serde(default)]
    pub field: FieldMode,
    /// Omitted ⇒ seeded from `seed`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub anchor: Option<AnchorSource>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub functional: Option<Vec<WireScalar>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub form: Option<Vec<Vec<WireScalar>>>,
    /// Omitted ⇒ each suite uses its own documented default.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trials: Option<u64>,
    #[serde(default)]
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tol: Option<TolerancePolicy>,
}

fn default_dim() -> usize {
    4
}

fn default_order() -> usize {
    2
}

impl Default for InstanceSpec {
    fn default() -> Self {
        Self {
            dim: default_dim(),
            order: default_order(),
            field: FieldMode::default(),
            anchor: None,
            functional: None,
            form: None,
            trials: None,
            seed: 0,
            tol: None,
        }
    }
}

impl InstanceSpec {
    pub fn tolerance(&self) -> TolerancePolicy {
        self.tol.unwrap_or_default()
    }

    pub fn effective_trials(&self, suite_default: u64) -> u64 {
        self.trials.unwrap_or(suite_default)
    }

    /// True when the instance spec pins concrete data (anchor, functional,
    /// or form)
    /// instead of asking for random sweeps.
    pub fn is_explicit(&self) -> bool {
        matches!(self.anchor, Some(AnchorSource::Explicit(_)))
            || self.functional.is_some()
            || self.form.is_some()
    }
}

pub fn vector_from_wire(entries: &[WireScalar]) -> Result<Vector> {
    Vector::new(entries.iter().map(|&(re, im)| scalar(re, im)).collect())
}

pub fn matrix_from_wire(rows: &[Vec<WireScalar>]) -> Result<Matrix> {
    if rows.is_empty() {
        return Err(Error::InvalidSpec("matrix needs at least one row".into()));
    }
    let cols = rows[0].len();
    let mut data = Vec::with_capacity(rows.len() * cols);
    for row in rows {
        if row.len() != cols {
            return Err(Error::InvalidSpec(format!(
                "ragged matrix: row of length {} in a {}-column matrix",
                row.len(),
                cols
            )));
        }
        data.extend(row.iter().map(|&(re, im)| scalar(re, im)));
    }
    Matrix::new(rows.len(), cols, data)
}

pub fn vector_to_wire(v: &Vector) -> Vec<WireScalar> {
    v.entries().iter().map(|s| (s.re, s.im)).collect()
}

/// The concrete objects a spec describes.
#[derive(Debug, Clone)]
pub struct GeneratedInstance {
    pub space: NSpace,
    pub functional: Option<BLinearFunctional>,
    pub form: Option<BSesquilinearForm>,
}

/// Deterministically realize a spec. Identical specs produce bitwise
/// identical instances.
pub fn generate_instance(spec: &InstanceSpec) -> Result<GeneratedInstance> {
    let tol = spec.tolerance();
    let anchors = match &spec.anchor {
        Some(AnchorSource::Explicit(rows)) => {
            let mut vs = Vec::with_capacity(rows.len());
            for row in rows {
                vs.push(vector_from_wire(row)?);
            }
            vs
        }
        Some(AnchorSource::Seeded { seed }) => draw_anchor(*seed, spec)?,
        None => draw_anchor(spec.seed, spec)?,
    };
    let space = new_space(spec.dim, spec.order, &anchors, tol)?;

    let functional = match &spec.functional {
        Some(entries) => {
            let coeffs = vector_from_wire(entries)?;
            if coeffs.dim() != spec.dim {
                return Err(Error::DimensionMismatch {
                    expected: spec.dim,
                    got: coeffs.dim(),
                });
            }
            Some(BLinearFunctional::new(coeffs))
        }
        None => None,
    };

    let form = match &spec.form {
        Some(rows) => {
            let m = matrix_from_wire(rows)?;
            if m.rows() != spec.dim || m.cols() != spec.dim {
                return Err(Error::DimensionMismatch {
                    expected: spec.dim,
                    got: m.rows().max(m.cols()),
                });
            }
            Some(BSesquilinearForm::new(m)?)
        }
        None => None,
    };

    Ok(GeneratedInstance {
        space,
        functional,
        form,
    })
}

fn draw_anchor(seed: u64, spec: &InstanceSpec) -> Result<Vec<Vector>> {
    if spec.order < 2 || spec.dim < spec.order {
        return Err(Error::InvalidSpec(format!(
            "need dim >= order >= 2, got dim={}, order={}",
            spec.dim, spec.order
        )));
    }
    let mut rng = trial_rng(seed, ANCHOR_STREAM);
    random_anchor(&mut rng, spec.dim, spec.order, spec.field)
}
