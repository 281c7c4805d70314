//! Concrete n-inner-product spaces on `C^d`.
//!
//! An [`NSpace`] fixes `n - 1` independent anchor vectors `b_2, ..., b_n`.
//! The pairing `<x, y | b_2, ..., b_n>` is the determinant of the bordered
//! Gram matrix (first row pairs `x` against `y` and the anchors; remaining
//! rows pair the anchors against everything). Expanding that determinant
//! shows it equals `g * <P x, P y>`, where `P` projects onto the orthogonal
//! complement of the anchor span and `g` is the anchor Gram determinant —
//! so the same value is computable along two genuinely different routes
//! (cofactor expansion vs. projection), which the verification suites
//! exploit as an internal oracle.

use crate::error::{Error, Result};
use crate::linalg;
use crate::matrix::Matrix;
use crate::report::{PropertyReport, ReportBuilder};
use crate::rng::{self, TrialRng};
use crate::scalar::{real, FieldMode, Scalar};
use crate::tolerance::TolerancePolicy;
use crate::vector::Vector;
use serde_json::json;

/// The fixed trailing tuple with its derived quantities.
#[derive(Debug, Clone)]
pub struct Anchor {
    /// `n`: the pairing takes `n - 1` trailing vectors.
    order: usize,
    vectors: Vec<Vector>,
    /// `g = det(gram(vectors))`, strictly positive for independent anchors.
    gram_det: f64,
    /// Orthogonal projector onto the complement of the anchor span.
    projector: Matrix,
}

impl Anchor {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn vectors(&self) -> &[Vector] {
        &self.vectors
    }

    pub fn gram_det(&self) -> f64 {
        self.gram_det
    }

    pub fn projector(&self) -> &Matrix {
        &self.projector
    }
}

#[derive(Debug, Clone)]
pub struct NSpace {
    dim: usize,
    order: usize,
    anchor: Anchor,
    /// `G = g * P`: the semi-metric in matrix form.
    metric: Matrix,
    tol: TolerancePolicy,
}

/// Minimum allowed ratio `sigma_min / sigma_max` when drawing random
/// anchors: keeps conditioning bounded so determinant- and projection-route
/// evaluations agree to the advertised tolerances.
pub const ANCHOR_CONDITION_MARGIN: f64 = 1e-2;
const ANCHOR_RESAMPLE_BUDGET: usize = 16;

/// Violation magnitude recorded when a check errors out instead of merely
/// exceeding tolerance (keeps report numbers JSON-finite).
const STRUCTURAL_VIOLATION: f64 = 1e12;

/// Build the space for `n - 1` anchor vectors in dimension `d`.
pub fn new_space(
    dim: usize,
    order: usize,
    anchor_vectors: &[Vector],
    tol: TolerancePolicy,
) -> Result<NSpace> {
    if order < 2 || dim < order {
        return Err(Error::InvalidSpec(format!(
            "need dim >= order >= 2, got dim={dim}, order={order}"
        )));
    }
    if anchor_vectors.len() != order - 1 {
        return Err(Error::DimensionMismatch {
            expected: order - 1,
            got: anchor_vectors.len(),
        });
    }
    for v in anchor_vectors {
        if v.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: v.dim(),
            });
        }
    }

    // Independence: numerical rank of the stacked anchors must be n - 1.
    let stacked = Matrix::from_cols(anchor_vectors)?;
    let dec = linalg::svd(&stacked);
    if linalg::numerical_rank(&dec.sigma, &tol) < order - 1 {
        return Err(Error::DegenerateAnchor);
    }

    let gram = linalg::gram_matrix(anchor_vectors)?;
    let gdet = linalg::det(&gram)?;
    let scale_sq = anchor_vectors
        .iter()
        .map(|v| 1.0 + v.norm().powi(2))
        .product::<f64>();
    if gdet.im.abs() > tol.margin(scale_sq) {
        return Err(Error::NumericalBreakdown(format!(
            "anchor Gram determinant has imaginary part {}",
            gdet.im
        )));
    }
    let g = gdet.re;
    if g <= 0.0 {
        return Err(Error::DegenerateAnchor);
    }

    let projector = linalg::orthogonal_projector(dim, anchor_vectors, &tol)?;
    let metric = projector.scale(real(g));

    let space = NSpace {
        dim,
        order,
        anchor: Anchor {
            order,
            vectors: anchor_vectors.to_vec(),
            gram_det: g,
            projector,
        },
        metric,
        tol,
    };
    space.validate_structure()?;
    Ok(space)
}

impl NSpace {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn anchor(&self) -> &Anchor {
        &self.anchor
    }

    pub fn gram_det(&self) -> f64 {
        self.anchor.gram_det
    }

    pub fn projector(&self) -> &Matrix {
        &self.anchor.projector
    }

    pub fn metric(&self) -> &Matrix {
        &self.metric
    }

    pub fn tol(&self) -> &TolerancePolicy {
        &self.tol
    }

    /// `P x`: the component of `x` orthogonal to the anchor span.
    pub fn project(&self, x: &Vector) -> Vector {
        self.anchor.projector.mul_vec(x)
    }

    fn check_dim(&self, v: &Vector) -> Result<()> {
        if v.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: v.dim(),
            });
        }
        Ok(())
    }

    /// The semi-metric must be Hermitian, positive semidefinite, and of rank
    /// `d - (n - 1)` — checked spectrally once at construction.
    fn validate_structure(&self) -> Result<()> {
        let p = &self.anchor.projector;
        if p.hermitian_defect() > self.tol.margin(1.0) {
            return Err(Error::NumericalBreakdown(
                "projector is not Hermitian".into(),
            ));
        }
        let eig = linalg::hermitian_eigen(p)?;
        let mut rank = 0usize;
        for &v in &eig.values {
            if v < -self.tol.margin(1.0) || v > 1.0 + self.tol.margin(1.0) {
                return Err(Error::NumericalBreakdown(format!(
                    "projector eigenvalue {v} outside [0, 1]"
                )));
            }
            if v > 0.5 {
                rank += 1;
            }
        }
        let expected = self.dim - (self.order - 1);
        if rank != expected {
            return Err(Error::NumericalBreakdown(format!(
                "semi-metric rank {rank}, expected {expected}"
            )));
        }
        Ok(())
    }
}

/// The pairing against an arbitrary trailing tuple: the determinant of the
/// bordered Gram matrix. No independence is required of `trailing`;
/// dependent tuples produce (exactly) zero determinants.
pub fn n_inner_general(x: &Vector, y: &Vector, trailing: &[Vector]) -> Result<Scalar> {
    let d = x.dim();
    if y.dim() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            got: y.dim(),
        });
    }
    for t in trailing {
        if t.dim() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                got: t.dim(),
            });
        }
    }
    let k = trailing.len();
    let mut m = Matrix::zeros(k + 1, k + 1);
    m.set(0, 0, x.dot(y)?);
    for (j, t) in trailing.iter().enumerate() {
        m.set(0, j + 1, x.dot(t)?);
        m.set(j + 1, 0, t.dot(y)?);
    }
    for (i, ti) in trailing.iter().enumerate() {
        for (j, tj) in trailing.iter().enumerate() {
            m.set(i + 1, j + 1, ti.dot(tj)?);
        }
    }
    linalg::det(&m)
}

/// Anchored pairing via the determinant formula.
pub fn n_inner(space: &NSpace, x: &Vector, y: &Vector) -> Result<Scalar> {
    space.check_dim(x)?;
    space.check_dim(y)?;
    n_inner_general(x, y, &space.anchor.vectors)
}

/// Anchored pairing via the projection formula — the independent oracle
/// route: `y† G x` with `G = g * P`.
pub fn metric_inner(space: &NSpace, x: &Vector, y: &Vector) -> Result<Scalar> {
    space.check_dim(x)?;
    space.check_dim(y)?;
    space.metric.mul_vec(x).dot(y)
}

/// The anchored seminorm `sqrt(<x, x | anchors>)`, with negative round-off
/// clamped to zero when within tolerance of it.
pub fn n_norm(space: &NSpace, x: &Vector) -> Result<f64> {
    space.check_dim(x)?;
    let v = n_inner(space, x, x)?;
    let scale = space.gram_det() * x.norm().powi(2);
    sqrt_clamped(v, scale, &space.tol)
}

/// Seminorm of the general (unanchored) tuple `(x, trailing...)`.
pub fn n_norm_general(x: &Vector, trailing: &[Vector], tol: &TolerancePolicy) -> Result<f64> {
    let v = n_inner_general(x, x, trailing)?;
    let scale = (1.0 + x.norm().powi(2))
        * trailing
            .iter()
            .map(|t| 1.0 + t.norm().powi(2))
            .product::<f64>();
    sqrt_clamped(v, scale, tol)
}

fn sqrt_clamped(v: Scalar, scale: f64, tol: &TolerancePolicy) -> Result<f64> {
    let margin = tol.margin(scale);
    if v.im.abs() > margin {
        return Err(Error::NumericalBreakdown(format!(
            "self-pairing has imaginary part {} at scale {scale}",
            v.im
        )));
    }
    if v.re < 0.0 {
        if -v.re <= margin {
            return Ok(0.0);
        }
        return Err(Error::NumericalBreakdown(format!(
            "self-pairing {} negative beyond tolerance at scale {scale}",
            v.re
        )));
    }
    Ok(v.re.sqrt())
}

/// `<x, y | anchors> = 0` up to a margin scaled by the two seminorms.
pub fn is_b_orthogonal(space: &NSpace, x: &Vector, y: &Vector) -> Result<bool> {
    let v = n_inner(space, x, y)?;
    let scale = n_norm(space, x)? * n_norm(space, y)?;
    Ok(v.norm() <= space.tol.margin(scale))
}

/// Orthonormal basis of `{x : <x, s | anchors> = 0 for all s in S}`.
/// The anchor span is always inside (it is the kernel of the semi-metric).
pub fn b_orthogonal_complement(space: &NSpace, s: &[Vector]) -> Result<Vec<Vector>> {
    for v in s {
        space.check_dim(v)?;
    }
    // <x, s | b> = g * (P s)† x, so each s contributes the row conj(P s) —
    // unless P s vanishes (s in the anchor span), which constrains nothing.
    let mut rows = Vec::new();
    for v in s {
        let pv = space.project(v);
        if pv.norm() > space.tol.margin(v.norm()) {
            rows.push(pv.conj());
        }
    }
    if rows.is_empty() {
        return Ok((0..space.dim)
            .map(|i| Vector::basis(space.dim, i))
            .collect());
    }
    let c = Matrix::from_rows(&rows)?;
    Ok(linalg::null_space_basis(&c, &space.tol))
}

/// Split `x = proj + resid` with `proj` in `span(W) + span(anchors)` and
/// `resid` in `range(P)`, b-orthogonal to every `w` in `W`.
pub fn b_decompose(space: &NSpace, x: &Vector, w: &[Vector]) -> Result<(Vector, Vector)> {
    space.check_dim(x)?;
    for v in w {
        space.check_dim(v)?;
    }
    let xp = space.project(x);
    let xa = x - &xp;
    let mut pw = Vec::new();
    for v in w {
        let p = space.project(v);
        if p.norm() > space.tol.margin(v.norm()) {
            pw.push(p);
        }
    }
    let q = if pw.is_empty() {
        Vector::zeros(space.dim)
    } else {
        // Orthogonal projection of xp onto span(P w): complement of the
        // complement.
        let away = linalg::orthogonal_projector(space.dim, &pw, &space.tol)?;
        &xp - &away.mul_vec(&xp)
    };
    let resid = &xp - &q;
    let proj = &q + &xa;
    Ok((proj, resid))
}

/// Draw an anchor tuple with entries uniform in the unit box, resampling
/// (up to a small budget) until the stacked vectors are well-conditioned:
/// `sigma_min / sigma_max >= ANCHOR_CONDITION_MARGIN`.
pub fn random_anchor(
    rng: &mut TrialRng,
    dim: usize,
    order: usize,
    mode: FieldMode,
) -> Result<Vec<Vector>> {
    assert!(order >= 2 && dim >= order, "need dim >= order >= 2");
    for _ in 0..ANCHOR_RESAMPLE_BUDGET {
        let vs: Vec<Vector> = (0..order - 1)
            .map(|_| rng::random_vector(rng, dim, mode))
            .collect();
        let dec = linalg::svd(&Matrix::from_cols(&vs)?);
        let top = dec.sigma[0];
        let bottom = dec.sigma[dec.sigma.len() - 1];
        if top > 0.0 && bottom >= ANCHOR_CONDITION_MARGIN * top {
            return Ok(vs);
        }
    }
    Err(Error::DegenerateAnchor)
}

/// Convenience: a random well-conditioned space.
pub fn random_space(
    rng: &mut TrialRng,
    dim: usize,
    order: usize,
    mode: FieldMode,
    tol: TolerancePolicy,
) -> Result<NSpace> {
    let anchors = random_anchor(rng, dim, order, mode)?;
    new_space(dim, order, &anchors, tol)
}

/// Seeded randomized check of everything the pairing must satisfy:
/// linearity and conjugate symmetry, trailing-permutation invariance,
/// dependent-tuple degeneracy (with the rank-deficiency converse surrogate),
/// seminorm homogeneity and triangle inequality, Schwarz, and the
/// parallelogram identity. Dimensions and orders are drawn per trial from
/// the supplied menus (pairs with `dim < order` are skipped).
pub fn check_axioms(
    seed: u64,
    trials: u64,
    dims: &[usize],
    orders: &[usize],
    mode: FieldMode,
    tol: TolerancePolicy,
) -> PropertyReport {
    let pairs: Vec<(usize, usize)> = dims
        .iter()
        .flat_map(|&d| orders.iter().map(move |&n| (d, n)))
        .filter(|&(d, n)| n >= 2 && d >= n)
        .collect();
    let mut builder = ReportBuilder::new("axioms", seed);
    if pairs.is_empty() {
        return builder.finish(0);
    }
    for t in 0..trials {
        let mut rng = rng::trial_rng(seed, t);
        let (d, n) = pairs[rand::Rng::random_range(&mut rng, 0..pairs.len())];
        match axiom_trial(&mut rng, d, n, mode, tol, t, &mut builder) {
            Ok(()) => {}
            Err(e) => builder.record(
                STRUCTURAL_VIOLATION,
                true,
                || json!({"trial": t, "error": e.to_string()}),
            ),
        }
    }
    builder.finish(trials)
}

fn axiom_trial(
    rng: &mut TrialRng,
    d: usize,
    n: usize,
    mode: FieldMode,
    tol: TolerancePolicy,
    trial: u64,
    builder: &mut ReportBuilder,
) -> Result<()> {
    let space = random_space(rng, d, n, mode, tol)?;
    let g = space.gram_det();
    let x = rng::random_vector(rng, d, mode);
    let y = rng::random_vector(rng, d, mode);
    let z = rng::random_vector(rng, d, mode);
    let alpha = rng::random_scalar(rng, mode);

    let mut check = |name: &str, diff: f64, scale: f64| {
        let failed = diff > tol.margin(scale);
        builder.record(diff / (1.0 + scale), failed, || {
            json!({
                "trial": trial, "check": name, "dim": d, "order": n,
                "diff": diff, "scale": scale,
            })
        });
    };

    let vol = |vs: &[&Vector]| -> f64 { g * vs.iter().map(|v| 1.0 + v.norm()).product::<f64>() };

    // Additivity in the first slot.
    let sum_inner = n_inner(&space, &(&x + &y), &z)?;
    let split = n_inner(&space, &x, &z)? + n_inner(&space, &y, &z)?;
    check(
        "inner_additive",
        (sum_inner - split).norm(),
        vol(&[&x, &y, &z]),
    );

    // Homogeneity in the first slot.
    let scaled = n_inner(&space, &x.scale(alpha), &z)?;
    let lin = alpha * n_inner(&space, &x, &z)?;
    check(
        "inner_homogeneous",
        (scaled - lin).norm(),
        vol(&[&x, &z]) * (1.0 + alpha.norm()),
    );

    // Conjugate symmetry.
    let xy = n_inner(&space, &x, &y)?;
    let yx = n_inner(&space, &y, &x)?;
    check(
        "conjugate_symmetry",
        (xy - yx.conj()).norm(),
        vol(&[&x, &y]),
    );

    // Trailing-tuple permutation invariance (visible only for order >= 3).
    if n >= 3 {
        let mut permuted = space.anchor().vectors().to_vec();
        permuted.swap(0, 1);
        let swapped = n_inner_general(&x, &y, &permuted)?;
        check(
            "trailing_permutation",
            (swapped - xy).norm(),
            vol(&[&x, &y]),
        );
    }

    // Seminorm homogeneity, including the exact |alpha| = 1 mirror case.
    let nx = n_norm(&space, &x)?;
    let nax = n_norm(&space, &x.scale(alpha))?;
    check(
        "norm_homogeneous",
        (nax - alpha.norm() * nx).abs(),
        g.sqrt() * (1.0 + alpha.norm()) * (1.0 + x.norm()),
    );
    let neg = n_norm(&space, &-&x)?;
    check("norm_mirror", (neg - nx).abs(), g.sqrt() * (1.0 + x.norm()));

    // Triangle inequality in the first slot.
    let ny = n_norm(&space, &y)?;
    let nxy = n_norm(&space, &(&x + &y))?;
    check("triangle", (nxy - nx - ny).max(0.0), nx + ny);

    // Dependent tuples degenerate: an anchor-span vector has seminorm 0...
    let mut dep = Vector::zeros(d);
    for b in space.anchor().vectors() {
        dep = &dep + &b.scale(rng::random_scalar(rng, mode));
    }
    let vdep = n_inner(&space, &dep, &dep)?;
    check(
        "dependent_zero",
        vdep.norm(),
        g * (1.0 + dep.norm()).powi(2),
    );

    // ...and a duplicated leading vector kills the pairing outright.
    let mut dup_trailing = space.anchor().vectors().to_vec();
    dup_trailing[0] = x.clone();
    let vdup = n_inner_general(&x, &x, &dup_trailing)?;
    check("duplicate_zero", vdup.norm(), vol(&[&x, &x]));

    // Schwarz.
    check("schwarz", (xy.norm() - nx * ny).max(0.0), nx * ny);

    // Parallelogram identity.
    let plus = n_norm(&space, &(&x + &y))?.powi(2);
    let minus = n_norm(&space, &(&x - &y))?.powi(2);
    let rhs = 2.0 * (nx.powi(2) + ny.powi(2));
    check("parallelogram", (plus + minus - rhs).abs(), rhs);

    // Converse surrogate: near-zero seminorm must show up as rank
    // deficiency of the stacked tuple.
    let mut stacked = vec![dep.clone()];
    stacked.extend_from_slice(space.anchor().vectors());
    let dec = linalg::svd(&Matrix::from_cols(&stacked)?);
    let rank = linalg::numerical_rank(&dec.sigma, &tol);
    let rank_ok = rank < n;
    builder.record(
        if rank_ok { 0.0 } else { STRUCTURAL_VIOLATION },
        !rank_ok,
        || json!({"trial": trial, "check": "zero_implies_dependent", "rank": rank}),
    );

    Ok(())
}
