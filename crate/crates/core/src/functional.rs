//! Bounded linear functionals on an anchored space, and their Riesz
//! representation.
//!
//! A functional is stored as its coefficient vector `c`, acting by
//! `T(x) = sum c_i x_i` (plain, unconjugated). Against the anchored
//! seminorm, `T` is bounded exactly when it vanishes on the anchor span;
//! in that case a unique representer `z` in `range(P)` satisfies
//! `T(x) = <x, z | anchors>` for every `x`, and `|T| = |z, anchors|`.
//!
//! Two independent solvers produce `z`:
//! * [`riesz_direct`] inverts the metric in closed form: `z = P conj(c) / g`.
//! * [`riesz_constructive`] walks the existence proof: build the null space
//!   of `T` inside `range(P)`, pick the direction `z_0` b-orthogonal to it,
//!   and rescale by `conj(T(z_0)) / |z_0, anchors|^2`.
//!
//! Their agreement is one of the crate's principal cross-checks.

use crate::error::{Error, Result};
use crate::linalg;
use crate::matrix::Matrix;
use crate::nspace::{n_inner, n_norm, NSpace};
use crate::report::{PropertyReport, ReportBuilder};
use crate::rng::{self, TrialRng};
use crate::scalar::{real, FieldMode, Scalar};
use crate::vector::Vector;
use serde_json::json;

#[derive(Debug, Clone, PartialEq)]
pub struct BLinearFunctional {
    coeffs: Vector,
}

impl BLinearFunctional {
    pub fn new(coeffs: Vector) -> Self {
        Self { coeffs }
    }

    pub fn zero(dim: usize) -> Self {
        Self {
            coeffs: Vector::zeros(dim),
        }
    }

    pub fn coeffs(&self) -> &Vector {
        &self.coeffs
    }

    pub fn dim(&self) -> usize {
        self.coeffs.dim()
    }

    /// `T(x) = sum c_i x_i`.
    pub fn evaluate(&self, x: &Vector) -> Result<Scalar> {
        self.coeffs.dot_unconjugated(x)
    }
}

/// Solution of the representation problem `T(x) = <x, z | anchors>`.
#[derive(Debug, Clone)]
pub struct RieszSolution {
    /// Canonical representer, lying in `range(P)`.
    pub representer: Vector,
    /// `|z, anchors|`, which equals the functional norm.
    pub functional_norm: f64,
    /// Worst relative representation defect over the internal sample sweep.
    pub residual: f64,
    /// The proof-path direction `z_0` (unit, phase-fixed); absent for the
    /// zero functional and for the closed-form solver.
    pub witness: Option<Vector>,
}

const RESIDUAL_SEED: u64 = 0x5249_4553;
const RESIDUAL_SAMPLES: u64 = 100;

fn check_dims(space: &NSpace, f: &BLinearFunctional) -> Result<()> {
    if f.dim() != space.dim() {
        return Err(Error::DimensionMismatch {
            expected: space.dim(),
            got: f.dim(),
        });
    }
    Ok(())
}

/// Bounded against the anchored seminorm ⟺ `T` kills every anchor vector.
pub fn is_bounded(space: &NSpace, f: &BLinearFunctional) -> Result<bool> {
    check_dims(space, f)?;
    let c_norm = f.coeffs().norm();
    for b in space.anchor().vectors() {
        let v = f.evaluate(b)?;
        if v.norm() > space.tol().margin(c_norm * b.norm()) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `|T| = sup |T(x)| / |x, anchors|`, computed through the canonical
/// representer.
pub fn functional_norm(space: &NSpace, f: &BLinearFunctional) -> Result<f64> {
    let z = canonical_representer(space, f)?;
    n_norm(space, &z)
}

fn canonical_representer(space: &NSpace, f: &BLinearFunctional) -> Result<Vector> {
    check_dims(space, f)?;
    if !is_bounded(space, f)? {
        return Err(Error::UnboundedFunctional);
    }
    // T(x) = <x, z | b>  =  g (P z)† x  for z in range(P), so
    // g conj(z) = conj of the coefficient vector projected; i.e.
    // z = P conj(c) / g.
    let pc = space.project(&f.coeffs().conj());
    Ok(pc.scale(real(1.0 / space.gram_det())))
}

/// Closed-form Riesz solver.
pub fn riesz_direct(space: &NSpace, f: &BLinearFunctional) -> Result<RieszSolution> {
    let z = canonical_representer(space, f)?;
    finish_solution(space, f, z, None)
}

/// Proof-path Riesz solver: null space, b-orthogonal direction, rescale.
pub fn riesz_constructive(space: &NSpace, f: &BLinearFunctional) -> Result<RieszSolution> {
    check_dims(space, f)?;
    if !is_bounded(space, f)? {
        return Err(Error::UnboundedFunctional);
    }
    let d = space.dim();
    if f.coeffs().norm() <= space.tol().abs_tol {
        // Zero functional: representer is the zero vector.
        return finish_solution(space, f, Vector::zeros(d), None);
    }

    // Null space of T within range(P): rows are the functional itself (it
    // acts by plain dot product) and conj(b_i) (base-orthogonality to the
    // anchors, i.e. membership in range(P)).
    let mut rows = vec![f.coeffs().clone()];
    for b in space.anchor().vectors() {
        rows.push(b.conj());
    }
    let null_of_t = linalg::null_space_basis(&Matrix::from_rows(&rows)?, space.tol());

    // z_0 spans the b-orthogonal complement of that null space within
    // range(P). For a nonzero bounded functional it is one-dimensional.
    let mut comp_rows: Vec<Vector> = null_of_t.iter().map(|w| w.conj()).collect();
    for b in space.anchor().vectors() {
        comp_rows.push(b.conj());
    }
    let z0_basis = linalg::null_space_basis(&Matrix::from_rows(&comp_rows)?, space.tol());
    if z0_basis.len() != 1 {
        return Err(Error::NumericalBreakdown(format!(
            "expected a one-dimensional complement, found dimension {}",
            z0_basis.len()
        )));
    }
    let z0 = fix_phase(&z0_basis[0]);

    let t0 = f.evaluate(&z0)?;
    let denom = n_inner(space, &z0, &z0)?.re;
    if denom <= 0.0 {
        return Err(Error::NumericalBreakdown(
            "proof-path direction has vanishing seminorm".into(),
        ));
    }
    let z = z0.scale(t0.conj() / real(denom));
    finish_solution(space, f, z, Some(z0))
}

/// Unit base norm, first significant coordinate rotated to the positive
/// real axis: a deterministic choice among the unit multiples.
fn fix_phase(v: &Vector) -> Vector {
    let n = v.norm();
    if n == 0.0 {
        return v.clone();
    }
    let unit = v.scale(real(1.0 / n));
    let top = unit.max_abs();
    for i in 0..unit.dim() {
        let e = unit[i];
        if e.norm() > 1e-9 * top {
            return unit.scale(e.conj() / real(e.norm()));
        }
    }
    unit
}

fn finish_solution(
    space: &NSpace,
    f: &BLinearFunctional,
    z: Vector,
    witness: Option<Vector>,
) -> Result<RieszSolution> {
    let functional_norm = n_norm(space, &z)?;
    let mut residual = 0.0f64;
    for t in 0..RESIDUAL_SAMPLES {
        let mut rng = rng::trial_rng(RESIDUAL_SEED, t);
        let x = rng::random_vector(&mut rng, space.dim(), FieldMode::Complex);
        let lhs = f.evaluate(&x)?;
        let rhs = n_inner(space, &x, &z)?;
        residual = residual.max((lhs - rhs).norm() / (1.0 + lhs.norm()));
    }
    Ok(RieszSolution {
        representer: z,
        functional_norm,
        residual,
        witness,
    })
}

/// Sampled check that `z` represents `T`, plus the canonicality condition
/// (`z` must carry no anchor component, making the representer unique).
pub fn verify_representation(
    space: &NSpace,
    f: &BLinearFunctional,
    z: &Vector,
    seed: u64,
    trials: u64,
) -> Result<PropertyReport> {
    check_dims(space, f)?;
    if z.dim() != space.dim() {
        return Err(Error::DimensionMismatch {
            expected: space.dim(),
            got: z.dim(),
        });
    }
    let mut builder = ReportBuilder::new("representation", seed);
    for t in 0..trials {
        let mut rng = rng::trial_rng(seed, t);
        let x = rng::random_vector(&mut rng, space.dim(), FieldMode::Complex);
        let lhs = f.evaluate(&x)?;
        let rhs = n_inner(space, &x, z)?;
        let diff = (lhs - rhs).norm();
        let scale = 1.0 + lhs.norm();
        builder.record(
            diff / scale,
            diff > space.tol().margin(scale),
            || json!({"trial": t, "check": "representation", "diff": diff}),
        );
    }
    let defect = (z - &space.project(z)).norm();
    let z_scale = 1.0 + z.norm();
    builder.record(
        defect / z_scale,
        defect > space.tol().margin(z.norm()),
        || json!({"check": "canonicality", "anchor_component": defect}),
    );
    Ok(builder.finish(trials))
}

/// Random functional supported on `range(P)` (hence bounded): draw raw
/// coefficients, then force `conj(c)` into `range(P)`.
pub fn random_bounded(space: &NSpace, rng: &mut TrialRng, mode: FieldMode) -> BLinearFunctional {
    let raw = rng::random_vector(rng, space.dim(), mode);
    BLinearFunctional::new(space.project(&raw).conj())
}

/// A functional violating boundedness for this space: the bounded draw plus
/// a component seen by the first anchor vector.
pub fn random_unbounded(space: &NSpace, rng: &mut TrialRng, mode: FieldMode) -> BLinearFunctional {
    let bounded = random_bounded(space, rng, mode);
    let b = &space.anchor().vectors()[0];
    // c' = c + conj(b): then T'(b) = |b|^2 > 0.
    BLinearFunctional::new(bounded.coeffs() + &b.conj())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nspace::new_space;
    use crate::report::ReportStatus;
    use crate::scalar::{self, IM};
    use crate::tolerance::TolerancePolicy;

    fn e(i: usize) -> Vector {
        Vector::basis(3, i)
    }

    fn space_e3() -> NSpace {
        new_space(3, 2, &[e(2)], TolerancePolicy::default()).unwrap()
    }

    fn f120() -> BLinearFunctional {
        BLinearFunctional::new(Vector::from_real(&[1.0, 2.0, 0.0]).unwrap())
    }

    // ── evaluation ──

    #[test]
    fn evaluate_is_a_plain_dot_product() {
        let x = Vector::from_real(&[4.0, 5.0, 6.0]).unwrap();
        assert_eq!(f120().evaluate(&x).unwrap(), real(14.0));
        assert_eq!(f120().evaluate(&Vector::zeros(3)).unwrap(), scalar::ZERO);
        let xi = x.scale(IM);
        assert!((f120().evaluate(&xi).unwrap() - real(14.0) * IM).norm() < 1e-13);
    }

    // ── boundedness ──

    #[test]
    fn boundedness_is_vanishing_on_the_anchors() {
        let s = space_e3();
        assert!(is_bounded(&s, &f120()).unwrap());
        let bad = BLinearFunctional::new(Vector::from_real(&[0.0, 0.0, 1.0]).unwrap());
        assert!(!is_bounded(&s, &bad).unwrap());
        assert!(is_bounded(&s, &BLinearFunctional::zero(3)).unwrap());
    }

    #[test]
    fn norm_of_unbounded_functional_is_an_error() {
        let s = space_e3();
        let bad = BLinearFunctional::new(Vector::from_real(&[0.0, 0.0, 1.0]).unwrap());
        assert!(matches!(
            functional_norm(&s, &bad),
            Err(Error::UnboundedFunctional)
        ));
    }

    // ── norms ──

    #[test]
    fn functional_norm_of_worked_example() {
        let s = space_e3();
        assert!((functional_norm(&s, &f120()).unwrap() - 5.0_f64.sqrt()).abs() < 1e-12);
        assert_eq!(
            functional_norm(&s, &BLinearFunctional::zero(3)).unwrap(),
            0.0
        );
    }

    #[test]
    fn functional_norm_scales_inversely_with_anchor_length() {
        let s = new_space(3, 2, &[e(2).scale(real(2.0))], TolerancePolicy::default()).unwrap();
        let expected = 5.0_f64.sqrt() / 2.0;
        assert!((functional_norm(&s, &f120()).unwrap() - expected).abs() < 1e-12);
    }

    // ── direct solver ──

    #[test]
    fn direct_solver_reproduces_the_hand_computed_representer() {
        let s = space_e3();
        let sol = riesz_direct(&s, &f120()).unwrap();
        let z = Vector::from_real(&[1.0, 2.0, 0.0]).unwrap();
        assert!((&sol.representer - &z).norm() < 1e-12);
        assert!((sol.functional_norm - 5.0_f64.sqrt()).abs() < 1e-12);
        assert!(sol.residual < 1e-9);
        assert!(sol.witness.is_none());
    }

    #[test]
    fn direct_solver_zero_functional() {
        let s = space_e3();
        let sol = riesz_direct(&s, &BLinearFunctional::zero(3)).unwrap();
        assert_eq!(sol.representer.norm(), 0.0);
        assert_eq!(sol.functional_norm, 0.0);
    }

    #[test]
    fn direct_solver_conjugates_complex_coefficients() {
        let s = space_e3();
        let f = BLinearFunctional::new(Vector::new(vec![IM, scalar::ZERO, scalar::ZERO]).unwrap());
        let sol = riesz_direct(&s, &f).unwrap();
        let expected = Vector::new(vec![-IM, scalar::ZERO, scalar::ZERO]).unwrap();
        assert!((&sol.representer - &expected).norm() < 1e-13);
        // <e1, z | e3> must reproduce T(e1) = i.
        let v = n_inner(&s, &e(0), &sol.representer).unwrap();
        assert!((v - IM).norm() < 1e-13);
    }

    #[test]
    fn direct_solver_rejects_unbounded_input() {
        let s = space_e3();
        let bad = BLinearFunctional::new(Vector::from_real(&[1.0, 0.0, 0.5]).unwrap());
        assert!(matches!(
            riesz_direct(&s, &bad),
            Err(Error::UnboundedFunctional)
        ));
    }

    // ── constructive solver ──

    #[test]
    fn constructive_solver_follows_the_proof_on_the_worked_example() {
        let s = space_e3();
        let sol = riesz_constructive(&s, &f120()).unwrap();
        let z = Vector::from_real(&[1.0, 2.0, 0.0]).unwrap();
        assert!((&sol.representer - &z).norm() < 1e-10);
        // The witness direction is the unit multiple of (1,2,0) with
        // positive first coordinate.
        let w = sol.witness.expect("nonzero functional has a witness");
        let expected = z.scale(real(1.0 / 5.0_f64.sqrt()));
        assert!((&w - &expected).norm() < 1e-10);
    }

    #[test]
    fn constructive_null_space_is_the_expected_line() {
        let s = space_e3();
        let mut rows = vec![f120().coeffs().clone()];
        for b in s.anchor().vectors() {
            rows.push(b.conj());
        }
        let null = linalg::null_space_basis(&Matrix::from_rows(&rows).unwrap(), s.tol());
        assert_eq!(null.len(), 1);
        // Spans (2, -1, 0).
        let dir = Vector::from_real(&[2.0, -1.0, 0.0]).unwrap();
        let overlap = null[0].dot(&dir).unwrap().norm();
        assert!((overlap - dir.norm()).abs() < 1e-10);
    }

    #[test]
    fn constructive_solver_zero_functional_has_no_witness() {
        let s = space_e3();
        let sol = riesz_constructive(&s, &BLinearFunctional::zero(3)).unwrap();
        assert_eq!(sol.representer.norm(), 0.0);
        assert!(sol.witness.is_none());
    }

    #[test]
    fn construction_is_linear_in_the_functional() {
        let s = space_e3();
        let five = BLinearFunctional::new(f120().coeffs().scale(real(5.0)));
        let a = riesz_constructive(&s, &five).unwrap();
        let b = riesz_constructive(&s, &f120()).unwrap();
        assert!((&a.representer - &b.representer.scale(real(5.0))).norm() < 1e-9);
    }

    // ── verification ──

    #[test]
    fn verification_passes_for_the_true_representer() {
        let s = space_e3();
        let z = Vector::from_real(&[1.0, 2.0, 0.0]).unwrap();
        let r = verify_representation(&s, &f120(), &z, 0, 64).unwrap();
        assert_eq!(r.failures, 0);
        assert_eq!(r.status, ReportStatus::Pass);
    }

    #[test]
    fn anchor_perturbation_trips_only_canonicality() {
        let s = space_e3();
        let z = &Vector::from_real(&[1.0, 2.0, 0.0]).unwrap() + &e(2);
        let r = verify_representation(&s, &f120(), &z, 0, 64).unwrap();
        assert_eq!(r.failures, 1);
        let w = r.witness.unwrap();
        assert_eq!(w["check"], "canonicality");
    }

    #[test]
    fn visible_perturbation_fails_representation() {
        let s = space_e3();
        let z = &Vector::from_real(&[1.0, 2.0, 0.0]).unwrap() + &e(0).scale(real(0.1));
        let r = verify_representation(&s, &f120(), &z, 0, 64).unwrap();
        assert!(r.failures > 1);
    }

    // ── random generators ──

    #[test]
    fn random_bounded_functionals_are_bounded() {
        let s = space_e3();
        let mut rng = rng::trial_rng(0, 5);
        for _ in 0..20 {
            let f = random_bounded(&s, &mut rng, FieldMode::Complex);
            assert!(is_bounded(&s, &f).unwrap());
        }
    }

    #[test]
    fn random_unbounded_functionals_are_unbounded() {
        let s = space_e3();
        let mut rng = rng::trial_rng(0, 6);
        for _ in 0..20 {
            let f = random_unbounded(&s, &mut rng, FieldMode::Complex);
            assert!(!is_bounded(&s, &f).unwrap());
        }
    }
}
