//! Dense numeric kernel: Gram matrices, determinants, SVD, projectors,
//! least squares, Hermitian eigendecomposition, and the numerical radius.
//!
//! Everything is hand-rolled for small dense complex matrices (dimensions in
//! the single digits). The SVD is a one-sided Jacobi on columns and the
//! eigensolver a two-sided Jacobi; both are slow-but-robust choices whose
//! accuracy is limited only by round-off at these sizes, which is what the
//! verification suites need. All routines are pure and deterministic.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{self, real, Scalar};
use crate::tolerance::TolerancePolicy;
use crate::vector::Vector;

/// `G[i][j] = <vs[i], vs[j]>` under the base inner product (conjugate-linear
/// in the second slot). Conjugate-symmetric and positive semidefinite.
pub fn gram_matrix(vs: &[Vector]) -> Result<Matrix> {
    if vs.is_empty() {
        return Err(Error::InvalidSpec("gram matrix of an empty list".into()));
    }
    let d = vs[0].dim();
    for v in vs {
        if v.dim() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                got: v.dim(),
            });
        }
    }
    let k = vs.len();
    let mut g = Matrix::zeros(k, k);
    for i in 0..k {
        for j in 0..k {
            g.set(i, j, vs[i].dot(&vs[j]).expect("dimensions checked above"));
        }
    }
    Ok(g)
}

/// Determinant via LU with partial pivoting. A pivot column with no nonzero
/// entry short-circuits to an exact 0, so exactly singular inputs (e.g. a
/// repeated row) produce exactly `0.0` rather than round-off noise.
pub fn det(m: &Matrix) -> Result<Scalar> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let d = m.rows();
    let mut a = m.clone();
    let mut flip = false;
    for k in 0..d {
        let mut piv = k;
        let mut best = a.get(k, k).norm();
        for i in (k + 1)..d {
            let mag = a.get(i, k).norm();
            if mag > best {
                best = mag;
                piv = i;
            }
        }
        if best == 0.0 {
            return Ok(scalar::ZERO);
        }
        if piv != k {
            for j in 0..d {
                let tmp = a.get(k, j);
                a.set(k, j, a.get(piv, j));
                a.set(piv, j, tmp);
            }
            flip = !flip;
        }
        let pivot = a.get(k, k);
        for i in (k + 1)..d {
            let factor = a.get(i, k) / pivot;
            a.set(i, k, scalar::ZERO);
            for j in (k + 1)..d {
                a.set(i, j, a.get(i, j) - factor * a.get(k, j));
            }
        }
    }
    let mut out = scalar::ONE;
    for k in 0..d {
        out *= a.get(k, k);
    }
    Ok(if flip { -out } else { out })
}

/// Thin singular value decomposition `m = u * diag(sigma) * v†` with
/// `k = min(rows, cols)` columns in `u` and `v` and `sigma` descending.
/// Columns of `u` beyond the numerical rank may be zero (they multiply zero
/// singular values and carry no information).
#[derive(Debug, Clone)]
pub struct Svd {
    pub u: Matrix,
    pub sigma: Vec<f64>,
    pub v: Matrix,
}

const MAX_JACOBI_SWEEPS: usize = 64;

/// One-sided Jacobi SVD: repeatedly rotates column pairs of a working copy
/// until all columns are mutually orthogonal, accumulating the rotations
/// into `v`. Wide matrices are handled through the adjoint.
pub fn svd(m: &Matrix) -> Svd {
    if m.rows() < m.cols() {
        // m = u s v†  <=>  m† = v s u†
        let t = svd(&m.adjoint());
        return Svd {
            u: t.v,
            sigma: t.sigma,
            v: t.u,
        };
    }
    let r = m.rows();
    let c = m.cols();
    let mut b = m.clone();
    let mut v = Matrix::identity(c);
    for _ in 0..MAX_JACOBI_SWEEPS {
        let mut rotated = false;
        for p in 0..c {
            for q in (p + 1)..c {
                // 2x2 Gram block of columns p, q: [[app, apq], [conj, aqq]].
                let mut app = 0.0;
                let mut aqq = 0.0;
                let mut apq = scalar::ZERO;
                for i in 0..r {
                    let bip = b.get(i, p);
                    let biq = b.get(i, q);
                    app += bip.norm_sqr();
                    aqq += biq.norm_sqr();
                    apq += bip.conj() * biq;
                }
                let g = apq.norm();
                if g <= f64::EPSILON * (app * aqq).sqrt() {
                    continue;
                }
                rotated = true;
                let (cs, sn, phase) = plane_rotation(app, aqq, apq, g);
                let phc = phase.conj();
                for i in 0..r {
                    let bip = b.get(i, p);
                    let biq = b.get(i, q);
                    b.set(i, p, bip * cs - biq * phc * sn);
                    b.set(i, q, bip * sn + biq * phc * cs);
                }
                for i in 0..c {
                    let vip = v.get(i, p);
                    let viq = v.get(i, q);
                    v.set(i, p, vip * cs - viq * phc * sn);
                    v.set(i, q, vip * sn + viq * phc * cs);
                }
            }
        }
        if !rotated {
            break;
        }
    }

    let mut order: Vec<usize> = (0..c).collect();
    let norms: Vec<f64> = (0..c).map(|j| b.col(j).norm()).collect();
    order.sort_by(|&a, &bb| norms[bb].partial_cmp(&norms[a]).expect("finite norms"));

    let sigma: Vec<f64> = order.iter().map(|&j| norms[j]).collect();
    let mut u = Matrix::zeros(r, c);
    let mut vs = Matrix::zeros(c, c);
    for (slot, &j) in order.iter().enumerate() {
        if sigma[slot] > 0.0 {
            for i in 0..r {
                u.set(i, slot, b.get(i, j) / real(sigma[slot]));
            }
        }
        for i in 0..c {
            vs.set(i, slot, v.get(i, j));
        }
    }
    Svd { u, sigma, v: vs }
}

/// Jacobi rotation diagonalizing the Hermitian block `[[app, apq], [conj(apq), aqq]]`
/// with `g = |apq| > 0`. Returns `(cos, sin, phase)` where `phase = apq / g`;
/// the unitary is `[[c, s], [-s*conj(phase), c*conj(phase)]]`.
fn plane_rotation(app: f64, aqq: f64, apq: Scalar, g: f64) -> (f64, f64, Scalar) {
    let phase = apq / real(g);
    let tau = (aqq - app) / (2.0 * g);
    let t = tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt());
    let cs = 1.0 / (1.0 + t * t).sqrt();
    let sn = t * cs;
    (cs, sn, phase)
}

/// Count of singular values strictly above `tol.abs_tol * sigma_max`
/// (relative cutoff, so rank is scale-invariant).
pub fn numerical_rank(sigma: &[f64], tol: &TolerancePolicy) -> usize {
    let top = sigma.first().copied().unwrap_or(0.0);
    sigma.iter().filter(|&&s| s > tol.abs_tol * top).count()
}

/// Orthogonal projector onto the orthogonal complement of `span(vs)` in
/// dimension `dim`: Hermitian, idempotent, annihilates every `v` in the
/// span, rank `dim - rank(vs)`. An empty list projects onto everything
/// (identity).
pub fn orthogonal_projector(dim: usize, vs: &[Vector], tol: &TolerancePolicy) -> Result<Matrix> {
    if vs.is_empty() {
        return Ok(Matrix::identity(dim));
    }
    for v in vs {
        if v.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: v.dim(),
            });
        }
    }
    let a = Matrix::from_cols(vs)?;
    let dec = svd(&a);
    let rank = numerical_rank(&dec.sigma, tol);
    let mut p = Matrix::identity(dim);
    for j in 0..rank {
        let u = dec.u.col(j);
        for i in 0..dim {
            for k in 0..dim {
                p.set(i, k, p.get(i, k) - u[i] * u[k].conj());
            }
        }
    }
    Ok(p)
}

/// Largest singular value.
pub fn spectral_norm(m: &Matrix) -> f64 {
    svd(m).sigma.first().copied().unwrap_or(0.0)
}

#[derive(Debug, Clone)]
pub struct LeastSquares {
    pub solution: Vector,
    pub residual: f64,
}

/// Minimum-norm least-squares solution of `m x ~ rhs` via the pseudoinverse,
/// with the rank cutoff of [`numerical_rank`]. Always succeeds; the attained
/// residual `|m x - rhs|` is reported alongside.
pub fn least_squares_solve(
    m: &Matrix,
    rhs: &Vector,
    tol: &TolerancePolicy,
) -> Result<LeastSquares> {
    if m.rows() != rhs.dim() {
        return Err(Error::DimensionMismatch {
            expected: m.rows(),
            got: rhs.dim(),
        });
    }
    let dec = svd(m);
    let rank = numerical_rank(&dec.sigma, tol);
    let mut x = Vector::zeros(m.cols());
    for j in 0..rank {
        let uj = dec.u.col(j);
        let coeff = rhs.dot(&uj).expect("svd dimensions agree") / real(dec.sigma[j]);
        let vj = dec.v.col(j);
        for i in 0..m.cols() {
            x.entries_mut()[i] += coeff * vj[i];
        }
    }
    let residual = (&m.mul_vec(&x) - rhs).norm();
    Ok(LeastSquares {
        solution: x,
        residual,
    })
}

/// Orthonormal basis of the null space `{x : m x = 0}`, empty when `m` has
/// full column rank. Works for any shape: the null projector
/// `I - (row-space projector)` is diagonalized by a second SVD.
pub fn null_space_basis(m: &Matrix, tol: &TolerancePolicy) -> Vec<Vector> {
    let c = m.cols();
    let dec = svd(m);
    let rank = numerical_rank(&dec.sigma, tol);
    if rank == c {
        return Vec::new();
    }
    // Projector onto the orthogonal complement of the row space (= null space).
    let mut pn = Matrix::identity(c);
    for j in 0..rank {
        let vj = dec.v.col(j);
        for i in 0..c {
            for k in 0..c {
                pn.set(i, k, pn.get(i, k) - vj[i] * vj[k].conj());
            }
        }
    }
    let pdec = svd(&pn);
    (0..c - rank).map(|j| pdec.u.col(j)).collect()
}

/// Eigendecomposition of a (numerically) Hermitian matrix. The input is
/// symmetrized to `(m + m†)/2` first; callers wanting to detect asymmetry
/// should check [`Matrix::hermitian_defect`] themselves.
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    /// Ascending.
    pub values: Vec<f64>,
    /// Unitary; column `j` pairs with `values[j]`.
    pub vectors: Matrix,
}

pub fn hermitian_eigen(m: &Matrix) -> Result<HermitianEigen> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let d = m.rows();
    let mut h = m.add(&m.adjoint()).scale(real(0.5));
    let mut q = Matrix::identity(d);
    for _ in 0..MAX_JACOBI_SWEEPS {
        let mut rotated = false;
        for p in 0..d {
            for r in (p + 1)..d {
                let gamma = h.get(p, r);
                let g = gamma.norm();
                let alpha = h.get(p, p).re;
                let beta = h.get(r, r).re;
                if g == 0.0 || g <= f64::EPSILON * 0.5 * (alpha.abs() + beta.abs()) {
                    continue;
                }
                rotated = true;
                let (cs, sn, phase) = plane_rotation(alpha, beta, gamma, g);
                let phc = phase.conj();
                // h <- u† h u with u the embedded 2x2 rotation.
                for i in 0..d {
                    let hip = h.get(i, p);
                    let hir = h.get(i, r);
                    h.set(i, p, hip * cs - hir * phc * sn);
                    h.set(i, r, hip * sn + hir * phc * cs);
                }
                for j in 0..d {
                    let hpj = h.get(p, j);
                    let hrj = h.get(r, j);
                    h.set(p, j, hpj * cs - hrj * phase * sn);
                    h.set(r, j, hpj * sn + hrj * phase * cs);
                }
                // Kill round-off drift where exact values are known.
                h.set(p, r, scalar::ZERO);
                h.set(r, p, scalar::ZERO);
                h.set(p, p, real(h.get(p, p).re));
                h.set(r, r, real(h.get(r, r).re));
                for i in 0..d {
                    let qip = q.get(i, p);
                    let qir = q.get(i, r);
                    q.set(i, p, qip * cs - qir * phc * sn);
                    q.set(i, r, qip * sn + qir * phc * cs);
                }
            }
        }
        if !rotated {
            break;
        }
    }
    let mut order: Vec<usize> = (0..d).collect();
    let diag: Vec<f64> = (0..d).map(|i| h.get(i, i).re).collect();
    order.sort_by(|&a, &b| diag[a].partial_cmp(&diag[b]).expect("finite eigenvalues"));
    let values: Vec<f64> = order.iter().map(|&i| diag[i]).collect();
    let mut vectors = Matrix::zeros(d, d);
    for (slot, &j) in order.iter().enumerate() {
        for i in 0..d {
            vectors.set(i, slot, q.get(i, j));
        }
    }
    Ok(HermitianEigen { values, vectors })
}

/// Convergence tolerance of the numerical-radius ascent.
pub const RADIUS_CONV_TOL: f64 = 1e-10;
const RADIUS_GRID: usize = 16;
const RADIUS_RANDOM_STARTS: usize = 4;
const RADIUS_REFINED_STARTS: usize = 3;
const RADIUS_MAX_ITERS: usize = 500;

/// Numerical radius `w(m) = sup { |u† m u| : |u| = 1 }` with a maximizing
/// unit vector. Uses the support-function identity
/// `w(m) = max_theta lambda_max((e^{-i theta} m + e^{i theta} m†)/2)`:
/// a coarse theta grid picks starting vectors, then a monotone alternating
/// ascent (re-aim theta at the current Rayleigh quotient, take the top
/// eigenvector of the aimed Hermitian part) refines them. The returned value
/// is an attained Rayleigh quotient, hence a certified lower bound; at these
/// dimensions the grid+ascent combination reaches the true maximum to well
/// below [`RADIUS_CONV_TOL`].
pub fn numerical_radius(m: &Matrix, seed: u64) -> (f64, Vector) {
    assert!(m.is_square(), "numerical radius needs a square matrix");
    let d = m.rows();
    let adj = m.adjoint();
    let herm_at = |theta: f64| -> Matrix {
        let e = Scalar::new(theta.cos(), -theta.sin()); // e^{-i theta}
        m.scale(e).add(&adj.scale(e.conj())).scale(real(0.5))
    };
    let top_eigvec = |h: &Matrix| -> (f64, Vector) {
        let dec = hermitian_eigen(h).expect("hermitian part is square");
        (dec.values[d - 1], dec.vectors.col(d - 1))
    };

    // Grid scan: keep the best few directions as ascent starts.
    let mut scored: Vec<(f64, Vector)> = (0..RADIUS_GRID)
        .map(|j| {
            let theta = 2.0 * std::f64::consts::PI * j as f64 / RADIUS_GRID as f64;
            top_eigvec(&herm_at(theta))
        })
        .collect();
    scored.sort_by(|a, b| b.0.partial_cmp(&a.0).expect("finite eigenvalues"));
    scored.truncate(RADIUS_REFINED_STARTS);

    let mut starts: Vec<Vector> = scored.into_iter().map(|(_, u)| u).collect();
    for k in 0..RADIUS_RANDOM_STARTS {
        let mut rng = crate::rng::trial_rng(seed, 0x5EED_0000 + k as u64);
        let raw = crate::rng::random_vector(&mut rng, d, crate::scalar::FieldMode::Complex);
        let n = raw.norm();
        if n > 0.0 {
            starts.push(raw.scale(real(1.0 / n)));
        }
    }

    let mut best_val = 0.0;
    let mut best_u = Vector::basis(d, 0);
    for mut u in starts {
        let mut val = rayleigh_quotient(m, &u).norm();
        for _ in 0..RADIUS_MAX_ITERS {
            let w = rayleigh_quotient(m, &u);
            let theta = if w.norm() == 0.0 { 0.0 } else { w.arg() };
            let (_, next) = top_eigvec(&herm_at(theta));
            let next_val = rayleigh_quotient(m, &next).norm();
            if next_val <= val + RADIUS_CONV_TOL * (1.0 + val) {
                if next_val > val {
                    u = next;
                    val = next_val;
                }
                break;
            }
            u = next;
            val = next_val;
        }
        if val > best_val {
            best_val = val;
            best_u = u;
        }
    }
    (best_val, best_u)
}

/// `u† m u` (no normalization applied): `dot` conjugates its second slot, so
/// `(m u) · u` is exactly the sandwiched quotient.
pub fn rayleigh_quotient(m: &Matrix, u: &Vector) -> Scalar {
    m.mul_vec(u)
        .dot(u)
        .expect("square matrix times vector keeps dimension")
}
