//! Dense linear-algebra kernels: SVD with a canonical sign convention,
//! spectral norm, Kronecker product, vectorization, and the projection onto
//! the nuclear-norm ball.
//!
//! Everything here is a pure function of its inputs. The column-major `vec`
//! convention is fixed once here and relied on by the rearrangement module.

use crate::error::{Error, Result};
use nalgebra::{DMatrix, DVector};

/// Dense real matrix, column-major storage.
pub type DMat = DMatrix<f64>;
/// Dense real column vector.
pub type DVec = DVector<f64>;

/// Iteration cap handed to the bidiagonal QR loop inside nalgebra.
const SVD_MAX_SWEEPS: usize = 4096;

/// Thin SVD `M = U diag(sigma) Vᵀ` with `r = min(rows, cols)`.
///
/// `sigma` is sorted nonincreasing. Columns are sign-fixed: in each `u_j` the
/// entry of largest magnitude (lowest index on ties) is nonnegative, and
/// `v_j` is flipped together with `u_j`, so the factorization is deterministic.
#[derive(Debug, Clone)]
pub struct SvdResult {
    pub u: DMat,
    pub sigma: DVec,
    pub v: DMat,
}

impl SvdResult {
    pub fn rank(&self, rel_tol: f64) -> usize {
        let s1 = self.sigma.get(0).copied().unwrap_or(0.0);
        if s1 <= 0.0 {
            return 0;
        }
        self.sigma.iter().filter(|&&s| s > rel_tol * s1).count()
    }

    /// `U diag(sigma) Vᵀ`.
    pub fn reconstruct(&self) -> DMat {
        let us = DMat::from_fn(self.u.nrows(), self.sigma.len(), |i, j| {
            self.u[(i, j)] * self.sigma[j]
        });
        &us * self.v.transpose()
    }
}

pub(crate) fn ensure_finite(m: &DMat, what: &str) -> Result<()> {
    if m.iter().all(|x| x.is_finite()) {
        Ok(())
    } else {
        Err(Error::Numerical(format!("{what} contains non-finite entries")))
    }
}

/// Thin SVD with deterministic ordering and signs.
pub fn svd(m: &DMat) -> Result<SvdResult> {
    ensure_finite(m, "svd input")?;
    let f = m
        .clone()
        .try_svd(true, true, f64::EPSILON, SVD_MAX_SWEEPS)
        .ok_or(Error::SvdFailure {
            iterations: SVD_MAX_SWEEPS,
            residual: f64::INFINITY,
        })?;
    let mut u = f.u.expect("svd: requested u");
    let v_t = f.v_t.expect("svd: requested v_t");
    let mut sigma = f.singular_values;
    let mut v = v_t.transpose();

    // Stable descending order, index-ascending on ties.
    let r = sigma.len();
    let mut order: Vec<usize> = (0..r).collect();
    order.sort_by(|&a, &b| sigma[b].partial_cmp(&sigma[a]).unwrap().then(a.cmp(&b)));
    if order.iter().enumerate().any(|(i, &j)| i != j) {
        let su = u.clone();
        let sv = v.clone();
        let ss = sigma.clone();
        for (dst, &src) in order.iter().enumerate() {
            u.set_column(dst, &su.column(src));
            v.set_column(dst, &sv.column(src));
            sigma[dst] = ss[src];
        }
    }

    // Sign convention: largest-magnitude entry of each u_j nonnegative,
    // lowest index winning ties.
    for j in 0..r {
        let col = u.column(j);
        let mut pivot = 0usize;
        let mut best = -1.0f64;
        for (i, &x) in col.iter().enumerate() {
            if x.abs() > best {
                best = x.abs();
                pivot = i;
            }
        }
        if u[(pivot, j)] < 0.0 {
            u.column_mut(j).neg_mut();
            v.column_mut(j).neg_mut();
        }
    }

    Ok(SvdResult { u, sigma, v })
}

/// Largest singular value; 0 for the zero matrix.
///
/// Computed from the full singular spectrum (certified path), not by power
/// iteration.
pub fn spectral_norm(m: &DMat) -> Result<f64> {
    ensure_finite(m, "spectral_norm input")?;
    if m.nrows() == 0 || m.ncols() == 0 {
        return Ok(0.0);
    }
    let f = m
        .clone()
        .try_svd(false, false, f64::EPSILON, SVD_MAX_SWEEPS)
        .ok_or(Error::SvdFailure {
            iterations: SVD_MAX_SWEEPS,
            residual: f64::INFINITY,
        })?;
    Ok(f.singular_values.iter().fold(0.0f64, |a, &b| a.max(b)))
}

/// Kronecker product: block (mu, nu) of the result is `a[(mu, nu)] * b`.
pub fn kron(a: &DMat, b: &DMat) -> Result<DMat> {
    let rows = a
        .nrows()
        .checked_mul(b.nrows())
        .ok_or_else(|| Error::Size("kron: row count overflow".into()))?;
    let cols = a
        .ncols()
        .checked_mul(b.ncols())
        .ok_or_else(|| Error::Size("kron: column count overflow".into()))?;
    rows.checked_mul(cols)
        .ok_or_else(|| Error::Size("kron: entry count overflow".into()))?;
    let (br, bc) = (b.nrows(), b.ncols());
    let mut out = DMat::zeros(rows, cols);
    for na in 0..a.ncols() {
        for cb in 0..bc {
            let col = na * bc + cb;
            for ma in 0..a.nrows() {
                let scale = a[(ma, na)];
                if scale == 0.0 {
                    continue;
                }
                for rb in 0..br {
                    out[(ma * br + rb, col)] = scale * b[(rb, cb)];
                }
            }
        }
    }
    Ok(out)
}

/// Accumulate `out += scale * kron(a, b)` without allocating the product.
pub(crate) fn kron_add_into(out: &mut DMat, scale: f64, a: &DMat, b: &DMat) {
    let (br, bc) = (b.nrows(), b.ncols());
    debug_assert_eq!(out.nrows(), a.nrows() * br);
    debug_assert_eq!(out.ncols(), a.ncols() * bc);
    for na in 0..a.ncols() {
        for cb in 0..bc {
            let col = na * bc + cb;
            for ma in 0..a.nrows() {
                let s = scale * a[(ma, na)];
                if s == 0.0 {
                    continue;
                }
                for rb in 0..br {
                    out[(ma * br + rb, col)] += s * b[(rb, cb)];
                }
            }
        }
    }
}

/// Column-major vectorization.
pub fn vectorize(m: &DMat) -> DVec {
    DVec::from_column_slice(m.as_slice())
}

/// Inverse of [`vectorize`]: reshape a length `rows*cols` vector column-major.
pub fn matricize(v: &DVec, rows: usize, cols: usize) -> Result<DMat> {
    if v.len() != rows * cols {
        return Err(Error::Size(format!(
            "matricize: vector length {} != {}x{}",
            v.len(),
            rows,
            cols
        )));
    }
    Ok(DMat::from_column_slice(rows, cols, v.as_slice()))
}

/// Frobenius-nearest matrix with nuclear norm at most `radius`.
///
/// Computed as an SVD of `y` followed by the sorted-threshold Euclidean
/// projection of the singular values onto the l1-ball, reusing U and V.
/// Interior points are returned unchanged (bit-exact).
pub fn project_nuclear_ball(y: &DMat, radius: f64) -> Result<DMat> {
    if !(radius > 0.0) {
        return Err(Error::Argument(format!(
            "project_nuclear_ball: radius must be positive, got {radius}"
        )));
    }
    let f = svd(y)?;
    let total: f64 = f.sigma.iter().sum();
    if total <= radius {
        return Ok(y.clone());
    }
    // Sorted-threshold projection of the (already descending) value vector.
    let s = &f.sigma;
    let r = s.len();
    let mut cum = 0.0;
    let mut rho = 0usize;
    let mut theta = 0.0;
    for i in 0..r {
        cum += s[i];
        let t = (cum - radius) / (i + 1) as f64;
        if s[i] > t {
            rho = i + 1;
            theta = t;
        }
    }
    debug_assert!(rho >= 1);
    let survivors: Vec<usize> = (0..rho).collect();
    let mut out = DMat::zeros(y.nrows(), y.ncols());
    for &j in &survivors {
        let sj = (s[j] - theta).max(0.0);
        if sj == 0.0 {
            continue;
        }
        // out += sj * u_j v_jᵀ
        let uj = f.u.column(j);
        let vj = f.v.column(j);
        for c in 0..y.ncols() {
            let w = sj * vj[c];
            if w == 0.0 {
                continue;
            }
            for rr in 0..y.nrows() {
                out[(rr, c)] += uj[rr] * w;
            }
        }
    }
    Ok(out)
}

/// All eigenvalues of a symmetric matrix, ascending.
pub fn symmetric_eigenvalues(m: &DMat) -> Result<DVec> {
    ensure_finite(m, "symmetric_eigenvalues input")?;
    if m.nrows() != m.ncols() {
        return Err(Error::Size(format!(
            "symmetric_eigenvalues: matrix is {}x{}",
            m.nrows(),
            m.ncols()
        )));
    }
    let eig = nalgebra::SymmetricEigen::try_new(m.clone(), f64::EPSILON, SVD_MAX_SWEEPS)
        .ok_or_else(|| Error::Numerical("symmetric eigensolver did not converge".into()))?;
    let mut vals: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
    Ok(DVec::from_vec(vals))
}

/// Frobenius inner product.
pub fn frob_dot(a: &DMat, b: &DMat) -> f64 {
    a.dot(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SplitMix64;
    use approx::assert_relative_eq;

    #[test]
    fn svd_identity() {
        let f = svd(&DMat::identity(3, 3)).unwrap();
        for j in 0..3 {
            assert_relative_eq!(f.sigma[j], 1.0, max_relative = 1e-14);
        }
    }

    #[test]
    fn svd_diagonal() {
        let m = DMat::from_diagonal(&DVec::from_vec(vec![3.0, 1.0]));
        let f = svd(&m).unwrap();
        assert_relative_eq!(f.sigma[0], 3.0, max_relative = 1e-14);
        assert_relative_eq!(f.sigma[1], 1.0, max_relative = 1e-14);
    }

    #[test]
    fn svd_shapes_and_invariants() {
        let mut rng = SplitMix64::new(11);
        let m = rng.normal_matrix(4, 3);
        let f = svd(&m).unwrap();
        assert_eq!(f.u.shape(), (4, 3));
        assert_eq!(f.v.shape(), (3, 3));
        assert_eq!(f.sigma.len(), 3);
        assert!(f.sigma[0] >= f.sigma[1] && f.sigma[1] >= f.sigma[2]);
        let rec = f.reconstruct();
        assert!((rec - &m).norm() <= 1e-12 * m.norm());
    }

    #[test]
    fn svd_sign_convention_deterministic() {
        let mut rng = SplitMix64::new(5);
        let m = rng.normal_matrix(6, 6);
        let a = svd(&m).unwrap();
        let b = svd(&m).unwrap();
        assert_eq!(a.u, b.u);
        assert_eq!(a.v, b.v);
        for j in 0..6 {
            let col = a.u.column(j);
            let mut pivot = 0;
            let mut best = -1.0;
            for (i, &x) in col.iter().enumerate() {
                if x.abs() > best {
                    best = x.abs();
                    pivot = i;
                }
            }
            assert!(col[pivot] >= 0.0);
        }
    }

    #[test]
    fn svd_rejects_non_finite() {
        let mut m = DMat::zeros(2, 2);
        m[(0, 0)] = f64::NAN;
        assert!(svd(&m).is_err());
    }

    #[test]
    fn spectral_norm_examples() {
        assert_eq!(spectral_norm(&DMat::zeros(3, 3)).unwrap(), 0.0);
        let m = DMat::from_diagonal(&DVec::from_vec(vec![2.0, -5.0]));
        assert_relative_eq!(spectral_norm(&m).unwrap(), 5.0, max_relative = 1e-14);
    }

    #[test]
    fn spectral_norm_matches_power_iteration() {
        // Power-method oracle on MᵀM, independent of the SVD path.
        let mut rng = SplitMix64::new(42);
        let m = rng.normal_matrix(5, 5);
        let g = m.transpose() * &m;
        let mut v = DVec::from_element(5, 1.0 / (5f64).sqrt());
        let mut lam = 0.0;
        for _ in 0..10_000 {
            let w = &g * &v;
            lam = w.norm();
            v = w / lam;
        }
        let oracle = lam.sqrt();
        let s = spectral_norm(&m).unwrap();
        assert_relative_eq!(s, oracle, max_relative = 1e-8);
    }

    #[test]
    fn kron_identity() {
        let k = kron(&DMat::identity(2, 2), &DMat::identity(3, 3)).unwrap();
        assert_eq!(k, DMat::identity(6, 6));
    }

    #[test]
    fn kron_definition_case() {
        let a = DMat::from_row_slice(2, 2, &[1.0, 2.0, 3.0, 4.0]);
        let b = DMat::from_row_slice(2, 2, &[0.0, 1.0, 1.0, 0.0]);
        let k = kron(&a, &b).unwrap();
        assert_eq!(k.shape(), (4, 4));
        // Block (1,2) in 1-based block coordinates is a[(0,1)] * b = 2b.
        for r in 0..2 {
            for c in 0..2 {
                assert_eq!(k[(r, 2 + c)], 2.0 * b[(r, c)]);
            }
        }
        // Spot-check a full row: [0 1 0 2; 1 0 2 0; ...]
        assert_eq!(k[(0, 0)], 0.0);
        assert_eq!(k[(0, 1)], 1.0);
        assert_eq!(k[(1, 0)], 1.0);
        assert_eq!(k[(3, 2)], 4.0);
    }

    #[test]
    fn kron_norm_multiplicative() {
        let mut rng = SplitMix64::new(9);
        for _ in 0..5 {
            let a = rng.normal_matrix(3, 3);
            let b = rng.normal_matrix(3, 3);
            let lhs = spectral_norm(&kron(&a, &b).unwrap()).unwrap();
            let rhs = spectral_norm(&a).unwrap() * spectral_norm(&b).unwrap();
            assert_relative_eq!(lhs, rhs, max_relative = 1e-10);
        }
    }

    #[test]
    fn kron_add_into_matches_kron() {
        let mut rng = SplitMix64::new(13);
        let a = rng.normal_matrix(3, 2);
        let b = rng.normal_matrix(2, 4);
        let k = kron(&a, &b).unwrap();
        let mut acc = DMat::zeros(6, 8);
        kron_add_into(&mut acc, 1.0, &a, &b);
        assert_eq!(acc, k);
    }

    #[test]
    fn vec_unvec_column_major() {
        let m = DMat::from_row_slice(2, 2, &[1.0, 3.0, 2.0, 4.0]);
        let v = vectorize(&m);
        assert_eq!(v.as_slice(), &[1.0, 2.0, 3.0, 4.0]);
        let back = matricize(&v, 2, 2).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn vec_unvec_roundtrip_bit_exact() {
        let mut rng = SplitMix64::new(21);
        let m = rng.normal_matrix(4, 6);
        let rt = matricize(&vectorize(&m), 4, 6).unwrap();
        assert_eq!(rt, m);
        assert!(matricize(&vectorize(&m), 5, 5).is_err());
    }

    #[test]
    fn nuclear_projection_interior_point_unchanged() {
        let mut y = DMat::zeros(2, 2);
        y[(0, 0)] = 0.5;
        let p = project_nuclear_ball(&y, 1.0).unwrap();
        assert_eq!(p, y);
    }

    #[test]
    fn nuclear_projection_rank_one_scaling() {
        let y = DMat::from_diagonal(&DVec::from_vec(vec![2.0, 0.0]));
        let p = project_nuclear_ball(&y, 1.0).unwrap();
        let expected = DMat::from_diagonal(&DVec::from_vec(vec![1.0, 0.0]));
        assert!((p - expected).norm() < 1e-12);
    }

    #[test]
    fn nuclear_projection_threshold_case() {
        // Exhaustive KKT check of the l1 projection of (2,1) onto radius 1:
        // candidate supports {1}: theta=1, w=(1,0), feasible, objective 1/2+1/2=1;
        // support {1,2}: theta=1 gives w=(1,0) again (2nd component clipped).
        // The projection is (1,0), theta = 1.
        let y = DMat::from_diagonal(&DVec::from_vec(vec![2.0, 1.0]));
        let p = project_nuclear_ball(&y, 1.0).unwrap();
        let expected = DMat::from_diagonal(&DVec::from_vec(vec![1.0, 0.0]));
        assert!((p - expected).norm() < 1e-12);
    }

    #[test]
    fn nuclear_projection_idempotent_and_nonexpansive() {
        let mut rng = SplitMix64::new(33);
        for _ in 0..10 {
            let y = rng.normal_matrix(4, 5);
            let z = rng.normal_matrix(4, 5);
            let py = project_nuclear_ball(&y, 1.0).unwrap();
            let pz = project_nuclear_ball(&z, 1.0).unwrap();
            let ppy = project_nuclear_ball(&py, 1.0).unwrap();
            assert!((&ppy - &py).norm() <= 1e-10 * (1.0 + py.norm()));
            assert!((&py - &pz).norm() <= (&y - &z).norm() + 1e-12);
        }
    }

    #[test]
    fn symmetric_eigenvalues_sorted() {
        let m = DMat::from_diagonal(&DVec::from_vec(vec![3.0, -1.0, 2.0]));
        let e = symmetric_eigenvalues(&m).unwrap();
        assert_relative_eq!(e[0], -1.0, max_relative = 1e-14);
        assert_relative_eq!(e[2], 3.0, max_relative = 1e-14);
    }
}
