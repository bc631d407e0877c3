//! Numerical-rank, pseudo-inverse, and subspace projection helpers.
//!
//! All rank decisions in this crate go through [`numerical_rank`] so that the
//! threshold convention (relative to the largest singular value) is applied
//! uniformly.

use nalgebra::{DMatrix, DVector};

/// Number of singular values exceeding `rel_tol` times the largest one.
///
/// A zero matrix has rank 0 regardless of the tolerance.
pub fn numerical_rank(m: &DMatrix<f64>, rel_tol: f64) -> usize {
    if m.nrows() == 0 || m.ncols() == 0 {
        return 0;
    }
    let sv = m.clone().singular_values();
    let smax = sv.max();
    if smax <= 0.0 {
        return 0;
    }
    sv.iter().filter(|&&s| s > rel_tol * smax).count()
}

/// Moore–Penrose pseudo-inverse with singular values below
/// `rel_tol * sigma_max` truncated to zero.
pub fn pseudo_inverse(m: &DMatrix<f64>, rel_tol: f64) -> DMatrix<f64> {
    let svd = m.clone().svd(true, true);
    let u = svd.u.as_ref().expect("svd with u");
    let v_t = svd.v_t.as_ref().expect("svd with v_t");
    let smax = svd.singular_values.max();
    let k = svd.singular_values.len();
    let mut inv = DVector::zeros(k);
    for i in 0..k {
        let s = svd.singular_values[i];
        if smax > 0.0 && s > rel_tol * smax {
            inv[i] = 1.0 / s;
        }
    }
    // pinv = V * S^+ * U^T, assembled without forming the diagonal.
    let mut vt_scaled = v_t.clone();
    for i in 0..k {
        vt_scaled.row_mut(i).scale_mut(inv[i]);
    }
    vt_scaled.transpose() * u.transpose()
}

/// Orthogonal projector onto the complement of the span of a set of row
/// vectors.
///
/// The basis is extracted by SVD so nearly dependent input rows collapse
/// instead of poisoning the projection.
#[derive(Debug, Clone)]
pub struct ComplementProjector {
    /// Orthonormal rows spanning the same space as the input rows.
    basis: DMatrix<f64>,
}

impl ComplementProjector {
    /// Builds the projector from `rows` (each row one spanning vector).
    /// An empty matrix yields the identity projection.
    pub fn from_rows(rows: &DMatrix<f64>, rel_tol: f64) -> Self {
        if rows.nrows() == 0 {
            return Self {
                basis: DMatrix::zeros(0, rows.ncols()),
            };
        }
        let svd = rows.clone().svd(false, true);
        let v_t = svd.v_t.expect("svd with v_t");
        let smax = svd.singular_values.max();
        let keep: Vec<usize> = (0..svd.singular_values.len())
            .filter(|&i| smax > 0.0 && svd.singular_values[i] > rel_tol * smax)
            .collect();
        let mut basis = DMatrix::zeros(keep.len(), rows.ncols());
        for (r, &i) in keep.iter().enumerate() {
            basis.row_mut(r).copy_from(&v_t.row(i));
        }
        Self { basis }
    }

    /// Rank of the subspace being projected out.
    pub fn subspace_dim(&self) -> usize {
        self.basis.nrows()
    }

    /// Projects each column of `m` onto the orthogonal complement.
    pub fn apply(&self, m: &DMatrix<f64>) -> DMatrix<f64> {
        if self.basis.nrows() == 0 {
            return m.clone();
        }
        m - self.basis.transpose() * (&self.basis * m)
    }

    /// Projects a single vector onto the orthogonal complement.
    pub fn apply_vector(&self, v: &DVector<f64>) -> DVector<f64> {
        if self.basis.nrows() == 0 {
            return v.clone();
        }
        v - self.basis.transpose() * (&self.basis * v)
    }
}

/// Residual norm of `v` after orthogonal projection onto the row span of
/// `rows`. Used by tests asserting subspace membership.
pub fn residual_from_row_span(rows: &DMatrix<f64>, v: &DVector<f64>, rel_tol: f64) -> f64 {
    let proj = ComplementProjector::from_rows(rows, rel_tol);
    let kept = proj.apply_vector(v);
    // `kept` is the part of `v` orthogonal to the span.
    kept.norm()
}

/// Sample mean and covariance (unbiased, `n - 1` divisor) of a matrix whose
/// rows are observations.
pub fn mean_and_covariance(samples: &DMatrix<f64>) -> (DVector<f64>, DMatrix<f64>) {
    let n = samples.nrows();
    let d = samples.ncols();
    assert!(n >= 2, "need at least two samples");
    let mean = DVector::from_fn(d, |j, _| samples.column(j).sum() / n as f64);
    let mut centered = samples.clone();
    for j in 0..d {
        centered.column_mut(j).add_scalar_mut(-mean[j]);
    }
    let cov = centered.tr_mul(&centered) / (n as f64 - 1.0);
    (mean, cov)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_of_rank_one_matrix() {
        let m = DMatrix::from_fn(4, 3, |i, j| (i as f64 + 1.0) * (j as f64 + 1.0));
        assert_eq!(numerical_rank(&m, 1e-9), 1);
    }

    #[test]
    fn rank_of_zero_matrix_is_zero() {
        let m = DMatrix::zeros(3, 3);
        assert_eq!(numerical_rank(&m, 1e-9), 0);
    }

    #[test]
    fn pseudo_inverse_of_tall_full_rank() {
        let m = DMatrix::from_row_slice(3, 2, &[1.0, 0.0, 0.0, 1.0, 1.0, 1.0]);
        let pinv = pseudo_inverse(&m, 1e-12);
        let eye = &pinv * &m;
        assert!((eye - DMatrix::identity(2, 2)).norm() < 1e-12);
    }

    #[test]
    fn complement_projector_annihilates_span() {
        let rows = DMatrix::from_row_slice(1, 3, &[1.0, 1.0, 0.0]);
        let proj = ComplementProjector::from_rows(&rows, 1e-12);
        let v = DVector::from_column_slice(&[2.0, 2.0, 0.0]);
        assert!(proj.apply_vector(&v).norm() < 1e-12);
        let w = DVector::from_column_slice(&[1.0, -1.0, 3.0]);
        assert!((proj.apply_vector(&w) - w).norm() < 1e-12);
    }

    #[test]
    fn mean_and_covariance_of_known_samples() {
        let s = DMatrix::from_row_slice(4, 2, &[1.0, 0.0, -1.0, 0.0, 0.0, 1.0, 0.0, -1.0]);
        let (mean, cov) = mean_and_covariance(&s);
        assert!(mean.norm() < 1e-15);
        assert!((cov[(0, 0)] - 2.0 / 3.0).abs() < 1e-15);
        assert!((cov[(1, 1)] - 2.0 / 3.0).abs() < 1e-15);
        assert!(cov[(0, 1)].abs() < 1e-15);
    }
}
