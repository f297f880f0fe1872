//! Numeric support: compensated summation, deterministic Hermitian
//! eigendecomposition, and fixed-subspace projectors.

use std::cmp::Ordering;

use nalgebra::{DMatrix, SMatrix, SVector};

use crate::{C64, Error, Result};

/// Kahan compensated accumulator. Used wherever many small terms are summed
/// (state norms, quadrature sweeps) so results are insensitive to term count.
#[derive(Clone, Copy, Debug, Default)]
pub struct KahanSum {
    sum: f64,
    carry: f64,
}

impl KahanSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: f64) {
        let y = x - self.carry;
        let t = self.sum + y;
        self.carry = (t - self.sum) - y;
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum
    }
}

/// Eigendecomposition of a Hermitian matrix with eigenvalues sorted in
/// descending order; eigenvector columns are permuted to match.
///
/// The ordering (and the deterministic underlying solver) pins down the
/// basis returned inside degenerate clusters, so repeated runs are
/// bit-identical; uniqueness of that basis is still up to the caller to
/// reason about.
pub fn hermitian_eigen_desc(m: DMatrix<C64>) -> Result<(Vec<f64>, DMatrix<C64>)> {
    let n = m.nrows();
    debug_assert_eq!(n, m.ncols());
    let se = nalgebra::SymmetricEigen::try_new(m, f64::EPSILON, 0)
        .ok_or_else(|| Error::EigenFailure("Hermitian eigensolve did not converge".into()))?;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        se.eigenvalues[b].partial_cmp(&se.eigenvalues[a]).unwrap_or(Ordering::Equal)
    });
    let values: Vec<f64> = order.iter().map(|&i| se.eigenvalues[i]).collect();
    let mut vectors = DMatrix::zeros(n, n);
    for (dst, &src) in order.iter().enumerate() {
        vectors.set_column(dst, &se.eigenvectors.column(src));
    }
    Ok((values, vectors))
}

/// Eigenvalues only, descending.
pub fn hermitian_eigenvalues_desc(m: DMatrix<C64>) -> Result<Vec<f64>> {
    hermitian_eigen_desc(m).map(|(vals, _)| vals)
}

/// Orthogonal projector onto the fixed subspace `{v : M v = v}` of a real
/// 16×16 matrix, computed from the SVD of `M − 𝟙`.
///
/// Singular values at most `tol` count as zero. For the (orthogonal, hence
/// normal) transfer matrices this module is used with, the singular values
/// of `M − 𝟙` are exactly `|λ_i − 1|`, so `tol` is a distance-from-unity
/// threshold on the eigenvalues.
pub fn fixed_space_projector(
    m: &SMatrix<f64, 16, 16>,
    tol: f64,
) -> Result<SMatrix<f64, 16, 16>> {
    let svd = (m - SMatrix::<f64, 16, 16>::identity()).svd(false, true);
    let v_t = svd
        .v_t
        .as_ref()
        .ok_or_else(|| Error::EigenFailure("SVD did not produce right singular vectors".into()))?;
    let mut p = SMatrix::<f64, 16, 16>::zeros();
    // singular values are sorted descending; the null space sits at the tail
    for i in (0..16).rev() {
        if svd.singular_values[i] > tol {
            break;
        }
        let v: SVector<f64, 16> = v_t.row(i).transpose();
        p += v * v.transpose();
    }
    Ok(p)
}
