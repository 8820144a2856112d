//! Hermitian eigenmachinery: decomposition, spectral maps, supports and
//! kernels. Everything downstream (Helstrom projectors, square root
//! measurements, confidence limits) reduces to these few functions.
//!
//! Repeated eigenvalues come back with an arbitrary orthonormal basis of
//! the eigenspace; every consumer in this crate is basis-invariant and the
//! tests check that.

use nalgebra::linalg::SymmetricEigen;

use crate::error::Result;
use crate::types::{cxr, hermitize, max_abs, CMat, CVec, DensityOperator, HermitianOperator, PureState, Tolerances};

/// Eigenvalues (descending) with matching orthonormal eigenvector columns.
pub(crate) fn eigh(mat: &CMat) -> (Vec<f64>, CMat) {
    let h = hermitize(mat);
    let eig = SymmetricEigen::new(h);
    let n = eig.eigenvalues.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[b].partial_cmp(&eig.eigenvalues[a]).unwrap());
    let values: Vec<f64> = order.iter().map(|&k| eig.eigenvalues[k]).collect();
    let mut vectors = CMat::zeros(n, n);
    for (col, &k) in order.iter().enumerate() {
        vectors.column_mut(col).copy_from(&eig.eigenvectors.column(k));
    }
    (values, vectors)
}

/// Spectral decomposition of a Hermitian operator, eigenvalues descending.
/// Eigenvectors are unit norm; reconstruction sum lambda |v><v| matches the
/// input to solver precision.
pub fn eigendecompose(op: &HermitianOperator) -> Vec<(f64, PureState)> {
    let (values, vectors) = eigh(op.matrix());
    values
        .into_iter()
        .enumerate()
        .map(|(k, lambda)| {
            let v: CVec = vectors.column(k).into_owned();
            (lambda, PureState::new(v).expect("eigenvectors are unit norm"))
        })
        .collect()
}

pub(crate) fn min_eigenvalue(mat: &CMat) -> f64 {
    let (values, _) = eigh(mat);
    *values.last().expect("non-empty matrix")
}

pub(crate) fn max_eigenvalue(mat: &CMat) -> f64 {
    let (values, _) = eigh(mat);
    values[0]
}

/// Apply f(lambda) to each eigenvalue above the relative rank cutoff and 0
/// to the rest, then reassemble. The cutoff is rank_tol * lambda_max, so a
/// zero operator maps to zero.
pub(crate) fn spectral_map_above_cutoff(
    mat: &CMat,
    rank_tol: f64,
    f: impl Fn(f64) -> f64,
) -> CMat {
    let (values, vectors) = eigh(mat);
    let n = values.len();
    let cutoff = values[0].max(0.0) * rank_tol;
    let mut out = CMat::zeros(n, n);
    for k in 0..n {
        if values[k] > cutoff && values[k] > 0.0 {
            let v = vectors.column(k);
            out += v * v.adjoint() * cxr(f(values[k]));
        }
    }
    out
}

/// Projector onto the span of eigenvectors above the relative rank cutoff.
pub(crate) fn support_projector_mat(mat: &CMat, rank_tol: f64) -> CMat {
    spectral_map_above_cutoff(mat, rank_tol, |_| 1.0)
}

/// lambda -> lambda^(-1/2) on the support, 0 on the kernel.
pub(crate) fn support_inv_sqrt_mat(mat: &CMat, rank_tol: f64) -> CMat {
    spectral_map_above_cutoff(mat, rank_tol, |l| 1.0 / l.sqrt())
}

/// Pseudo-inverse square root of a state: eigenvalues above the rank cutoff
/// map to lambda^(-1/2), the kernel is annihilated. The result r satisfies
/// r rho r = support projector of rho.
pub fn support_inverse_sqrt(rho: &DensityOperator, tol: &Tolerances) -> HermitianOperator {
    HermitianOperator::new_unchecked(support_inv_sqrt_mat(rho.matrix(), tol.rank))
}

/// Projector onto the kernel of a state: identity minus the support.
/// Idempotent, and k rho k = 0 within tolerance.
pub fn kernel_projector(rho: &DensityOperator, tol: &Tolerances) -> HermitianOperator {
    let n = rho.dim();
    let supp = support_projector_mat(rho.matrix(), tol.rank);
    HermitianOperator::new_unchecked(CMat::identity(n, n) - supp)
}

/// Rank relative to the largest eigenvalue; 0 for (numerically) zero input.
pub(crate) fn rank_of(mat: &CMat, rank_tol: f64) -> usize {
    let (values, _) = eigh(mat);
    let cutoff = values[0].max(0.0) * rank_tol;
    values.iter().filter(|&&l| l > cutoff && l > 0.0).count()
}

/// Reconstruction residual, useful when asserting solver quality.
pub fn reconstruction_residual(op: &HermitianOperator) -> Result<f64> {
    let pairs = eigendecompose(op);
    let n = op.dim();
    let mut recon = CMat::zeros(n, n);
    for (lambda, v) in &pairs {
        recon += v.projector() * cxr(*lambda);
    }
    Ok(max_abs(&(recon - op.matrix())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::types::cx;

    #[test]
    fn identity_has_unit_eigenvalues() {
        let op = HermitianOperator::new(CMat::identity(2, 2)).unwrap();
        let pairs = eigendecompose(&op);
        assert_eq!(pairs.len(), 2);
        for (lambda, _) in pairs {
            assert!((lambda - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn diagonal_eigenvalues_sorted_descending() {
        let m = CMat::from_row_slice(2, 2, &[cxr(3.0), cxr(0.0), cxr(0.0), cxr(-1.0)]);
        let op = HermitianOperator::new(m).unwrap();
        let pairs = eigendecompose(&op);
        assert!((pairs[0].0 - 3.0).abs() < 1e-14);
        assert!((pairs[1].0 + 1.0).abs() < 1e-14);
        assert!((pairs[0].1.amplitudes()[0].norm() - 1.0).abs() < 1e-12);
        assert!((pairs[1].1.amplitudes()[1].norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn half_identity_plus_sigma_x() {
        // (I + sigma_x)/2 has eigenvalues {1, 0} with eigenvectors (|0> +- |1>)/sqrt(2).
        let m = CMat::from_row_slice(2, 2, &[cxr(0.5), cxr(0.5), cxr(0.5), cxr(0.5)]);
        let op = HermitianOperator::new(m).unwrap();
        let pairs = eigendecompose(&op);
        assert!((pairs[0].0 - 1.0).abs() < 1e-14);
        assert!(pairs[1].0.abs() < 1e-14);
        let top = &pairs[0].1;
        let plus = PureState::qubit(cxr(1.0 / 2f64.sqrt()), cxr(1.0 / 2f64.sqrt())).unwrap();
        assert!((top.inner(&plus).norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn support_inverse_sqrt_of_half_identity() {
        let rho = DensityOperator::new(CMat::identity(2, 2) * cxr(0.5)).unwrap();
        let r = support_inverse_sqrt(&rho, &Tolerances::default());
        let expect = CMat::identity(2, 2) * cxr(2f64.sqrt());
        assert!(max_abs(&(r.matrix() - expect)) < 1e-12);
    }

    #[test]
    fn support_inverse_sqrt_annihilates_kernel() {
        let rho = PureState::basis_state(2, 0).density();
        let r = support_inverse_sqrt(&rho, &Tolerances::default());
        assert!(max_abs(&(r.matrix() - rho.matrix())) < 1e-12);
        // r rho r equals the support projector.
        let p = r.matrix() * rho.matrix() * r.matrix();
        assert!(max_abs(&(p - rho.matrix())) < 1e-12);
    }

    #[test]
    fn support_inverse_sqrt_rank_deficient_diagonal() {
        let m = CMat::from_row_slice(
            3,
            3,
            &[
                cxr(0.5), cxr(0.0), cxr(0.0),
                cxr(0.0), cxr(0.5), cxr(0.0),
                cxr(0.0), cxr(0.0), cxr(0.0),
            ],
        );
        let rho = DensityOperator::new(m).unwrap();
        let r = support_inverse_sqrt(&rho, &Tolerances::default());
        let s = 2f64.sqrt();
        for (k, want) in [s, s, 0.0].iter().enumerate() {
            assert!((r.matrix()[(k, k)].re - want).abs() < 1e-12);
        }
    }

    #[test]
    fn kernel_projector_cases() {
        let tol = Tolerances::default();
        let full = DensityOperator::new(CMat::identity(2, 2) * cxr(0.5)).unwrap();
        assert!(max_abs(kernel_projector(&full, &tol).matrix()) < 1e-12);

        let pure = PureState::basis_state(2, 0).density();
        let k = kernel_projector(&pure, &tol);
        assert!(max_abs(&(k.matrix() - PureState::basis_state(2, 1).projector())) < 1e-12);

        let m = CMat::from_row_slice(
            3,
            3,
            &[
                cxr(0.7), cxr(0.0), cxr(0.0),
                cxr(0.0), cxr(0.3), cxr(0.0),
                cxr(0.0), cxr(0.0), cxr(0.0),
            ],
        );
        let rho = DensityOperator::new(m).unwrap();
        let k = kernel_projector(&rho, &tol);
        let want = PureState::basis_state(3, 2).projector();
        assert!(max_abs(&(k.matrix() - want)) < 1e-12);
        // Idempotent and annihilating.
        assert!(max_abs(&(k.matrix() * k.matrix() - k.matrix())) < 1e-12);
        assert!(max_abs(&(k.matrix() * rho.matrix() * k.matrix())) < 1e-12);
    }

    #[test]
    fn degenerate_eigenspace_reconstructs() {
        // Two-fold degenerate block; any orthonormal basis of it must
        // reassemble the operator exactly.
        let m = CMat::from_row_slice(
            3,
            3,
            &[
                cxr(0.4), cx(0.0, 0.1), cxr(0.0),
                cx(0.0, -0.1), cxr(0.4), cxr(0.0),
                cxr(0.0), cxr(0.0), cxr(0.2),
            ],
        );
        let op = HermitianOperator::new(m).unwrap();
        assert!(reconstruction_residual(&op).unwrap() < 1e-12);
    }
}
