//! Dense complex-matrix helpers backing the verification oracles.

use nalgebra::DMatrix;
use num_complex::Complex64;
use std::f64::consts::TAU;

pub type CMatrix = DMatrix<Complex64>;

pub fn identity(dim: usize) -> CMatrix {
    CMatrix::identity(dim, dim)
}

/// Largest singular value.
pub fn spectral_norm(m: &CMatrix) -> f64 {
    m.clone()
        .singular_values()
        .iter()
        .cloned()
        .fold(0.0, f64::max)
}

/// Largest entry magnitude (max-norm).
pub fn max_abs(m: &CMatrix) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// `max |a_ij - b_ij|`; panics on shape mismatch.
pub fn max_abs_diff(a: &CMatrix, b: &CMatrix) -> f64 {
    assert_eq!(a.shape(), b.shape(), "shape mismatch");
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

/// Deviation from unitarity, `max |(M^dag M - I)_ij|`.
pub fn unitarity_defect(m: &CMatrix) -> f64 {
    let dim = m.nrows();
    max_abs_diff(&(m.adjoint() * m), &identity(dim))
}

/// Discrete Fourier matrix `F_jk = dim^{-1/2} exp(2 pi i j k / dim)`, the
/// matrix the QFT circuit must reproduce.
pub fn dft_matrix(dim: usize) -> CMatrix {
    let scale = (dim as f64).sqrt().recip();
    CMatrix::from_fn(dim, dim, |j, k| {
        Complex64::from_polar(scale, TAU * (j as f64) * (k as f64) / dim as f64)
    })
}

/// Matrix exponential by scaling-and-squaring with a Taylor kernel.
///
/// The argument is scaled down until its 1-norm is below 1/2, the series is
/// summed to machine precision, and the result squared back up. Adequate to
/// ~1e-13 relative accuracy for the operator sizes used here.
pub fn expm(a: &CMatrix) -> CMatrix {
    let dim = a.nrows();
    assert_eq!(dim, a.ncols(), "expm needs a square matrix");
    let norm = one_norm(a);
    let squarings = if norm > 0.5 {
        (norm / 0.5).log2().ceil() as u32
    } else {
        0
    };
    let scaled = a.map(|z| z / 2f64.powi(squarings as i32));

    let mut result = identity(dim);
    let mut term = identity(dim);
    for k in 1..=60 {
        term = (&term * &scaled).map(|z| z / k as f64);
        result += &term;
        if one_norm(&term) < 1e-18 * one_norm(&result) {
            break;
        }
    }
    for _ in 0..squarings {
        result = &result * &result;
    }
    result
}

fn one_norm(m: &CMatrix) -> f64 {
    (0..m.ncols())
        .map(|j| m.column(j).iter().map(|z| z.norm()).sum())
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dft_matrix_is_unitary_and_matches_small_case() {
        for dim in [2usize, 4, 8, 16] {
            assert!(unitarity_defect(&dft_matrix(dim)) < 1e-13);
        }
        let f = dft_matrix(2);
        let r = 0.5f64.sqrt();
        assert!((f[(0, 0)] - Complex64::new(r, 0.0)).norm() < 1e-15);
        assert!((f[(1, 1)] - Complex64::new(-r, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn spectral_norm_of_diagonal_and_unitary() {
        let d = CMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![
            Complex64::new(0.3, 0.0),
            Complex64::new(-2.5, 0.0),
            Complex64::new(0.0, 1.0),
        ]));
        assert!((spectral_norm(&d) - 2.5).abs() < 1e-12);
        assert!((spectral_norm(&dft_matrix(8)) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn expm_zero_and_diagonal() {
        let z = CMatrix::zeros(4, 4);
        assert!(max_abs_diff(&expm(&z), &identity(4)) < 1e-15);

        let d = CMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![
            Complex64::new(0.0, 1.3),
            Complex64::new(-0.7, 0.0),
        ]));
        let e = expm(&d);
        assert!((e[(0, 0)] - Complex64::new(0.0, 1.3).exp()).norm() < 1e-14);
        assert!((e[(1, 1)] - Complex64::new(-0.7, 0.0).exp()).norm() < 1e-14);
        assert!(e[(0, 1)].norm() < 1e-15);
    }

    #[test]
    fn expm_matches_rotation_generator() {
        // exp(theta [[0,-1],[1,0]]) is a rotation by theta
        let theta = 1.234f64;
        let g = CMatrix::from_row_slice(
            2,
            2,
            &[
                Complex64::new(0.0, 0.0),
                Complex64::new(-theta, 0.0),
                Complex64::new(theta, 0.0),
                Complex64::new(0.0, 0.0),
            ],
        );
        let e = expm(&g);
        assert!((e[(0, 0)].re - theta.cos()).abs() < 1e-13);
        assert!((e[(0, 1)].re + theta.sin()).abs() < 1e-13);
        assert!((e[(1, 0)].re - theta.sin()).abs() < 1e-13);
    }

    #[test]
    fn expm_additivity_for_commuting_args() {
        // exp(A) exp(A) = exp(2A) exercises the squaring path
        let a = CMatrix::from_fn(3, 3, |i, j| {
            Complex64::new(0.2 * (i as f64 - j as f64), 0.1 * (i + j) as f64)
        });
        let lhs = expm(&a) * expm(&a);
        let rhs = expm(&a.map(|z| z * 2.0));
        assert!(max_abs_diff(&lhs, &rhs) < 1e-12);
    }
}
