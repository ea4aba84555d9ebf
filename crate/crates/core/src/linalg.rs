// SPDX-License-Identifier: Apache-2.0

use nalgebra::{ComplexField, DMatrix, Matrix2, Matrix4, SymmetricEigen};

use crate::C64;

pub(crate) fn eigenvalues4(m: &Matrix4<C64>) -> [f64; 4] {
    let e = SymmetricEigen::new(*m).eigenvalues;
    [e[0], e[1], e[2], e[3]]
}

pub(crate) fn eigh4(m: &Matrix4<C64>) -> SymmetricEigen<C64, nalgebra::U4> {
    SymmetricEigen::new(*m)
}

pub(crate) fn eigenvalues_dyn(m: &DMatrix<C64>) -> Vec<f64> {
    SymmetricEigen::new(m.clone()).eigenvalues.iter().copied().collect()
}

/// Closed-form eigenvalues of a 2×2 Hermitian matrix, larger first.
pub(crate) fn eigenvalues2(m: &Matrix2<C64>) -> [f64; 2] {
    let a = m[(0, 0)].re;
    let d = m[(1, 1)].re;
    let mean = 0.5 * (a + d);
    let radius = (0.5 * (a - d)).hypot(m[(0, 1)].modulus());
    [mean + radius, mean - radius]
}

/// `-Σ p log₂ p`, treating non-positive weights as zero.
pub(crate) fn entropy_bits<I: IntoIterator<Item = f64>>(probabilities: I) -> f64 {
    probabilities.into_iter().filter(|&p| p > 0.0).map(|p| -p * p.log2()).sum()
}

pub(crate) fn is_hermitian(m: &DMatrix<C64>, tol: f64) -> bool {
    (m - m.adjoint()).iter().all(|z| z.norm() <= tol)
}
