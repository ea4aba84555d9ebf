// SPDX-License-Identifier: Apache-2.0

use nalgebra::{DMatrix, Matrix4};

use crate::correlators::XState;
use crate::linalg::{eigh4, is_hermitian};
use crate::{Error, Result, C64};

const PHYSICAL_TOLERANCE: f64 = 1e-10;

/// Concurrence of an X state: `2 max(0, |x| - √(w₁w₂), |y| - √(uv))`.
///
/// For the chain (`y = 0`, `w₁ = w₂ = w`) this is `2 max(0, |x| - w)`.
pub fn concurrence_x(state: &XState) -> f64 {
    let outer = state.x.norm() - (state.w1 * state.w2).sqrt();
    let inner = state.y.norm() - (state.u * state.v).sqrt();
    2.0 * outer.max(inner).max(0.0)
}

/// `(σʸ⊗σʸ) ρ* (σʸ⊗σʸ)`.
pub fn spin_flip(rho: &Matrix4<C64>) -> Matrix4<C64> {
    let one = C64::new(1.0, 0.0);
    let z = C64::new(0.0, 0.0);
    #[rustfmt::skip]
    let yy = Matrix4::new(
        z, z, z, -one,
        z, z, one, z,
        z, one, z, z,
        -one, z, z, z,
    );
    yy * rho.conjugate() * yy
}

/// Wootters concurrence `max(0, λ₁ - λ₂ - λ₃ - λ₄)` of an arbitrary two-qubit state.
///
/// The `λᵢ` are the singular values of `√ρ √ρ̃`, i.e. the square roots of the eigenvalues of
/// `ρρ̃`, in decreasing order.
pub fn wootters(rho: &Matrix4<C64>) -> Result<f64> {
    let dynamic = DMatrix::from_iterator(4, 4, rho.iter().copied());
    if !is_hermitian(&dynamic, PHYSICAL_TOLERANCE) {
        return Err(Error::NonPhysical("matrix is not Hermitian".into()));
    }
    let trace = rho.trace();
    if (trace.re - 1.0).abs() > PHYSICAL_TOLERANCE || trace.im.abs() > PHYSICAL_TOLERANCE {
        return Err(Error::NonPhysical(format!("trace {trace} != 1")));
    }
    let eig = eigh4(rho);
    if let Some(p) = eig.eigenvalues.iter().find(|&&p| p < -PHYSICAL_TOLERANCE) {
        return Err(Error::NonPhysical(format!("negative eigenvalue {p:e}")));
    }
    let roots = eig.eigenvalues.map(|p| C64::new(p.max(0.0).sqrt(), 0.0));
    let sqrt_rho = eig.eigenvectors * Matrix4::from_diagonal(&roots) * eig.eigenvectors.adjoint();
    let sqrt_flipped = spin_flip(&sqrt_rho);
    let mut lambdas: Vec<f64> = (sqrt_rho * sqrt_flipped).singular_values().iter().copied().collect();
    lambdas.sort_by(|a, b| b.total_cmp(a));
    Ok((lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3]).max(0.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Bond;

    fn c(re: f64) -> C64 {
        C64::new(re, 0.0)
    }

    #[test]
    fn bell_states() {
        let bell = XState::symmetric(0.5, 0.5, 0.0, c(0.5), Bond::Odd).unwrap();
        assert_eq!(concurrence_x(&bell), 1.0);
        assert!((wootters(&bell.matrix()).unwrap() - 1.0).abs() < 1e-7);
        let singlet = XState::new(0.0, 0.0, 0.5, 0.5, c(0.0), c(-0.5), Bond::Odd).unwrap();
        assert_eq!(concurrence_x(&singlet), 1.0);
    }

    #[test]
    fn separable_states() {
        let mixed = XState::symmetric(0.25, 0.25, 0.25, c(0.0), Bond::Odd).unwrap();
        assert_eq!(concurrence_x(&mixed), 0.0);
        assert!(wootters(&mixed.matrix()).unwrap() < 1e-12);
        let diag = XState::symmetric(0.6, 0.1, 0.15, c(0.0), Bond::Even).unwrap();
        assert_eq!(concurrence_x(&diag), 0.0);
    }

    #[test]
    fn rejects_non_physical() {
        let mut m = XState::symmetric(0.25, 0.25, 0.25, c(0.0), Bond::Odd).unwrap().matrix();
        m[(0, 0)] = c(0.5);
        assert!(matches!(wootters(&m), Err(Error::NonPhysical(_))));
        let mut m = XState::symmetric(0.25, 0.25, 0.25, c(0.0), Bond::Odd).unwrap().matrix();
        m[(0, 3)] = c(0.6);
        m[(3, 0)] = c(0.6);
        assert!(matches!(wootters(&m), Err(Error::NonPhysical(_))));
        let mut m = XState::symmetric(0.25, 0.25, 0.25, c(0.0), Bond::Odd).unwrap().matrix();
        m[(0, 3)] = c(0.1);
        assert!(matches!(wootters(&m), Err(Error::NonPhysical(_))));
    }
}
