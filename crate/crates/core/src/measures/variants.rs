// SPDX-License-Identifier: Apache-2.0

//! Approximate closed forms kept for comparison only.
//!
//! Both formulas disagree with the exact finite-`N` evaluation (the leading-order expression
//! gives `1/2` instead of `1` for decoupled dimers), so results are wrapped in
//! [`Unvalidated`] and never feed the regular measures.

use std::f64::consts::FRAC_PI_2;

use crate::correlators::{occupation, offdiag};
use crate::quadrature::integrate;
use crate::{Bond, Error, ModelParams, Result};

/// Marks a value produced by a formula that has not been validated against exact
/// diagonalization.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Unvalidated<T> {
    pub value: T,
}

impl<T> Unvalidated<T> {
    pub fn into_inner(self) -> T {
        self.value
    }
}

const QUADRATURE_TOLERANCE: f64 = 1e-12;

/// Modulus `x = 4r / (1+r)²` of the zero-field integrals.
pub fn elliptic_modulus(r: f64) -> f64 {
    4.0 * r / ((1.0 + r) * (1.0 + r))
}

/// Zero-field, infinite-chain concurrences `(1/4 + f(1-f), 1/4 + g(1-g))` with
///
/// ```text
/// f, g = ∫₀^{π/2} dq / √(1 - x² sin² q)  ∓  2r/(1+r) ∫₀^{π/2} sin² q dq / √(1 - x² sin² q)
/// ```
pub fn elliptic_concurrence_h0(r: f64) -> Result<Unvalidated<(f64, f64)>> {
    if !(r.is_finite() && r >= 0.0) {
        return Err(Error::InvalidParameter { name: "r", value: r, reason: "must be finite and >= 0" });
    }
    let x = elliptic_modulus(r);
    if x >= 1.0 - 1e-15 {
        return Err(Error::Divergent("zero-field elliptic integral at r = 1"));
    }
    let k2 = x * x;
    let first = integrate(|q: f64| 1.0 / (1.0 - k2 * q.sin().powi(2)).sqrt(), 0.0, FRAC_PI_2, QUADRATURE_TOLERANCE)?;
    let second = integrate(
        |q: f64| q.sin().powi(2) / (1.0 - k2 * q.sin().powi(2)).sqrt(),
        0.0,
        FRAC_PI_2,
        QUADRATURE_TOLERANCE,
    )?;
    let weight = 2.0 * r / (1.0 + r);
    let f = first.value - weight * second.value;
    let g = first.value + weight * second.value;
    Ok(Unvalidated { value: (0.25 + f * (1.0 - f), 0.25 + g * (1.0 - g)) })
}

/// Leading-order concurrence `|x|(1-|x|) + n₁(1-n₁)`.
pub fn concurrence_single_mode_approx(params: &ModelParams, bond: Bond) -> Result<Unvalidated<f64>> {
    let n1 = occupation(params)?;
    let x = offdiag(params, bond)?.norm();
    Ok(Unvalidated { value: x * (1.0 - x) + n1 * (1.0 - n1) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn modulus_endpoints() {
        assert_eq!(elliptic_modulus(0.0), 0.0);
        assert_eq!(elliptic_modulus(1.0), 1.0);
    }

    #[test]
    fn dimer_limit_integrals() {
        let (c12, c23) = elliptic_concurrence_h0(0.0).unwrap().into_inner();
        let f = FRAC_PI_2;
        assert!((c12 - (0.25 + f * (1.0 - f))).abs() < 1e-13);
        assert_eq!(c12, c23);
    }

    #[test]
    fn divergent_at_uniform_couplings() {
        assert!(matches!(elliptic_concurrence_h0(1.0), Err(Error::Divergent(_))));
        assert!(elliptic_concurrence_h0(-1.0).is_err());
    }

    #[test]
    fn approx_examples() {
        let dimer = concurrence_single_mode_approx(&ModelParams::with_ratio(0.0, 0.0, 100).unwrap(), Bond::Odd).unwrap();
        assert!((dimer.value - 0.5).abs() < 1e-14);
        let strong = concurrence_single_mode_approx(&ModelParams::with_ratio(0.5, 1e9, 100).unwrap(), Bond::Odd).unwrap();
        assert!(strong.value.abs() < 1e-8);
        let uniform = concurrence_single_mode_approx(&ModelParams::with_ratio(1.0, 0.0, 4000).unwrap(), Bond::Odd).unwrap();
        let x = 1.0 / PI;
        assert!((uniform.value - (x * (1.0 - x) + 0.25)).abs() < 1e-6);
    }
}
