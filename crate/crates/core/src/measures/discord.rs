// SPDX-License-Identifier: Apache-2.0

use std::f64::consts::{PI, TAU};

use nalgebra::Matrix2;

use crate::correlators::XState;
use crate::linalg::{eigenvalues2, entropy_bits};
use crate::{Error, Result, C64, CLAMP_TOLERANCE};

/// Binary Shannon entropy in bits, `H(0) = H(1) = 0`.
pub fn binary_entropy(p: f64) -> Result<f64> {
    if !(-CLAMP_TOLERANCE..=1.0 + CLAMP_TOLERANCE).contains(&p) {
        return Err(Error::InvalidParameter { name: "p", value: p, reason: "must lie in [0, 1]" });
    }
    let p = p.clamp(0.0, 1.0);
    Ok(entropy_bits([p, 1.0 - p]))
}

/// Projective measurement on the second qubit:
/// `|0̃⟩ = cos(θ/2)|0⟩ + e^{iφ} sin(θ/2)|1⟩`, `|1̃⟩ = sin(θ/2)|0⟩ - e^{iφ} cos(θ/2)|1⟩`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasurementBasis {
    theta: f64,
    phi: f64,
}

impl MeasurementBasis {
    pub fn new(theta: f64, phi: f64) -> Result<Self> {
        if !(0.0..=PI).contains(&theta) {
            return Err(Error::InvalidParameter { name: "theta'", value: theta, reason: "must lie in [0, π]" });
        }
        if !(0.0..TAU).contains(&phi) {
            return Err(Error::InvalidParameter { name: "phi'", value: phi, reason: "must lie in [0, 2π)" });
        }
        Ok(Self { theta, phi })
    }

    /// The basis `θ' = π/2, φ' = 0` (a `σˣ` measurement).
    pub fn sigma_x() -> Self {
        Self { theta: PI / 2.0, phi: 0.0 }
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    /// Components `(c₀, c₁)` of both outcome vectors.
    pub fn outcomes(&self) -> [[C64; 2]; 2] {
        let (s, c) = (0.5 * self.theta).sin_cos();
        let phase = C64::from_polar(1.0, self.phi);
        [[C64::new(c, 0.0), phase * s], [C64::new(s, 0.0), -phase * c]]
    }
}

/// `Σₖ pₖ S(ρ₁|ₖ)` after measuring qubit 2 of an X state in `basis`.
///
/// The unnormalized conditional state for outcome `(c₀, c₁)` is
///
/// ```text
/// ⎡ |c₀|²u + |c₁|²w₁        c₀*c₁ x + c₁*c₀ y ⎤
/// ⎣ c.c.                    |c₀|²w₂ + |c₁|²v  ⎦
/// ```
pub fn conditional_entropy(state: &XState, basis: &MeasurementBasis) -> f64 {
    basis
        .outcomes()
        .iter()
        .map(|[c0, c1]| {
            let (a0, a1) = (c0.norm_sqr(), c1.norm_sqr());
            let top = a0 * state.u + a1 * state.w1;
            let bottom = a0 * state.w2 + a1 * state.v;
            let coherence = c0.conj() * c1 * state.x + c1.conj() * c0 * state.y;
            let p = top + bottom;
            if p <= 0.0 {
                return 0.0;
            }
            let block =
                Matrix2::new(C64::new(top, 0.0), coherence, coherence.conj(), C64::new(bottom, 0.0)) / C64::new(p, 0.0);
            p * entropy_bits(eigenvalues2(&block))
        })
        .sum()
}

fn pair_root(state: &XState) -> f64 {
    (state.u - state.v).hypot(2.0 * state.x.norm())
}

/// Minimum conditional entropy, attained for the `σˣ` measurement:
/// `H((1 + √((u-v)² + 4|x|²)) / 2)`.
pub fn conditional_entropy_min(state: &XState) -> f64 {
    let p = (0.5 * (1.0 + pair_root(state))).min(1.0);
    entropy_bits([p, 1.0 - p])
}

/// Quantum discord `min S(ρ₁|₂) - S(ρ₁₂) + S(ρ₁)` in bits.
///
/// `ρ₁₂` has eigenvalues `(u+v ± √((u-v)²+4|x|²))/2` and `(w₁+w₂ ± √((w₁-w₂)²+4|y|²))/2`;
/// `ρ₁` has `u+w₁` and `v+w₂`. Values within `1e-12` below zero are clamped.
pub fn discord(state: &XState) -> Result<f64> {
    let root = pair_root(state);
    let middle = (0.5 * (state.w1 - state.w2)).hypot(state.y.norm());
    let mean_w = state.w();
    let joint = entropy_bits([
        0.5 * (state.u + state.v + root),
        0.5 * (state.u + state.v - root),
        mean_w + middle,
        mean_w - middle,
    ]);
    let single = entropy_bits([state.u + state.w1, state.v + state.w2]);
    let d = conditional_entropy_min(state) - joint + single;
    if d < -CLAMP_TOLERANCE {
        return Err(Error::Inconsistent { quantity: "discord", value: d });
    }
    Ok(d.max(0.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Bond;

    fn c(re: f64) -> C64 {
        C64::new(re, 0.0)
    }

    fn bell() -> XState {
        XState::symmetric(0.5, 0.5, 0.0, c(0.5), Bond::Odd).unwrap()
    }

    fn mixed() -> XState {
        XState::symmetric(0.25, 0.25, 0.25, c(0.0), Bond::Odd).unwrap()
    }

    #[test]
    fn binary_entropy_values() {
        assert_eq!(binary_entropy(0.5).unwrap(), 1.0);
        assert_eq!(binary_entropy(0.0).unwrap(), 0.0);
        assert_eq!(binary_entropy(1.0).unwrap(), 0.0);
        assert!((binary_entropy(0.25).unwrap() - 0.811_278_124_459_132_9).abs() < 1e-15);
        assert!(binary_entropy(1.1).is_err());
        assert!(binary_entropy(-0.01).is_err());
    }

    #[test]
    fn basis_ranges() {
        assert!(MeasurementBasis::new(-0.1, 0.0).is_err());
        assert!(MeasurementBasis::new(0.1, TAU).is_err());
        let b = MeasurementBasis::new(1.0, 2.0).unwrap();
        let [o0, o1] = b.outcomes();
        let overlap = o0[0].conj() * o1[0] + o0[1].conj() * o1[1];
        assert!(overlap.norm() < 1e-15);
    }

    #[test]
    fn conditional_entropy_examples() {
        assert!(conditional_entropy(&bell(), &MeasurementBasis::sigma_x()).abs() < 1e-12);
        for (t, p) in [(0.0, 0.0), (1.0, 4.0), (PI, 0.5)] {
            let b = MeasurementBasis::new(t, p).unwrap();
            assert!((conditional_entropy(&mixed(), &b) - 1.0).abs() < 1e-12);
        }
        assert_eq!(conditional_entropy_min(&bell()), 0.0);
        assert_eq!(conditional_entropy_min(&mixed()), 1.0);
    }

    #[test]
    fn closed_form_matches_sigma_x_measurement() {
        let s = XState::symmetric(0.6, 0.1, 0.15, c(-0.2), Bond::Odd).unwrap();
        let diff = conditional_entropy(&s, &MeasurementBasis::sigma_x()) - conditional_entropy_min(&s);
        assert!(diff.abs() < 1e-12);
    }

    #[test]
    fn discord_examples() {
        assert!((discord(&bell()).unwrap() - 1.0).abs() < 1e-12);
        assert!(discord(&mixed()).unwrap().abs() < 1e-12);
        let product = XState::symmetric(1.0, 0.0, 0.0, c(0.0), Bond::Even).unwrap();
        assert_eq!(discord(&product).unwrap(), 0.0);
    }
}
