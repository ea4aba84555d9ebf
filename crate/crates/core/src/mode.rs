// SPDX-License-Identifier: Apache-2.0

//! Momentum blocks of the fermionized chain.
//!
//! Each block `q ∈ (0, π/2)` mixes the four momenta `{q-π, -q, q, π-q}`. Its single-particle
//! energies are `λ(η₁,η₂) = η₁|ε_q| + η₂ √(h² + |ε_q|²)` with `2ε_q = Jx e^{-iq} + Jy e^{iq}`,
//! and the ground state fills the two negative levels, leaving the six even-occupation
//! amplitudes `(α, β, γ, 1-β, -γ, α)` on `|1001⟩, |1111⟩, |1100⟩, |0000⟩, |0011⟩, |0110⟩`.

use std::f64::consts::PI;

use crate::{ModelParams, Result, C64};

/// Block momenta `q = π(2m-1)/N`, `m = 1..=N/4`, in increasing order.
pub fn momentum_grid(params: &ModelParams) -> Result<Vec<f64>> {
    params.require_analytic()?;
    let n = params.n_sites();
    Ok((1..=n / 4).map(|m| PI * (2 * m - 1) as f64 / n as f64).collect())
}

/// Returns `(|ε_q|, θ_q)` with `|ε_q| e^{-iθ_q} = ε_q`.
///
/// `θ_q = atan2((Jx-Jy) sin q, (Jx+Jy) cos q)`, so `θ_q = q` in the dimer limit `Jy = 0` and
/// `θ_q = 0` at `Jx = Jy`.
pub fn dispersion(params: &ModelParams, q: f64) -> (f64, f64) {
    let re = (params.jx() + params.jy()) * q.cos();
    let im = (params.jx() - params.jy()) * q.sin();
    (0.5 * re.hypot(im), im.atan2(re))
}

/// The four block energies `λ(η₁,η₂)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModeEnergies {
    pub minus_minus: f64,
    pub plus_minus: f64,
    pub minus_plus: f64,
    pub plus_plus: f64,
}

impl ModeEnergies {
    pub fn get(&self, eta1: i8, eta2: i8) -> f64 {
        match (eta1 > 0, eta2 > 0) {
            (false, false) => self.minus_minus,
            (true, false) => self.plus_minus,
            (false, true) => self.minus_plus,
            (true, true) => self.plus_plus,
        }
    }
}

pub fn mode_energies(params: &ModelParams, q: f64) -> ModeEnergies {
    let (eps, _) = dispersion(params, q);
    let root = params.h().hypot(eps);
    ModeEnergies { minus_minus: -eps - root, plus_minus: eps - root, minus_plus: -eps + root, plus_plus: eps + root }
}

/// Per-block dispersion data and ground-state amplitudes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModeAmplitudes {
    pub q: f64,
    pub eps: f64,
    pub theta: f64,
    /// `h / λ(-,-)`.
    pub h1: f64,
    /// `h / λ(+,-)`; `-∞` at `h = 0`, where `λ(+,-)` vanishes.
    pub h2: f64,
    pub alpha: C64,
    pub beta: C64,
    pub gamma: C64,
    pub one_minus_beta: C64,
}

impl ModeAmplitudes {
    /// The six amplitudes in block-state order `|1001⟩, |1111⟩, |1100⟩, |0000⟩, |0011⟩, |0110⟩`.
    pub fn components(&self) -> [C64; 6] {
        [self.alpha, self.beta, self.gamma, self.one_minus_beta, -self.gamma, self.alpha]
    }

    pub fn probabilities(&self) -> [f64; 6] {
        self.components().map(|c| c.norm_sqr())
    }

    pub fn norm_sqr(&self) -> f64 {
        self.probabilities().iter().sum()
    }
}

/// Ground-state amplitudes of block `q`, evaluated at `|h|`.
///
/// With `t = |h| / (|ε| + √(h²+|ε|²))` one has `h₁ = -t` and `h₂ = -1/t`, and the amplitudes
/// reduce to
///
/// ```text
/// α = -i (1-t²) sin θ / (2(1+t²))     β = (1-t)² / (2(1+t²))     γ = -(1-t²) cos θ / (2(1+t²))
/// ```
///
/// which is free of the `0/0` in `h₂` at the critical field: `t = 0` gives the limit
/// `α = -i sin θ / 2`, `β = 1/2`, `γ = -cos θ / 2` directly.
pub fn amplitudes(params: &ModelParams, q: f64) -> ModeAmplitudes {
    let (eps, theta) = dispersion(params, q);
    let h = params.h().abs();
    let t = h / (eps + h.hypot(eps));
    let (h1, h2) = if h == 0.0 { (0.0, f64::NEG_INFINITY) } else { (-t, -1.0 / t) };
    let t2 = t * t;
    let denom = 2.0 * (1.0 + t2);
    let odd = (1.0 - t2) / denom;
    let beta = (1.0 - t) * (1.0 - t) / denom;
    ModeAmplitudes {
        q,
        eps,
        theta,
        h1,
        h2,
        alpha: C64::new(0.0, -odd * theta.sin()),
        beta: C64::new(beta, 0.0),
        gamma: C64::new(-odd * theta.cos(), 0.0),
        one_minus_beta: C64::new((1.0 + t) * (1.0 + t) / denom, 0.0),
    }
}

/// `E₀ = 2 Σ_q (λ(-,-) + λ(+,-)) = -4 Σ_q √(h² + |ε_q|²)`.
pub fn ground_energy(params: &ModelParams) -> Result<f64> {
    Ok(momentum_grid(params)?
        .into_iter()
        .map(|q| {
            let e = mode_energies(params, q);
            2.0 * (e.minus_minus + e.plus_minus)
        })
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Error;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, FRAC_PI_6};

    fn params(r: f64, h: f64, n: usize) -> ModelParams {
        ModelParams::with_ratio(r, h, n).unwrap()
    }

    #[test]
    fn grid_examples() {
        assert_eq!(momentum_grid(&params(1.0, 0.0, 4)).unwrap(), vec![PI / 4.0]);
        assert_eq!(momentum_grid(&params(1.0, 0.0, 8)).unwrap(), vec![PI / 8.0, 3.0 * PI / 8.0]);
        let g12 = momentum_grid(&params(1.0, 0.0, 12)).unwrap();
        for (a, b) in g12.iter().zip([PI / 12.0, PI / 4.0, 5.0 * PI / 12.0]) {
            assert!((a - b).abs() < 1e-15);
        }
        assert_eq!(momentum_grid(&params(1.0, 0.0, 6)), Err(Error::AnalyticUnavailable { n_sites: 6 }));
    }

    #[test]
    fn grid_size_and_range() {
        for n in (4..=400).step_by(4) {
            let g = momentum_grid(&params(1.0, 0.0, n)).unwrap();
            assert_eq!(g.len(), n / 4);
            assert!(g.iter().all(|&q| q > 0.0 && q < FRAC_PI_2));
            assert!(g.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn dispersion_uniform_couplings() {
        let (eps, theta) = dispersion(&params(1.0, 0.0, 4), FRAC_PI_4);
        assert!((eps - FRAC_PI_4.cos()).abs() < 1e-15);
        assert_eq!(theta, 0.0);
    }

    #[test]
    fn dispersion_dimer_limit() {
        for q in [0.1, 0.5, 1.2] {
            let (eps, theta) = dispersion(&params(0.0, 0.0, 4), q);
            assert!((eps - 0.5).abs() < 1e-15);
            assert!((theta - q).abs() < 1e-15);
        }
    }

    #[test]
    fn dispersion_reconstructs_epsilon() {
        let p = params(2.0, 0.0, 4);
        let q = FRAC_PI_6;
        let (eps, theta) = dispersion(&p, q);
        // 2ε_q = Jx e^{-iq} + Jy e^{iq}
        let target = (C64::from_polar(1.0, -q) + C64::from_polar(2.0, q)) * 0.5;
        let rebuilt = C64::from_polar(eps, -theta);
        assert!((rebuilt - target).norm() < 1e-14);
        let e_formula = 0.5 * ((3.0 * q.cos()).powi(2) + (q.sin()).powi(2)).sqrt();
        assert!((eps - e_formula).abs() < 1e-14);
        assert!(theta > -FRAC_PI_2 && theta < 0.0);
    }

    #[test]
    fn energies_at_zero_field() {
        let e = mode_energies(&params(1.0, 0.0, 4), FRAC_PI_4);
        let eps = FRAC_PI_4.cos();
        assert_eq!([e.minus_minus, e.plus_minus, e.minus_plus, e.plus_plus], [-2.0 * eps, 0.0, 0.0, 2.0 * eps]);
    }

    #[test]
    fn energies_direct_substitution() {
        let e = mode_energies(&params(1.0, 0.5, 4), FRAC_PI_4);
        let c = FRAC_PI_4.cos();
        assert!((e.get(-1, -1) - (-c - (0.25 + c * c).sqrt())).abs() < 1e-15);
        assert!(e.minus_minus <= e.plus_minus && e.plus_minus <= e.minus_plus && e.minus_plus <= e.plus_plus);
    }

    #[test]
    fn energies_large_field() {
        let e = mode_energies(&params(1.0, 1e6, 4), 0.3);
        for (lam, target) in [(e.minus_minus, -1e6), (e.plus_minus, -1e6), (e.minus_plus, 1e6), (e.plus_plus, 1e6)] {
            assert!((lam - target).abs() / 1e6 < 1e-6);
        }
    }

    #[test]
    fn amplitudes_zero_field_uniform() {
        let a = amplitudes(&params(1.0, 0.0, 8), 0.7);
        assert!(a.alpha.norm() < 1e-15);
        assert_eq!(a.beta, C64::new(0.5, 0.0));
        assert!((a.gamma - C64::new(-0.5, 0.0)).norm() < 1e-15);
        assert_eq!(a.one_minus_beta, C64::new(0.5, 0.0));
        assert_eq!(a.h1, 0.0);
        assert_eq!(a.h2, f64::NEG_INFINITY);
    }

    #[test]
    fn amplitudes_polarized_limit() {
        let a = amplitudes(&params(0.7, 1e9, 8), 0.7);
        assert!(a.alpha.norm() < 1e-8 && a.beta.norm() < 1e-8 && a.gamma.norm() < 1e-8);
        assert!((a.one_minus_beta.re - 1.0).abs() < 1e-8);
    }

    #[test]
    fn amplitudes_match_ratio_form() {
        // β = (1+h₁)(1+h₂) / (2(h₁+h₂)) and α = -i(h₂-h₁) sin θ / (2(h₁+h₂)) with h_i = h/λ.
        let p = params(0.6, 0.8, 8);
        let q = 0.9;
        let e = mode_energies(&p, q);
        let (_, theta) = dispersion(&p, q);
        let h1 = p.h() / e.minus_minus;
        let h2 = p.h() / e.plus_minus;
        let a = amplitudes(&p, q);
        assert!((a.h1 - h1).abs() < 1e-12 && (a.h2 - h2).abs() < 1e-12);
        assert!((a.beta.re - (1.0 + h1) * (1.0 + h2) / (2.0 * (h1 + h2))).abs() < 1e-12);
        assert!((a.alpha.im - (-(h2 - h1) * theta.sin() / (2.0 * (h1 + h2)))).abs() < 1e-12);
        // γ = -iα cot θ
        let gamma = C64::new(0.0, -1.0) * a.alpha / theta.tan();
        assert!((a.gamma - gamma).norm() < 1e-12);
    }

    #[test]
    fn amplitudes_continuous_at_zero_field() {
        let q = 0.4;
        let zero = amplitudes(&params(0.5, 0.0, 8), q);
        for h in [1e-7, -1e-7] {
            let a = amplitudes(&params(0.5, h, 8), q);
            for (x, y) in a.components().iter().zip(zero.components()) {
                assert!((x.norm() - y.norm()).abs() < 1e-6);
            }
        }
    }

    #[test]
    fn ground_energy_single_mode() {
        let e = ground_energy(&params(1.0, 0.0, 4)).unwrap();
        assert!((e + 2.0 * 2f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn ground_energy_dimer_chain() {
        // Decoupled dimers each contribute -√(1+4h²).
        for h in [0.0, 0.5, 1.0] {
            let e = ground_energy(&params(0.0, h, 12)).unwrap();
            assert!((e + 6.0 * (1.0 + 4.0 * h * h).sqrt()).abs() < 1e-12);
        }
    }
}
