// SPDX-License-Identifier: Apache-2.0

//! One- and two-point functions of the analytic ground state and the reduced states built
//! from them.
//!
//! All sums run over the exact finite-`N` momentum grid; large `N` stands in for the
//! thermodynamic limit. Density matrices use the basis `|00⟩, |01⟩, |10⟩, |11⟩` where `1` is an
//! occupied site (`σᶻ = +1`) and the first label belongs to the lower site of the pair.

use nalgebra::{Matrix2, Matrix4};

use crate::mode::{dispersion, momentum_grid};
use crate::{Bond, Error, ModelParams, Result, C64, CLAMP_TOLERANCE};

/// Fermion occupation `n₁ = ⟨c₁†c₁⟩ = 1/2 - (2/N) Σ_q |h| / √(|ε_q|² + h²)`.
pub fn occupation(params: &ModelParams) -> Result<f64> {
    let h = params.h().abs();
    let n = params.n_sites() as f64;
    let sum: f64 = momentum_grid(params)?
        .into_iter()
        .map(|q| {
            let (eps, _) = dispersion(params, q);
            h / h.hypot(eps)
        })
        .sum();
    Ok(0.5 - 2.0 / n * sum)
}

/// Pair amplitude `x = -(2/N) Σ_q |ε_q| cos(q ∓ θ_q) / √(|ε_q|² + h²)`, with `-` on the odd
/// bond and `+` on the even bond.
pub fn offdiag(params: &ModelParams, bond: Bond) -> Result<C64> {
    let h = params.h().abs();
    let n = params.n_sites() as f64;
    let sign = match bond {
        Bond::Odd => -1.0,
        Bond::Even => 1.0,
    };
    let sum: f64 = momentum_grid(params)?
        .into_iter()
        .map(|q| {
            let (eps, theta) = dispersion(params, q);
            eps * (q + sign * theta).cos() / h.hypot(eps)
        })
        .sum();
    Ok(C64::new(-2.0 / n * sum, 0.0))
}

fn clamp_unit(quantity: &'static str, value: f64) -> Result<f64> {
    if !(-CLAMP_TOLERANCE..=1.0 + CLAMP_TOLERANCE).contains(&value) || !value.is_finite() {
        return Err(Error::Inconsistent { quantity, value });
    }
    Ok(value.clamp(0.0, 1.0))
}

/// Diagonal entries `(u, v, w)` of the pair state.
///
/// The density-density correlator factorizes as `⟨n₁n₂⟩ = n₁² + |x|²` (the hopping
/// correlator vanishes), giving `v = ⟨n₁n₂⟩`, `w = n₁ - v`, `u = 1 + v - 2n₁`.
pub fn pair_diag(params: &ModelParams, bond: Bond) -> Result<(f64, f64, f64)> {
    let n1 = occupation(params)?;
    let x = offdiag(params, bond)?;
    diag_from(n1, x)
}

fn diag_from(n1: f64, x: C64) -> Result<(f64, f64, f64)> {
    let nn = n1 * n1 + x.norm_sqr();
    let u = clamp_unit("u", 1.0 + nn - 2.0 * n1)?;
    let v = clamp_unit("v", nn)?;
    let w = clamp_unit("w", n1 - nn)?;
    Ok((u, v, w))
}

/// `ρ₁ = diag(1 - n₁, n₁)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SingleQubitState {
    pub n1: f64,
}

impl SingleQubitState {
    pub fn new(n1: f64) -> Result<Self> {
        Ok(Self { n1: clamp_unit("n1", n1)? })
    }

    pub fn matrix(&self) -> Matrix2<f64> {
        Matrix2::new(1.0 - self.n1, 0.0, 0.0, self.n1)
    }

    pub fn purity(&self) -> f64 {
        (1.0 - self.n1).powi(2) + self.n1 * self.n1
    }
}

pub fn rho_single(params: &ModelParams) -> Result<SingleQubitState> {
    SingleQubitState::new(occupation(params)?)
}

/// Two-qubit density matrix with support on the diagonal and anti-diagonal only:
///
/// ```text
/// ⎡ u   0   0   x ⎤
/// ⎢ 0   w₁  y   0 ⎥
/// ⎢ 0   y*  w₂  0 ⎥
/// ⎣ x*  0   0   v ⎦
/// ```
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct XState {
    pub u: f64,
    pub v: f64,
    pub w1: f64,
    pub w2: f64,
    pub x: C64,
    pub y: C64,
    pub bond: Bond,
}

impl XState {
    /// Builds and validates an X state (unit trace, positivity of both 2×2 blocks).
    pub fn new(u: f64, v: f64, w1: f64, w2: f64, x: C64, y: C64, bond: Bond) -> Result<Self> {
        let state = Self { u, v, w1, w2, x, y, bond };
        state.validate()?;
        Ok(state)
    }

    /// The symmetric form `w₁ = w₂ = w`, `y = 0` realized by the chain.
    pub fn symmetric(u: f64, v: f64, w: f64, x: C64, bond: Bond) -> Result<Self> {
        Self::new(u, v, w, w, x, C64::new(0.0, 0.0), bond)
    }

    pub fn validate(&self) -> Result<()> {
        let entries = [self.u, self.v, self.w1, self.w2];
        if entries.iter().any(|e| !e.is_finite() || *e < -CLAMP_TOLERANCE) {
            return Err(Error::NonPhysical(format!("negative diagonal in {self:?}")));
        }
        if (self.trace() - 1.0).abs() > CLAMP_TOLERANCE {
            return Err(Error::NonPhysical(format!("trace {} != 1", self.trace())));
        }
        if self.x.norm_sqr() > self.u * self.v + CLAMP_TOLERANCE
            || self.y.norm_sqr() > self.w1 * self.w2 + CLAMP_TOLERANCE
        {
            return Err(Error::NonPhysical(format!("coherence exceeds populations in {self:?}")));
        }
        Ok(())
    }

    pub fn trace(&self) -> f64 {
        self.u + self.v + self.w1 + self.w2
    }

    /// Mean of the two middle populations.
    pub fn w(&self) -> f64 {
        0.5 * (self.w1 + self.w2)
    }

    pub fn matrix(&self) -> Matrix4<C64> {
        let z = C64::new(0.0, 0.0);
        let re = |v: f64| C64::new(v, 0.0);
        Matrix4::new(
            re(self.u),
            z,
            z,
            self.x,
            z,
            re(self.w1),
            self.y,
            z,
            z,
            self.y.conj(),
            re(self.w2),
            z,
            self.x.conj(),
            z,
            z,
            re(self.v),
        )
    }
}

/// Nearest-neighbour pair state on `bond`.
pub fn rho_pair(params: &ModelParams, bond: Bond) -> Result<XState> {
    let n1 = occupation(params)?;
    let x = offdiag(params, bond)?;
    let (u, v, w) = diag_from(n1, x)?;
    XState::symmetric(u, v, w, x, bond)
}
