// SPDX-License-Identifier: Apache-2.0

use crate::linalg::entropy_bits;
use crate::mode::{amplitudes, momentum_grid};
use crate::{Error, ModelParams, Result, CLAMP_TOLERANCE};

/// Global entanglement `4 n₁ (1 - n₁)` of a translation-invariant state with `ρᵢ = diag(1-n₁, n₁)`.
pub fn global_entanglement(n1: f64) -> Result<f64> {
    if !(-CLAMP_TOLERANCE..=1.0 + CLAMP_TOLERANCE).contains(&n1) {
        return Err(Error::InvalidParameter { name: "n1", value: n1, reason: "must lie in [0, 1]" });
    }
    let n1 = n1.clamp(0.0, 1.0);
    Ok(4.0 * n1 * (1.0 - n1))
}

/// Entropy between the up- and down-spin species per site, in bits:
/// `(1/N) Σ_q Σᵢ -|xᵢ|² log₂|xᵢ|²` over the six block amplitudes.
pub fn multispecies_density(params: &ModelParams) -> Result<f64> {
    let total: f64 =
        momentum_grid(params)?.into_iter().map(|q| entropy_bits(amplitudes(params, q).probabilities())).sum();
    Ok(total / params.n_sites() as f64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn global_entanglement_values() {
        assert_eq!(global_entanglement(0.5).unwrap(), 1.0);
        assert_eq!(global_entanglement(0.0).unwrap(), 0.0);
        assert!(global_entanglement(1.5).is_err());
    }

    #[test]
    fn multispecies_uniform_critical_point() {
        // Per block: probabilities {0, 1/4, 1/4, 1/4, 1/4, 0} → 2 bits; N/4 blocks.
        for n in [4, 8, 100] {
            let p = ModelParams::with_ratio(1.0, 0.0, n).unwrap();
            assert!((multispecies_density(&p).unwrap() - 0.5).abs() < 1e-14);
        }
    }

    #[test]
    fn multispecies_vanishes_when_polarized() {
        let p = ModelParams::with_ratio(0.5, 1e9, 100).unwrap();
        assert!(multispecies_density(&p).unwrap() < 1e-6);
    }

    #[test]
    fn multispecies_is_even_in_field() {
        let a = multispecies_density(&ModelParams::with_ratio(0.5, 0.3, 100).unwrap()).unwrap();
        let b = multispecies_density(&ModelParams::with_ratio(0.5, -0.3, 100).unwrap()).unwrap();
        assert_eq!(a, b);
        assert!(a > 0.0 && a < 1.0);
    }
}
