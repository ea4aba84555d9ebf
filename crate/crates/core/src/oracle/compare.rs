// SPDX-License-Identifier: Apache-2.0

use std::fmt;

use super::{ground_state, oracle_correlators, oracle_measures, sector_energies, FermionParity, OracleState};
use crate::correlators::rho_pair;
use crate::measures::evaluate;
use crate::mode::ground_energy;
use crate::{Bond, Error, ModelParams, Result};

/// Relative tolerance on the ground energy, applied independently of the quantity tolerance.
pub const ENERGY_TOLERANCE: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq)]
pub struct QuantityDelta {
    pub name: &'static str,
    pub analytic: f64,
    pub oracle: f64,
    pub delta: f64,
}

impl QuantityDelta {
    fn new(name: &'static str, analytic: f64, oracle: f64) -> Self {
        Self { name, analytic, oracle, delta: (analytic - oracle).abs() }
    }
}

#[derive(Debug, Clone)]
pub struct ComparisonReport {
    pub params: ModelParams,
    pub records: Vec<QuantityDelta>,
    pub worst_delta: f64,
    pub tolerance: f64,
    /// `worst_delta <= tolerance`.
    pub pass: bool,
    pub analytic_energy: f64,
    pub oracle_energy: f64,
    pub energy_relative_delta: f64,
    pub parity: FermionParity,
    /// Lowest energies in the `(even, odd)` parity sectors.
    pub sector_energies: (f64, f64),
    /// `(analytic, oracle)` multi-species densities; not gated, the two use different bases.
    pub multispecies: (f64, f64),
    /// Largest entry of either pair state outside the X pattern.
    pub max_forbidden: f64,
}

impl ComparisonReport {
    pub fn energy_pass(&self) -> bool {
        self.energy_relative_delta <= ENERGY_TOLERANCE
    }

    pub fn get(&self, name: &str) -> Option<&QuantityDelta> {
        self.records.iter().find(|r| r.name == name)
    }
}

/// Runs the analytic and the oracle pipelines on `params` and diffs them.
///
/// Off-diagonal pair elements are compared in modulus; on the y-y bond the spin chain carries
/// the opposite sign of the momentum-space expression, and no measure depends on that sign.
pub fn compare(params: &ModelParams, tolerance: f64) -> Result<ComparisonReport> {
    if tolerance.is_nan() || tolerance < 0.0 {
        return Err(Error::InvalidParameter { name: "tolerance", value: tolerance, reason: "must be non-negative" });
    }
    params.require_analytic()?;
    let state: OracleState = ground_state(params)?;
    let analytic = evaluate(params)?;
    let oracle = oracle_measures(&state)?;
    let corr = oracle_correlators(&state)?;

    let mut records = vec![
        QuantityDelta::new("n1", analytic.n1, oracle.record.n1),
        QuantityDelta::new("x_odd", analytic.x_odd.abs(), corr.odd.x.norm()),
        QuantityDelta::new("x_even", analytic.x_even.abs(), corr.even.x.norm()),
    ];
    for (bond, pair, tag) in [(Bond::Odd, corr.odd, "odd"), (Bond::Even, corr.even, "even")] {
        let x = rho_pair(params, bond)?;
        let names: [&'static str; 5] = match tag {
            "odd" => ["u_odd", "v_odd", "w1_odd", "w2_odd", "y_odd"],
            _ => ["u_even", "v_even", "w1_even", "w2_even", "y_even"],
        };
        records.push(QuantityDelta::new(names[0], x.u, pair.u));
        records.push(QuantityDelta::new(names[1], x.v, pair.v));
        records.push(QuantityDelta::new(names[2], x.w1, pair.w1));
        records.push(QuantityDelta::new(names[3], x.w2, pair.w2));
        records.push(QuantityDelta::new(names[4], x.y.norm(), pair.y.norm()));
    }
    records.extend([
        QuantityDelta::new("C12", analytic.c_odd, oracle.record.c_odd),
        QuantityDelta::new("C23", analytic.c_even, oracle.record.c_even),
        QuantityDelta::new("D12", analytic.d_odd, oracle.record.d_odd),
        QuantityDelta::new("D23", analytic.d_even, oracle.record.d_even),
        QuantityDelta::new("Eglob", analytic.e_global, oracle.record.e_global),
    ]);
    let worst_delta = records.iter().map(|r| r.delta).fold(0.0, f64::max);
    let analytic_energy = ground_energy(params)?;
    let energy_relative_delta = (analytic_energy - state.energy).abs() / state.energy.abs().max(f64::MIN_POSITIVE);
    Ok(ComparisonReport {
        params: *params,
        worst_delta,
        tolerance,
        pass: worst_delta <= tolerance,
        records,
        analytic_energy,
        oracle_energy: state.energy,
        energy_relative_delta,
        parity: state.parity,
        sector_energies: sector_energies(params)?,
        multispecies: (analytic.ms_density, oracle.record.ms_density),
        max_forbidden: corr.odd.max_forbidden.max(corr.even.max_forbidden),
    })
}

impl fmt::Display for ComparisonReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.params)?;
        writeln!(f, "{:<10} {:>20} {:>20} {:>12}", "quantity", "analytic", "oracle", "delta")?;
        for r in &self.records {
            writeln!(f, "{:<10} {:>20.14} {:>20.14} {:>12.3e}", r.name, r.analytic, r.oracle, r.delta)?;
        }
        writeln!(
            f,
            "{:<10} {:>20.14} {:>20.14} {:>12.3e} (relative)",
            "energy", self.analytic_energy, self.oracle_energy, self.energy_relative_delta
        )?;
        writeln!(
            f,
            "{:<10} {:>20.14} {:>20.14} {:>12} (reported only)",
            "MS", self.multispecies.0, self.multispecies.1, "-"
        )?;
        writeln!(
            f,
            "parity {:?}; sector energies even {:.14} odd {:.14}; max off-X entry {:.3e}",
            self.parity, self.sector_energies.0, self.sector_energies.1, self.max_forbidden
        )?;
        write!(
            f,
            "worst delta {:.3e} vs tolerance {:.3e}: {}; energy: {}",
            self.worst_delta,
            self.tolerance,
            if self.pass { "pass" } else { "FAIL" },
            if self.energy_pass() { "pass" } else { "FAIL" }
        )
    }
}
