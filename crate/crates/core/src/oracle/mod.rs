// SPDX-License-Identifier: Apache-2.0

//! Exact diagonalization of the spin Hamiltonian for `N ≤ 14`.
//!
//! Nothing here uses the momentum-block solution: the ground state is found on `2^N`
//! amplitudes, reduced states come from explicit partial traces, and the discord is minimized
//! numerically over measurement bases. [`compare`] diffs the two pipelines.

mod compare;
mod density;
mod hamiltonian;
pub mod lanczos;

pub use compare::{compare, ComparisonReport, QuantityDelta, ENERGY_TOLERANCE};
pub use density::{
    conditional_entropy_numeric, ed_multispecies, numeric_discord, oracle_correlators, oracle_measures,
    reduced_density, reduced_pair, DiscordSearch, OracleCorrelators, OracleMeasures, PairCorrelators,
};
pub use hamiltonian::{FermionParity, LinearOperator, SectorOperator, SpinHamiltonian, MAX_ORACLE_SITES};

use nalgebra::SymmetricEigen;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use lanczos::{lowest_eigenpair, LanczosOptions};

use crate::{Error, ModelParams, Result, C64};

/// Smallest |h| accepted by [`ground_state`]; at `h = 0` the ground state is degenerate.
pub const MIN_FIELD: f64 = 1e-8;

/// Largest Hilbert-space dimension handled by the dense solver under [`Solver::Auto`].
pub const DENSE_MAX_DIM: usize = 256;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Solver {
    /// Dense for `2^N ≤ 256`, Lanczos above.
    #[default]
    Auto,
    Dense,
    Lanczos,
}

/// Exact ground state on `2^N` amplitudes.
#[derive(Debug, Clone)]
pub struct OracleState {
    pub n_sites: usize,
    pub amplitudes: Vec<C64>,
    pub energy: f64,
    pub parity: FermionParity,
    pub residual: f64,
}

impl OracleState {
    /// Builds a state from raw amplitudes (normalizing them); `energy` is not checked.
    pub fn from_amplitudes(n_sites: usize, mut amplitudes: Vec<C64>, energy: f64) -> Result<Self> {
        if amplitudes.len() != 1 << n_sites {
            return Err(Error::OracleSizeOutOfRange { n_sites });
        }
        let norm = amplitudes.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 {
            return Err(Error::NonPhysical("zero state vector".into()));
        }
        amplitudes.iter_mut().for_each(|z| *z /= norm);
        let parity = dominant_parity(&amplitudes);
        Ok(Self { n_sites, amplitudes, energy, parity, residual: 0.0 })
    }

    /// `⟨Π σᶻ⟩`.
    pub fn parity_expectation(&self) -> f64 {
        self.amplitudes
            .iter()
            .enumerate()
            .map(|(s, z)| match FermionParity::of_config(s) {
                FermionParity::Even => z.norm_sqr(),
                FermionParity::Odd => -z.norm_sqr(),
            })
            .sum()
    }
}

fn dominant_parity(amplitudes: &[C64]) -> FermionParity {
    let even: f64 = amplitudes
        .iter()
        .enumerate()
        .filter(|(s, _)| FermionParity::of_config(*s) == FermionParity::Even)
        .map(|(_, z)| z.norm_sqr())
        .sum();
    if even >= 0.5 {
        FermionParity::Even
    } else {
        FermionParity::Odd
    }
}

fn start_vector(dim: usize, parity: Option<FermionParity>) -> Vec<C64> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6b69_7461_6576);
    (0..dim)
        .map(|s| {
            let z = C64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
            match parity {
                Some(p) if FermionParity::of_config(s) != p => C64::default(),
                _ => z,
            }
        })
        .collect()
}

fn solve(ham: &SpinHamiltonian, solver: Solver) -> Result<(f64, Vec<C64>)> {
    let dense = match solver {
        Solver::Auto => ham.dim() <= DENSE_MAX_DIM,
        Solver::Dense => true,
        Solver::Lanczos => false,
    };
    if dense {
        let eig = SymmetricEigen::new(ham.to_dense());
        let (idx, value) =
            eig.eigenvalues.iter().copied().enumerate().min_by(|a, b| a.1.total_cmp(&b.1)).expect("non-empty spectrum");
        Ok((value, eig.eigenvectors.column(idx).iter().copied().collect()))
    } else {
        let options = LanczosOptions { tolerance: 1e-10 * ham.norm_bound().max(1.0), ..Default::default() };
        let pair = lowest_eigenpair(ham, start_vector(ham.dim(), None), &options)?;
        Ok((pair.value, pair.vector))
    }
}

/// Lowest eigenvalue of the spin Hamiltonian, including the degenerate `h = 0` point.
pub fn lowest_eigenvalue(params: &ModelParams) -> Result<f64> {
    let ham = SpinHamiltonian::new(params)?;
    Ok(solve(&ham, Solver::Auto)?.0)
}

/// Lowest energies in the `(even, odd)` fermion-parity sectors.
pub fn sector_energies(params: &ModelParams) -> Result<(f64, f64)> {
    let ham = SpinHamiltonian::new(params)?;
    let options = LanczosOptions { tolerance: 1e-10 * ham.norm_bound().max(1.0), ..Default::default() };
    let sector = |parity| -> Result<f64> {
        let op = SectorOperator { inner: &ham, parity };
        Ok(lowest_eigenpair(&op, start_vector(ham.dim(), Some(parity)), &options)?.value)
    };
    Ok((sector(FermionParity::Even)?, sector(FermionParity::Odd)?))
}

pub fn ground_state(params: &ModelParams) -> Result<OracleState> {
    ground_state_with(params, Solver::Auto)
}

/// Ground state with an explicit solver choice; rejects `|h| < 1e-8`.
pub fn ground_state_with(params: &ModelParams, solver: Solver) -> Result<OracleState> {
    if params.h().abs() < MIN_FIELD {
        return Err(Error::DegenerateField { h: params.h() });
    }
    let ham = SpinHamiltonian::new(params)?;
    let (energy, vector) = solve(&ham, solver)?;
    let mut state = OracleState::from_amplitudes(params.n_sites(), vector, energy)?;
    let mut hv = vec![C64::default(); ham.dim()];
    ham.apply(&state.amplitudes, &mut hv);
    state.residual = hv.iter().zip(&state.amplitudes).map(|(a, b)| (a - b * energy).norm_sqr()).sum::<f64>().sqrt();
    if state.residual > 1e-8 * ham.norm_bound() {
        return Err(Error::NoConvergence { iterations: 0, residual: state.residual });
    }
    Ok(state)
}
