// SPDX-License-Identifier: Apache-2.0

//! Ground-state correlations of the alternating-bond Kitaev chain in a transverse field.
//!
//! The chain couples odd bonds through `σˣσˣ` and even bonds through `σʸσʸ`:
//!
//! ```text
//! H = Jx Σ_{i odd} σˣ_i σˣ_{i+1} + Jy Σ_{i even} σʸ_i σʸ_{i+1} + h Σ_i σᶻ_i
//! ```
//!
//! with periodic boundary conditions. After fermionization the ground state factorizes over
//! `N/4` momentum blocks, which makes every nearest-neighbour reduced density matrix an
//! X state with closed-form entries. The crate is organized bottom-up:
//!
//! - [`mode`]: momentum grid, dispersion, block energies and ground-state amplitudes.
//! - [`correlators`]: occupation, pair correlators and the single/two-qubit states.
//! - [`measures`]: concurrence, quantum discord, global and multi-species entanglement.
//! - [`oracle`]: brute-force exact diagonalization on `2^N` amplitudes, used as ground truth.
//!
//! Sites are 1-based throughout; bond `(1,2)` is an x-x bond ("odd") and `(2,3)` a y-y bond
//! ("even"). Entropies are in bits.

#![forbid(unsafe_code)]

pub mod correlators;
mod error;
mod linalg;
pub mod measures;
pub mod mode;
pub mod oracle;
mod params;
pub mod quadrature;

pub use correlators::{occupation, offdiag, pair_diag, rho_pair, rho_single, SingleQubitState, XState};
pub use error::{Error, Result};
pub use measures::{evaluate, MeasureRecord};
pub use mode::{amplitudes, dispersion, ground_energy, mode_energies, momentum_grid, ModeAmplitudes, ModeEnergies};
pub use params::{Bond, ModelParams};

/// Complex scalar used for amplitudes and density matrices.
pub type C64 = nalgebra::Complex<f64>;

/// Slack below which small negative values are treated as float noise and clamped.
pub const CLAMP_TOLERANCE: f64 = 1e-12;
