// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter `{name}` = {value}: {reason}")]
    InvalidParameter { name: &'static str, value: f64, reason: &'static str },

    #[error("analytic path needs N to be a multiple of 4, got N = {n_sites}")]
    AnalyticUnavailable { n_sites: usize },

    #[error("exact diagonalization supports even N in 2..=14, got N = {n_sites}")]
    OracleSizeOutOfRange { n_sites: usize },

    #[error("ground state is degenerate at h = {h}; use |h| >= 1e-8")]
    DegenerateField { h: f64 },

    #[error("eigensolver did not converge after {iterations} iterations (residual {residual:e})")]
    NoConvergence { iterations: usize, residual: f64 },

    #[error("{quantity} = {value:e} is outside its physical range")]
    Inconsistent { quantity: &'static str, value: f64 },

    #[error("non-physical density matrix: {0}")]
    NonPhysical(String),

    #[error("{0} diverges at this parameter")]
    Divergent(&'static str),

    #[error("invalid site selection: {0}")]
    InvalidSites(String),
}
