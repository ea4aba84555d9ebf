// SPDX-License-Identifier: Apache-2.0

use nalgebra::DMatrix;

use crate::{Error, ModelParams, Result, C64};

pub const MAX_ORACLE_SITES: usize = 14;

/// A Hermitian operator applied without materializing its matrix.
pub trait LinearOperator {
    fn dim(&self) -> usize;

    /// `out = A · input`.
    fn apply(&self, input: &[C64], out: &mut [C64]);
}

#[derive(Debug, Clone, Copy)]
struct BondTerm {
    mask: usize,
    lo: usize,
    hi: usize,
    coupling: f64,
    /// `σʸσʸ` carries `-1` between equal bits and `+1` between opposite bits; `σˣσˣ` is `+1`.
    yy: bool,
}

/// The chain Hamiltonian on `2^N` spin configurations.
///
/// Site `i` (1-based) is bit `i-1` of the configuration index, and a set bit is an up spin
/// (`σᶻ = +1`). Bonds `(i, i+1)` with `i` odd are `Jx σˣσˣ`, with `i` even `Jy σʸσʸ`; site
/// `N+1` wraps to site 1.
#[derive(Debug, Clone)]
pub struct SpinHamiltonian {
    params: ModelParams,
    bonds: Vec<BondTerm>,
}

impl SpinHamiltonian {
    pub fn new(params: &ModelParams) -> Result<Self> {
        let n = params.n_sites();
        if !(2..=MAX_ORACLE_SITES).contains(&n) || !n.is_multiple_of(2) {
            return Err(Error::OracleSizeOutOfRange { n_sites: n });
        }
        let bonds = (1..=n)
            .map(|i| {
                let j = i % n + 1;
                let (lo, hi) = (i - 1, j - 1);
                let yy = i % 2 == 0;
                BondTerm {
                    mask: (1 << lo) | (1 << hi),
                    lo,
                    hi,
                    coupling: if yy { params.jy() } else { params.jx() },
                    yy,
                }
            })
            .collect();
        Ok(Self { params: *params, bonds })
    }

    pub fn params(&self) -> &ModelParams {
        &self.params
    }

    pub fn n_sites(&self) -> usize {
        self.params.n_sites()
    }

    /// Upper bound on the spectral norm from the triangle inequality.
    pub fn norm_bound(&self) -> f64 {
        let n = self.n_sites() as f64;
        n * self.params.h().abs() + 0.5 * n * (self.params.jx() + self.params.jy())
    }

    fn diagonal(&self, config: usize) -> f64 {
        let up = config.count_ones() as f64;
        self.params.h() * (2.0 * up - self.n_sites() as f64)
    }

    fn bond_amplitude(bond: &BondTerm, config: usize) -> f64 {
        if bond.yy {
            let equal = ((config >> bond.lo) & 1) == ((config >> bond.hi) & 1);
            if equal {
                -bond.coupling
            } else {
                bond.coupling
            }
        } else {
            bond.coupling
        }
    }

    pub fn to_dense(&self) -> DMatrix<C64> {
        let dim = self.dim();
        let mut m = DMatrix::zeros(dim, dim);
        for s in 0..dim {
            m[(s, s)] += C64::new(self.diagonal(s), 0.0);
            for bond in &self.bonds {
                m[(s, s ^ bond.mask)] += C64::new(Self::bond_amplitude(bond, s), 0.0);
            }
        }
        m
    }
}

impl LinearOperator for SpinHamiltonian {
    fn dim(&self) -> usize {
        1 << self.n_sites()
    }

    fn apply(&self, input: &[C64], out: &mut [C64]) {
        for (s, slot) in out.iter_mut().enumerate() {
            let mut acc = input[s] * self.diagonal(s);
            for bond in &self.bonds {
                acc += input[s ^ bond.mask] * Self::bond_amplitude(bond, s);
            }
            *slot = acc;
        }
    }
}

/// Fermion-number parity `(-1)^{N_F}`; for even `N` it equals the eigenvalue of `Π σᶻ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FermionParity {
    Even,
    Odd,
}

impl FermionParity {
    pub fn of_config(config: usize) -> Self {
        if config.count_ones().is_multiple_of(2) {
            FermionParity::Even
        } else {
            FermionParity::Odd
        }
    }
}

/// Restricts an operator to one parity sector by projecting after every application.
pub struct SectorOperator<'a, A> {
    pub inner: &'a A,
    pub parity: FermionParity,
}

impl<A: LinearOperator> LinearOperator for SectorOperator<'_, A> {
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    fn apply(&self, input: &[C64], out: &mut [C64]) {
        self.inner.apply(input, out);
        for (s, z) in out.iter_mut().enumerate() {
            if FermionParity::of_config(s) != self.parity {
                *z = C64::new(0.0, 0.0);
            }
        }
    }
}
