// SPDX-License-Identifier: Apache-2.0

use std::f64::consts::{PI, TAU};

use nalgebra::{DMatrix, Matrix2, Matrix4};

use super::OracleState;
use crate::linalg::{eigenvalues2, eigenvalues4, eigenvalues_dyn, entropy_bits, is_hermitian};
use crate::measures::{wootters, MeasureRecord};
use crate::{Bond, Error, Result, C64};

pub const MAX_REDUCED_SITES: usize = 4;

/// Reduced density matrix of the listed 1-based `sites`; the first site is the most
/// significant bit of the row index.
pub fn reduced_density(state: &OracleState, sites: &[usize]) -> Result<DMatrix<C64>> {
    let n = state.n_sites;
    if sites.is_empty() || sites.len() > MAX_REDUCED_SITES {
        return Err(Error::InvalidSites(format!("need 1..={MAX_REDUCED_SITES} sites, got {}", sites.len())));
    }
    if let Some(bad) = sites.iter().find(|&&s| s == 0 || s > n) {
        return Err(Error::InvalidSites(format!("site {bad} outside 1..={n}")));
    }
    for (i, a) in sites.iter().enumerate() {
        if sites[i + 1..].contains(a) {
            return Err(Error::InvalidSites(format!("site {a} listed twice")));
        }
    }
    let k = sites.len();
    let bits: Vec<usize> = sites.iter().map(|s| s - 1).collect();
    let mask: usize = bits.iter().map(|b| 1 << b).sum();
    let embed = |rest: usize, idx: usize| -> usize {
        bits.iter().enumerate().fold(rest, |acc, (pos, &b)| acc | (((idx >> (k - 1 - pos)) & 1) << b))
    };
    let dim = 1 << k;
    let mut rho = DMatrix::<C64>::zeros(dim, dim);
    for config in 0..state.amplitudes.len() {
        if config & mask != 0 {
            continue;
        }
        let column: Vec<C64> = (0..dim).map(|a| state.amplitudes[embed(config, a)]).collect();
        for a in 0..dim {
            if column[a].norm_sqr() == 0.0 {
                continue;
            }
            for b in 0..dim {
                rho[(a, b)] += column[a] * column[b].conj();
            }
        }
    }
    check_physical(&rho)?;
    Ok(rho)
}

const PHYSICAL_TOLERANCE: f64 = 1e-10;

fn check_physical(rho: &DMatrix<C64>) -> Result<()> {
    if !is_hermitian(rho, PHYSICAL_TOLERANCE) {
        return Err(Error::NonPhysical("reduced state is not Hermitian".into()));
    }
    let trace = rho.trace().re;
    if (trace - 1.0).abs() > PHYSICAL_TOLERANCE {
        return Err(Error::Inconsistent { quantity: "trace", value: trace });
    }
    if let Some(low) = eigenvalues_dyn(rho).into_iter().find(|&e| e < -PHYSICAL_TOLERANCE) {
        return Err(Error::NonPhysical(format!("reduced state has eigenvalue {low:e}")));
    }
    Ok(())
}

/// Two-site reduced state as a fixed-size matrix.
pub fn reduced_pair(state: &OracleState, a: usize, b: usize) -> Result<Matrix4<C64>> {
    let rho = reduced_density(state, &[a, b])?;
    Ok(Matrix4::from_fn(|r, c| rho[(r, c)]))
}

/// Entries of a two-site state in the X-state layout (`u` = both empty, `v` = both occupied).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairCorrelators {
    pub u: f64,
    pub v: f64,
    pub w1: f64,
    pub w2: f64,
    /// `⟨00|ρ|11⟩`.
    pub x: C64,
    /// `⟨01|ρ|10⟩`.
    pub y: C64,
    /// Largest modulus among the eight entries outside the X pattern.
    pub max_forbidden: f64,
}

impl PairCorrelators {
    pub fn from_matrix(rho: &Matrix4<C64>) -> Self {
        let allowed = |r: usize, c: usize| r == c || r + c == 3;
        let max_forbidden = (0..4)
            .flat_map(|r| (0..4).map(move |c| (r, c)))
            .filter(|&(r, c)| !allowed(r, c))
            .map(|(r, c)| rho[(r, c)].norm())
            .fold(0.0, f64::max);
        Self {
            u: rho[(0, 0)].re,
            w1: rho[(1, 1)].re,
            w2: rho[(2, 2)].re,
            v: rho[(3, 3)].re,
            x: rho[(0, 3)],
            y: rho[(1, 2)],
            max_forbidden,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleCorrelators {
    pub n1: f64,
    pub odd: PairCorrelators,
    pub even: PairCorrelators,
}

fn pair_sites(state: &OracleState, bond: Bond) -> (usize, usize) {
    let [a, b] = bond.sites();
    let wrap = |s: usize| (s - 1) % state.n_sites + 1;
    (wrap(a), wrap(b))
}

fn bond_matrix(state: &OracleState, bond: Bond) -> Result<Matrix4<C64>> {
    let (a, b) = pair_sites(state, bond);
    if a == b {
        return Err(Error::InvalidSites(format!("bond {bond:?} degenerates for N = {}", state.n_sites)));
    }
    reduced_pair(state, a, b)
}

pub fn oracle_correlators(state: &OracleState) -> Result<OracleCorrelators> {
    let rho1 = reduced_density(state, &[1])?;
    Ok(OracleCorrelators {
        n1: rho1[(1, 1)].re,
        odd: PairCorrelators::from_matrix(&bond_matrix(state, Bond::Odd)?),
        even: PairCorrelators::from_matrix(&bond_matrix(state, Bond::Even)?),
    })
}

/// Average conditional entropy of qubit 1 after measuring qubit 2 of `rho` along
/// `cos(θ/2)|0⟩ + e^{iφ} sin(θ/2)|1⟩` and its orthogonal complement.
pub fn conditional_entropy_numeric(rho: &Matrix4<C64>, theta: f64, phi: f64) -> f64 {
    let (s, c) = (0.5 * theta).sin_cos();
    let phase = C64::from_polar(1.0, phi);
    let outcomes = [[C64::new(c, 0.0), phase * s], [C64::new(s, 0.0), -phase * c]];
    outcomes
        .iter()
        .map(|vec| {
            let block = Matrix2::from_fn(|a, a2| {
                let mut acc = C64::default();
                for b in 0..2 {
                    for b2 in 0..2 {
                        acc += vec[b].conj() * rho[(2 * a + b, 2 * a2 + b2)] * vec[b2];
                    }
                }
                acc
            });
            let p = block.trace().re;
            if p <= 1e-300 {
                0.0
            } else {
                p * entropy_bits(eigenvalues2(&(block / C64::new(p, 0.0))))
            }
        })
        .sum()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiscordSearch {
    pub discord: f64,
    pub min_conditional_entropy: f64,
    pub theta: f64,
    pub phi: f64,
}

const GRID: usize = 64;

/// Discord of `rho` (qubit 2 measured) from a 64×64 grid over `(θ, φ)` refined by a compass
/// search down to step `1e-9`.
pub fn numeric_discord(rho: &Matrix4<C64>) -> DiscordSearch {
    let f = |t: f64, p: f64| conditional_entropy_numeric(rho, t, p);
    let mut best = (f64::INFINITY, 0.0, 0.0);
    for i in 0..GRID {
        let t = PI * i as f64 / (GRID - 1) as f64;
        for j in 0..GRID {
            let p = TAU * j as f64 / GRID as f64;
            let v = f(t, p);
            if v < best.0 {
                best = (v, t, p);
            }
        }
    }
    let (mut value, mut t, mut p) = best;
    let mut step = (PI / (GRID - 1) as f64, TAU / GRID as f64);
    while step.0 > 1e-9 || step.1 > 1e-9 {
        let mut improved = false;
        for (dt, dp) in [(step.0, 0.0), (-step.0, 0.0), (0.0, step.1), (0.0, -step.1)] {
            let nt = (t + dt).clamp(0.0, PI);
            let np = (p + dp).rem_euclid(TAU);
            let nv = f(nt, np);
            if nv < value {
                value = nv;
                t = nt;
                p = np;
                improved = true;
            }
        }
        if !improved {
            step = (0.5 * step.0, 0.5 * step.1);
        }
    }
    let joint = entropy_bits(eigenvalues4(rho));
    let rho2 = Matrix2::from_fn(|b, b2| rho[(b, b2)] + rho[(2 + b, 2 + b2)]);
    let measured = entropy_bits(eigenvalues2(&rho2));
    DiscordSearch { discord: measured - joint + value, min_conditional_entropy: value, theta: t, phi: p }
}

/// Oracle-side measures plus the next-nearest concurrences.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleMeasures {
    pub record: MeasureRecord,
    /// `C(1,3)`, present for `N ≥ 4`.
    pub c13: Option<f64>,
    /// `C(1,4)`, present for `N ≥ 4`.
    pub c14: Option<f64>,
}

pub fn oracle_measures(state: &OracleState) -> Result<OracleMeasures> {
    let correlators = oracle_correlators(state)?;
    let odd = bond_matrix(state, Bond::Odd)?;
    let even = bond_matrix(state, Bond::Even)?;
    let impurity: f64 = (1..=state.n_sites)
        .map(|site| {
            let rho = reduced_density(state, &[site])?;
            Ok(1.0 - (&rho * &rho).trace().re)
        })
        .sum::<Result<f64>>()?;
    let (c13, c14) = if state.n_sites >= 4 {
        (Some(wootters(&reduced_pair(state, 1, 3)?)?), Some(wootters(&reduced_pair(state, 1, 4)?)?))
    } else {
        (None, None)
    };
    Ok(OracleMeasures {
        record: MeasureRecord {
            n1: correlators.n1,
            x_odd: correlators.odd.x.re,
            x_even: correlators.even.x.re,
            c_odd: wootters(&odd)?,
            c_even: wootters(&even)?,
            d_odd: numeric_discord(&odd).discord,
            d_even: numeric_discord(&even).discord,
            e_global: 2.0 / state.n_sites as f64 * impurity,
            ms_density: ed_multispecies(state),
        },
        c13,
        c14,
    })
}

/// Shannon entropy (bits) of `|ψ_s|²` over the computational basis, per site.
pub fn ed_multispecies(state: &OracleState) -> f64 {
    entropy_bits(state.amplitudes.iter().map(|z| z.norm_sqr())) / state.n_sites as f64
}
