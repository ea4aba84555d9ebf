// SPDX-License-Identifier: Apache-2.0

//! Lowest eigenpair of a Hermitian operator by restarted Lanczos with full
//! reorthogonalization.

use nalgebra::{DMatrix, SymmetricEigen};

use super::hamiltonian::LinearOperator;
use crate::{Error, Result, C64};

#[derive(Debug, Clone, Copy)]
pub struct LanczosOptions {
    pub max_krylov: usize,
    pub max_restarts: usize,
    /// Target for `‖Aψ - Eψ‖`.
    pub tolerance: f64,
}

impl Default for LanczosOptions {
    fn default() -> Self {
        Self { max_krylov: 160, max_restarts: 40, tolerance: 1e-10 }
    }
}

#[derive(Debug, Clone)]
pub struct Eigenpair {
    pub value: f64,
    pub vector: Vec<C64>,
    pub residual: f64,
    pub iterations: usize,
}

fn dot(a: &[C64], b: &[C64]) -> C64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

fn norm(a: &[C64]) -> f64 {
    a.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

fn scale(a: &mut [C64], s: f64) {
    a.iter_mut().for_each(|z| *z *= s);
}

fn axpy(y: &mut [C64], alpha: C64, x: &[C64]) {
    y.iter_mut().zip(x).for_each(|(yi, xi)| *yi += alpha * xi);
}

/// Lowest Ritz pair of the tridiagonal matrix `(alphas, betas)`.
fn tridiagonal_ground(alphas: &[f64], betas: &[f64]) -> (f64, Vec<f64>) {
    let k = alphas.len();
    let mut t = DMatrix::<f64>::zeros(k, k);
    for i in 0..k {
        t[(i, i)] = alphas[i];
        if i + 1 < k {
            t[(i, i + 1)] = betas[i];
            t[(i + 1, i)] = betas[i];
        }
    }
    let eig = SymmetricEigen::new(t);
    let (idx, value) =
        eig.eigenvalues.iter().copied().enumerate().min_by(|a, b| a.1.total_cmp(&b.1)).expect("non-empty tridiagonal");
    (value, eig.eigenvectors.column(idx).iter().copied().collect())
}

fn residual<A: LinearOperator>(op: &A, value: f64, vector: &[C64]) -> f64 {
    let mut av = vec![C64::default(); op.dim()];
    op.apply(vector, &mut av);
    axpy(&mut av, C64::new(-value, 0.0), vector);
    norm(&av)
}

/// Runs Lanczos from `start`, restarting from the current Ritz vector whenever the Krylov
/// space reaches `max_krylov` vectors.
pub fn lowest_eigenpair<A: LinearOperator>(op: &A, start: Vec<C64>, options: &LanczosOptions) -> Result<Eigenpair> {
    let dim = op.dim();
    let mut current = start;
    let mut iterations = 0;
    let mut last_residual = f64::INFINITY;
    let krylov_cap = options.max_krylov.min(dim).max(1);

    for _ in 0..=options.max_restarts {
        let n0 = norm(&current);
        if n0 == 0.0 {
            return Err(Error::NoConvergence { iterations, residual: f64::NAN });
        }
        scale(&mut current, 1.0 / n0);
        let mut basis: Vec<Vec<C64>> = vec![current.clone()];
        let mut alphas = Vec::new();
        let mut betas = Vec::new();
        let mut w = vec![C64::default(); dim];

        loop {
            let j = basis.len() - 1;
            op.apply(&basis[j], &mut w);
            iterations += 1;
            let alpha = dot(&basis[j], &w).re;
            alphas.push(alpha);
            // Two passes of classical Gram-Schmidt against the whole basis.
            for _ in 0..2 {
                for b in &basis {
                    let c = dot(b, &w);
                    axpy(&mut w, -c, b);
                }
            }
            let beta = norm(&w);
            let exhausted = beta <= 1e-12 * (alpha.abs() + 1.0);
            let full = basis.len() == krylov_cap;
            if !(exhausted || full || j % 4 == 3) {
                betas.push(beta);
                let mut next = w.clone();
                scale(&mut next, 1.0 / beta);
                basis.push(next);
                continue;
            }
            let (theta, y) = tridiagonal_ground(&alphas, &betas);
            let estimate = beta * y[j].abs();
            if estimate <= 0.1 * options.tolerance || exhausted || full {
                let mut ritz = vec![C64::default(); dim];
                for (coef, b) in y.iter().zip(&basis) {
                    axpy(&mut ritz, C64::new(*coef, 0.0), b);
                }
                let rn = norm(&ritz);
                scale(&mut ritz, 1.0 / rn);
                let res = residual(op, theta, &ritz);
                last_residual = res;
                if res <= options.tolerance {
                    return Ok(Eigenpair { value: theta, vector: ritz, residual: res, iterations });
                }
                current = ritz;
                break;
            }
            betas.push(beta);
            let mut next = w.clone();
            scale(&mut next, 1.0 / beta);
            basis.push(next);
        }
    }
    Err(Error::NoConvergence { iterations, residual: last_residual })
}
