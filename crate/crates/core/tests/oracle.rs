// SPDX-License-Identifier: Apache-2.0

use kitaev_core::measures::{conditional_entropy, conditional_entropy_min, discord, wootters, MeasurementBasis};
use kitaev_core::oracle::{
    compare, ed_multispecies, ground_state, lowest_eigenvalue, numeric_discord, oracle_correlators, oracle_measures,
    reduced_density, reduced_pair, FermionParity,
};
use kitaev_core::{evaluate, ground_energy, rho_pair, Bond, ModelParams};

fn params(r: f64, h: f64, n: usize) -> ModelParams {
    ModelParams::with_ratio(r, h, n).unwrap()
}

#[test]
fn n8_grid_matches_analytic() {
    for r in [0.0, 0.5, 1.0, 2.0] {
        for h in [0.3, 1.0] {
            let report = compare(&params(r, h, 8), 1e-6).unwrap();
            assert!(report.pass, "{report}");
            assert!(report.energy_pass(), "{report}");
            assert_eq!(report.parity, FermionParity::Even);
            assert!(report.sector_energies.0 <= report.sector_energies.1 + 1e-12);
        }
    }
}

#[test]
fn n12_lanczos_run() {
    let report = compare(&params(2.0, 1.0, 12), 1e-6).unwrap();
    assert!(report.pass && report.energy_pass(), "{report}");
}

#[test]
fn dimer_chain_matches_two_site_value() {
    let chain = compare(&params(0.0, 0.5, 8), 1e-6).unwrap();
    assert!(chain.pass, "{chain}");
    let dimer = oracle_measures(&ground_state(&params(0.0, 0.5, 2)).unwrap()).unwrap();
    let c12 = chain.get("C12").unwrap();
    assert!((c12.oracle - dimer.record.c_odd).abs() < 1e-10);
    assert!((c12.analytic - dimer.record.c_odd).abs() < 1e-10);
}

#[test]
fn two_site_energies() {
    for h in [0.0, 0.5, 1.0] {
        let e = lowest_eigenvalue(&params(0.0, h, 2)).unwrap();
        assert!((e + (1.0 + 4.0 * h * h).sqrt()).abs() < 1e-10, "h = {h}: {e}");
    }
    let e = ground_state(&params(1.0, 0.5, 8)).unwrap().energy;
    assert!((e - ground_energy(&params(1.0, 0.5, 8)).unwrap()).abs() < 1e-9);
}

#[test]
fn pair_states_have_x_form() {
    let state = ground_state(&params(0.5, 0.5, 8)).unwrap();
    let corr = oracle_correlators(&state).unwrap();
    for pair in [corr.odd, corr.even] {
        assert!(pair.max_forbidden < 1e-10);
        assert!(pair.y.norm() < 1e-10);
    }
}

#[test]
fn uniform_bonds_share_correlators() {
    let state = ground_state(&params(1.0, 0.5, 8)).unwrap();
    let corr = oracle_correlators(&state).unwrap();
    assert!((corr.odd.x.norm() - corr.even.x.norm()).abs() < 1e-10);
    let m = oracle_measures(&state).unwrap();
    assert!((m.record.c_odd - m.record.c_even).abs() < 1e-10);
}

#[test]
fn strong_field_polarizes() {
    let state = ground_state(&params(0.7, 200.0, 8)).unwrap();
    let corr = oracle_correlators(&state).unwrap();
    assert!(corr.n1 < 1e-4);
    assert!(corr.odd.x.norm() < 1e-2 && corr.even.x.norm() < 1e-2);
}

#[test]
fn longer_range_concurrences_vanish() {
    for r in [0.5, 1.0, 2.0] {
        for h in [0.3, 1.0] {
            let m = oracle_measures(&ground_state(&params(r, h, 8)).unwrap()).unwrap();
            assert_eq!(m.c13, Some(0.0), "r = {r}, h = {h}");
            assert_eq!(m.c14, Some(0.0), "r = {r}, h = {h}");
        }
    }
}

#[test]
fn reduced_states_are_physical() {
    let state = ground_state(&params(0.8, 0.4, 10)).unwrap();
    for sites in [&[1usize][..], &[1, 2], &[3, 1], &[1, 2, 3], &[2, 5, 7, 10]] {
        let rho = reduced_density(&state, sites).unwrap();
        assert!((rho.trace().re - 1.0).abs() < 1e-12);
        let eig = nalgebra::SymmetricEigen::new(rho).eigenvalues;
        assert!(eig.iter().all(|&e| e > -1e-10));
    }
}

#[test]
fn closed_form_discord_is_the_minimum() {
    let grid = 64;
    for n in [8, 12] {
        for r in [0.0, 0.5, 1.0, 2.0] {
            for h in [0.3, 1.0] {
                let p = params(r, h, n);
                for bond in [Bond::Odd, Bond::Even] {
                    let x = rho_pair(&p, bond).unwrap();
                    let closed = conditional_entropy_min(&x);
                    let mut best = f64::INFINITY;
                    for i in 0..grid {
                        for j in 0..grid {
                            let theta = std::f64::consts::PI * i as f64 / (grid - 1) as f64;
                            let phi = std::f64::consts::TAU * j as f64 / grid as f64;
                            let basis = MeasurementBasis::new(theta, phi).unwrap();
                            best = best.min(conditional_entropy(&x, &basis));
                        }
                    }
                    assert!(closed <= best + 1e-9, "{p} {bond:?}: {closed} > {best}");
                    let search = numeric_discord(&x.matrix());
                    assert!((search.discord - discord(&x).unwrap()).abs() < 1e-6);
                }
            }
        }
    }
}

#[test]
fn oracle_wootters_matches_analytic_pair() {
    let p = params(1.5, 0.6, 8);
    let state = ground_state(&p).unwrap();
    let oracle = wootters(&reduced_pair(&state, 2, 3).unwrap()).unwrap();
    assert!((oracle - evaluate(&p).unwrap().c_even).abs() < 1e-8);
}

#[test]
fn site_basis_species_entropy_is_reported() {
    let p = params(1.0, 0.3, 8);
    let report = compare(&p, 1e-6).unwrap();
    let direct = ed_multispecies(&ground_state(&p).unwrap());
    assert_eq!(report.multispecies.1, direct);
    assert!(report.multispecies.0.is_finite() && direct > 0.0 && direct < 1.0);
}
