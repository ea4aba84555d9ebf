// SPDX-License-Identifier: Apache-2.0

//! Shared fixtures for the criterion benches.

use kitaev_cli::args::{parse_args, Spec};
use kitaev_cli::SweepSpec;
use kitaev_core::ModelParams;

/// Points that span the ordered, critical and strongly dimerized regimes.
pub const POINTS: [(f64, f64); 3] = [(1.0, 0.0), (0.5, 0.5), (2.0, 1.0)];

pub fn params(r: f64, h: f64, n: usize) -> ModelParams {
    ModelParams::with_ratio(r, h, n).expect("valid bench parameters")
}

/// A field sweep in the default figure resolution.
pub fn field_sweep(n: usize, threads: usize) -> SweepSpec {
    let argv = format!("kitaev sweep --axis h --range -2:2 --steps 401 --r 0.5 --n {n} --threads {threads}");
    match parse_args(argv.split_whitespace()) {
        Ok(Spec::Sweep(spec)) => spec,
        other => panic!("bench sweep spec: {other:?}"),
    }
}
