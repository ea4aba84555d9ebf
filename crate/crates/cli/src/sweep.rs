// SPDX-License-Identifier: Apache-2.0

//! Grid evaluation and finite-difference derivatives.

use kitaev_core::measures::variants::{concurrence_single_mode_approx, elliptic_concurrence_h0};
use kitaev_core::{evaluate, Bond, Error, MeasureRecord, ModelParams};
use rayon::prelude::*;

use crate::args::{Axis, Fixed, SweepSpec};
use crate::error::{CliError, CliResult};

/// Step of the symmetric differences taken across the sweep axis.
pub const OFF_AXIS_STEP: f64 = 1e-4;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Derivatives {
    pub dc12_dh: f64,
    pub dc23_dh: f64,
    pub dd12_dh: f64,
    pub deglob_dh: f64,
    pub dms_dh: f64,
    pub dms_dr: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct VariantValues {
    /// `(C12, C23)` from the single-mode approximation.
    pub eq23: Option<(f64, f64)>,
    /// `(C12, C23)` from the zero-field elliptic integrals; `None` where they diverge (r = 1).
    pub elliptic: Option<(f64, f64)>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OutputRecord {
    pub n_sites: usize,
    pub jx: f64,
    pub jy: f64,
    pub r: f64,
    pub h: f64,
    pub record: MeasureRecord,
    pub derivatives: Option<Derivatives>,
    pub variants: VariantValues,
}

/// Uniform grid over `[start, stop]` with both ends included exactly.
pub fn grid(start: f64, stop: f64, steps: usize) -> Vec<f64> {
    let last = (steps - 1) as f64;
    (0..steps).map(|i| (start * (last - i as f64) + stop * i as f64) / last).collect()
}

fn point(fixed: Fixed, axis: Axis, x: f64) -> Fixed {
    match axis {
        Axis::H => Fixed { h: x, ..fixed },
        Axis::R => Fixed { r: x, ..fixed },
        Axis::N => Fixed { n_sites: x.round() as usize, ..fixed },
    }
}

fn fail(at: &Fixed, source: Error) -> CliError {
    CliError::Evaluation { point: format!("N={} jx={} r={} h={}", at.n_sites, at.jx, at.r, at.h), source }
}

fn eval_at(at: &Fixed) -> CliResult<MeasureRecord> {
    at.params().and_then(|p| evaluate(&p)).map_err(|e| fail(at, e))
}

fn field_slope(at: &Fixed) -> CliResult<MeasureRecord> {
    let up = eval_at(&Fixed { h: at.h + OFF_AXIS_STEP, ..*at })?;
    let down = eval_at(&Fixed { h: at.h - OFF_AXIS_STEP, ..*at })?;
    Ok(slope(&down, &up, 2.0 * OFF_AXIS_STEP))
}

fn ratio_slope(at: &Fixed) -> CliResult<f64> {
    let lo = (at.r - OFF_AXIS_STEP).max(0.0);
    let hi = at.r + OFF_AXIS_STEP;
    let a = eval_at(&Fixed { r: lo, ..*at })?;
    let b = eval_at(&Fixed { r: hi, ..*at })?;
    Ok((b.ms_density - a.ms_density) / (hi - lo))
}

/// Component-wise `(b - a) / dx` of the fields that carry derivative columns.
fn slope(a: &MeasureRecord, b: &MeasureRecord, dx: f64) -> MeasureRecord {
    MeasureRecord {
        n1: (b.n1 - a.n1) / dx,
        x_odd: (b.x_odd - a.x_odd) / dx,
        x_even: (b.x_even - a.x_even) / dx,
        c_odd: (b.c_odd - a.c_odd) / dx,
        c_even: (b.c_even - a.c_even) / dx,
        d_odd: (b.d_odd - a.d_odd) / dx,
        d_even: (b.d_even - a.d_even) / dx,
        e_global: (b.e_global - a.e_global) / dx,
        ms_density: (b.ms_density - a.ms_density) / dx,
    }
}

/// Central differences on the grid, one-sided at both ends.
pub fn grid_slopes(xs: &[f64], records: &[MeasureRecord]) -> Vec<MeasureRecord> {
    let last = xs.len() - 1;
    (0..=last)
        .map(|i| {
            let (a, b) = (i.saturating_sub(1), (i + 1).min(last));
            slope(&records[a], &records[b], xs[b] - xs[a])
        })
        .collect()
}

fn variants(spec: &SweepSpec, at: &Fixed, params: &ModelParams) -> CliResult<VariantValues> {
    let mut out = VariantValues::default();
    if spec.variants.eq23 {
        let c = |bond| concurrence_single_mode_approx(params, bond).map(|v| v.into_inner()).map_err(|e| fail(at, e));
        out.eq23 = Some((c(Bond::Odd)?, c(Bond::Even)?));
    }
    if spec.variants.elliptic {
        out.elliptic = match elliptic_concurrence_h0(at.r) {
            Ok(v) => Some(v.into_inner()),
            Err(Error::Divergent(_)) => None,
            Err(e) => return Err(fail(at, e)),
        };
    }
    Ok(out)
}

struct Evaluated {
    at: Fixed,
    record: MeasureRecord,
    off_field: Option<MeasureRecord>,
    off_ratio: Option<f64>,
    variants: VariantValues,
}

fn evaluate_point(spec: &SweepSpec, x: f64) -> CliResult<Evaluated> {
    let at = point(spec.fixed, spec.axis, x);
    let params = at.params().map_err(|e| fail(&at, e))?;
    let record = evaluate(&params).map_err(|e| fail(&at, e))?;
    let want = spec.measures.derivatives;
    let off_field = if want && spec.axis != Axis::H { Some(field_slope(&at)?) } else { None };
    let off_ratio = if want && spec.axis != Axis::R { Some(ratio_slope(&at)?) } else { None };
    Ok(Evaluated { at, record, off_field, off_ratio, variants: variants(spec, &at, &params)? })
}

/// Evaluates every grid point of `spec`; records come back in grid order.
pub fn run_sweep(spec: &SweepSpec) -> CliResult<Vec<OutputRecord>> {
    match spec.threads {
        Some(threads) => rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| CliError::Usage(format!("cannot start {threads} worker threads: {e}")))?
            .install(|| sweep_in_pool(spec)),
        None => sweep_in_pool(spec),
    }
}

fn sweep_in_pool(spec: &SweepSpec) -> CliResult<Vec<OutputRecord>> {
    let xs = match spec.axis {
        Axis::N => {
            let stride = (spec.stop - spec.start) / (spec.steps - 1) as f64;
            (0..spec.steps).map(|i| spec.start + stride * i as f64).collect()
        }
        _ => grid(spec.start, spec.stop, spec.steps),
    };
    let points = xs.par_iter().map(|&x| evaluate_point(spec, x)).collect::<CliResult<Vec<_>>>()?;
    let on_axis = match spec.axis {
        Axis::H | Axis::R if spec.measures.derivatives => {
            let records: Vec<_> = points.iter().map(|p| p.record).collect();
            Some(grid_slopes(&xs, &records))
        }
        _ => None,
    };
    let mut out = Vec::with_capacity(points.len());
    for (i, p) in points.into_iter().enumerate() {
        let derivatives = spec.measures.derivatives.then(|| {
            let field = match spec.axis {
                Axis::H => on_axis.as_ref().expect("on-axis slopes")[i],
                _ => p.off_field.expect("off-axis field slope"),
            };
            let dms_dr = match spec.axis {
                Axis::R => on_axis.as_ref().expect("on-axis slopes")[i].ms_density,
                _ => p.off_ratio.expect("off-axis ratio slope"),
            };
            Derivatives {
                dc12_dh: field.c_odd,
                dc23_dh: field.c_even,
                dd12_dh: field.d_odd,
                deglob_dh: field.e_global,
                dms_dh: field.ms_density,
                dms_dr,
            }
        });
        let record = OutputRecord {
            n_sites: p.at.n_sites,
            jx: p.at.jx,
            jy: p.at.r * p.at.jx,
            r: p.at.r,
            h: p.at.h,
            record: p.record,
            derivatives,
            variants: p.variants,
        };
        if !is_finite(&record) {
            return Err(fail(&p.at, Error::NonPhysical("non-finite output".into())));
        }
        out.push(record);
    }
    Ok(out)
}

fn is_finite(r: &OutputRecord) -> bool {
    let derivs = r.derivatives.is_none_or(|d| {
        [d.dc12_dh, d.dc23_dh, d.dd12_dh, d.deglob_dh, d.dms_dh, d.dms_dr].iter().all(|v| v.is_finite())
    });
    let pairs = [r.variants.eq23, r.variants.elliptic].iter().flatten().all(|(a, b)| a.is_finite() && b.is_finite());
    r.record.is_finite() && derivs && pairs && r.h.is_finite() && r.r.is_finite()
}
