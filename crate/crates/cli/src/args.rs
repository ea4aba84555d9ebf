// SPDX-License-Identifier: Apache-2.0

//! Command-line grammar and its resolution into sweep and verify specs.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kitaev_core::oracle::{MAX_ORACLE_SITES, MIN_FIELD};
use kitaev_core::ModelParams;

use crate::error::{CliError, CliResult};

#[derive(Debug, Parser)]
#[command(name = "kitaev", version, about = "Ground-state correlations of the alternating-bond Kitaev chain")]
#[command(allow_negative_numbers = true)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate the analytic measures along one parameter axis.
    Sweep(SweepArgs),
    /// Same as `sweep` with the derivative columns enabled.
    Derivatives(SweepArgs),
    /// Compare the analytic pipeline against exact diagonalization (N ≤ 14).
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct ModelArgs {
    /// Number of sites.
    #[arg(long = "n")]
    pub n: Option<usize>,
    #[arg(long, default_value_t = 1.0)]
    pub jx: f64,
    /// Coupling ratio jy/jx.
    #[arg(long, conflicts_with = "jy")]
    pub r: Option<f64>,
    #[arg(long)]
    pub jy: Option<f64>,
    /// Transverse field.
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub h: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Axis {
    #[value(name = "h")]
    H,
    #[value(name = "r")]
    R,
    #[value(name = "N", alias = "n")]
    N,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Group {
    Correlators,
    Concurrence,
    Discord,
    Global,
    Multispecies,
    Derivatives,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long, value_enum, default_value = "h")]
    pub axis: Axis,
    /// Axis interval `start:stop` (defaults: h -2:2, r 0:5, N 4:400).
    #[arg(long, allow_hyphen_values = true)]
    pub range: Option<String>,
    /// Grid points, including both ends (default 401; stride 4 on the N axis).
    #[arg(long)]
    pub steps: Option<usize>,
    /// Column groups to fill; the rest are left empty.
    #[arg(long, value_enum, value_delimiter = ',')]
    pub measures: Option<Vec<Group>>,
    /// Add the approximate single-mode concurrence columns.
    #[arg(long)]
    pub variant_eq23: bool,
    /// Add the zero-field elliptic-integral concurrence columns.
    #[arg(long)]
    pub variant_elliptic: bool,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    /// Output file (default standard output).
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Worker threads (default: all cores).
    #[arg(long)]
    pub threads: Option<usize>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long, default_value_t = 1e-6)]
    pub tol: f64,
}

pub const DEFAULT_SITES: usize = 100;
pub const DEFAULT_STEPS: usize = 401;

/// Which measure groups have their columns filled.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MeasureSet {
    pub correlators: bool,
    pub concurrence: bool,
    pub discord: bool,
    pub global: bool,
    pub multispecies: bool,
    pub derivatives: bool,
}

impl MeasureSet {
    pub const ALL: MeasureSet = MeasureSet {
        correlators: true,
        concurrence: true,
        discord: true,
        global: true,
        multispecies: true,
        derivatives: false,
    };

    fn from_groups(groups: &[Group]) -> Self {
        let has = |g| groups.contains(&g);
        MeasureSet {
            correlators: has(Group::Correlators),
            concurrence: has(Group::Concurrence),
            discord: has(Group::Discord),
            global: has(Group::Global),
            multispecies: has(Group::Multispecies),
            derivatives: has(Group::Derivatives),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Variants {
    pub eq23: bool,
    pub elliptic: bool,
}

/// Fixed model values; the swept one is overridden per grid point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Fixed {
    pub n_sites: usize,
    pub jx: f64,
    pub r: f64,
    pub h: f64,
}

impl Fixed {
    pub fn params(&self) -> Result<ModelParams, kitaev_core::Error> {
        ModelParams::new(self.jx, self.r * self.jx, self.h, self.n_sites)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub axis: Axis,
    pub start: f64,
    pub stop: f64,
    pub steps: usize,
    pub fixed: Fixed,
    pub measures: MeasureSet,
    pub variants: Variants,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub threads: Option<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifySpec {
    pub params: ModelParams,
    pub tolerance: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Spec {
    Sweep(SweepSpec),
    Verify(VerifySpec),
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn finite(name: &str, value: f64) -> CliResult<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(usage(format!("--{name} must be finite, got {value}")))
    }
}

fn resolve_model(model: &ModelArgs) -> CliResult<Fixed> {
    let jx = finite("jx", model.jx)?;
    if jx <= 0.0 {
        return Err(usage(format!("--jx must be positive, got {jx}")));
    }
    let r = match (model.r, model.jy) {
        (Some(r), _) => finite("r", r)?,
        (None, Some(jy)) => finite("jy", jy)? / jx,
        (None, None) => 1.0,
    };
    if r < 0.0 {
        return Err(usage(format!("coupling ratio must be non-negative, got {r}")));
    }
    Ok(Fixed { n_sites: model.n.unwrap_or(DEFAULT_SITES), jx, r, h: finite("h", model.h)? })
}

fn parse_range(text: &str) -> CliResult<(f64, f64)> {
    let (a, b) = text.split_once(':').ok_or_else(|| usage(format!("--range expects start:stop, got {text:?}")))?;
    let parse = |s: &str| s.trim().parse::<f64>().map_err(|_| usage(format!("--range bound {s:?} is not a number")));
    Ok((finite("range", parse(a)?)?, finite("range", parse(b)?)?))
}

fn check_analytic_size(n: usize) -> CliResult<()> {
    if n == 0 || !n.is_multiple_of(4) {
        Err(usage(format!("N must be a positive multiple of 4, got {n}")))
    } else {
        Ok(())
    }
}

fn resolve_sweep(args: SweepArgs, derivatives: bool) -> CliResult<SweepSpec> {
    let fixed = resolve_model(&args.model)?;
    let (start, stop) = match (&args.range, args.axis) {
        (Some(text), _) => parse_range(text)?,
        (None, Axis::H) => (-2.0, 2.0),
        (None, Axis::R) => (0.0, 5.0),
        (None, Axis::N) => (4.0, 400.0),
    };
    if start >= stop {
        return Err(usage(format!("--range needs start < stop, got {start}:{stop}")));
    }
    let steps = match (args.steps, args.axis) {
        (Some(s), _) => s,
        (None, Axis::N) => ((stop - start) / 4.0) as usize + 1,
        (None, _) => DEFAULT_STEPS,
    };
    if steps < 2 {
        return Err(usage(format!("--steps must be at least 2, got {steps}")));
    }
    match args.axis {
        Axis::N => {
            if start.fract() != 0.0 || stop.fract() != 0.0 || start < 4.0 {
                return Err(usage("N range bounds must be positive integers"));
            }
            check_analytic_size(start as usize)?;
            let span = (stop - start) as usize;
            if !span.is_multiple_of(steps - 1) || !(span / (steps - 1)).is_multiple_of(4) {
                return Err(usage(format!(
                    "N grid {start}:{stop} with {steps} points does not have a stride divisible by 4"
                )));
            }
        }
        Axis::R if start < 0.0 => return Err(usage("r range must be non-negative")),
        _ => check_analytic_size(fixed.n_sites)?,
    }
    if args.axis == Axis::R && args.model.jy.is_some() {
        return Err(usage("--jy cannot be fixed on an r sweep"));
    }
    let mut measures = args.measures.as_deref().map_or(MeasureSet::ALL, MeasureSet::from_groups);
    measures.derivatives |= derivatives;
    if let Some(0) = args.threads {
        return Err(usage("--threads must be at least 1"));
    }
    Ok(SweepSpec {
        axis: args.axis,
        start,
        stop,
        steps,
        fixed,
        measures,
        variants: Variants { eq23: args.variant_eq23, elliptic: args.variant_elliptic },
        format: args.format,
        out: args.out,
        threads: args.threads,
    })
}

fn resolve_verify(args: VerifyArgs) -> CliResult<VerifySpec> {
    let fixed = resolve_model(&args.model)?;
    let n = fixed.n_sites;
    if !(2..=MAX_ORACLE_SITES).contains(&n) || n % 2 != 0 {
        return Err(usage(format!("verify needs an even N in 2..={MAX_ORACLE_SITES}, got {n}")));
    }
    if fixed.h.abs() < MIN_FIELD {
        return Err(usage(format!(
            "h = {} is degenerate: the ground state is not unique below |h| = {MIN_FIELD:e}",
            fixed.h
        )));
    }
    if args.tol.is_nan() || args.tol < 0.0 {
        return Err(usage(format!("--tol must be non-negative, got {}", args.tol)));
    }
    let params = fixed.params().map_err(|e| usage(e.to_string()))?;
    Ok(VerifySpec { params, tolerance: args.tol })
}

impl Cli {
    pub fn resolve(self) -> CliResult<Spec> {
        match self.command {
            Command::Sweep(args) => resolve_sweep(args, false).map(Spec::Sweep),
            Command::Derivatives(args) => resolve_sweep(args, true).map(Spec::Sweep),
            Command::Verify(args) => resolve_verify(args).map(Spec::Verify),
        }
    }
}

/// Parses `argv` (including the program name) into a resolved spec.
pub fn parse_args<I, T>(argv: I) -> Result<Spec, ParseOutcome>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv).map_err(ParseOutcome::Clap)?;
    cli.resolve().map_err(ParseOutcome::Cli)
}

#[derive(Debug)]
pub enum ParseOutcome {
    /// Includes `--help` and `--version`, which are not failures.
    Clap(clap::Error),
    Cli(CliError),
}

impl ParseOutcome {
    pub fn exit_code(&self) -> i32 {
        match self {
            ParseOutcome::Clap(e) if !e.use_stderr() => 0,
            ParseOutcome::Clap(_) => 1,
            ParseOutcome::Cli(e) => e.exit_code(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sweep(argv: &[&str]) -> SweepSpec {
        match parse_args(std::iter::once("kitaev").chain(argv.iter().copied())).unwrap() {
            Spec::Sweep(s) => s,
            other => panic!("{other:?}"),
        }
    }

    fn fails(argv: &[&str]) -> i32 {
        parse_args(std::iter::once("kitaev").chain(argv.iter().copied())).unwrap_err().exit_code()
    }

    #[test]
    fn field_sweep_flags() {
        let s = sweep(&["sweep", "--axis", "h", "--range", "-2:2", "--steps", "401", "--r", "0.5", "--n", "100"]);
        assert_eq!((s.axis, s.start, s.stop, s.steps), (Axis::H, -2.0, 2.0, 401));
        assert_eq!(s.fixed, Fixed { n_sites: 100, jx: 1.0, r: 0.5, h: 0.0 });
        assert_eq!(s.measures, MeasureSet::ALL);
    }

    #[test]
    fn defaults() {
        let s = sweep(&["sweep"]);
        assert_eq!(s.fixed, Fixed { n_sites: 100, jx: 1.0, r: 1.0, h: 0.0 });
        assert_eq!((s.start, s.stop, s.steps, s.format), (-2.0, 2.0, 401, Format::Csv));
        let s = sweep(&["derivatives", "--axis", "r", "--h", "-0.25"]);
        assert!(s.measures.derivatives);
        assert_eq!((s.start, s.stop, s.fixed.h), (0.0, 5.0, -0.25));
    }

    #[test]
    fn jy_sets_ratio() {
        let s = sweep(&["sweep", "--jx", "2", "--jy", "1"]);
        assert_eq!(s.fixed.r, 0.5);
    }

    #[test]
    fn size_axis_stride() {
        let s = sweep(&["sweep", "--axis", "N", "--range", "8:48"]);
        assert_eq!(s.steps, 11);
        assert_eq!(fails(&["sweep", "--axis", "N", "--range", "8:48", "--steps", "5"]), 1);
        assert_eq!(fails(&["sweep", "--axis", "N", "--range", "6:46"]), 1);
    }

    #[test]
    fn usage_errors() {
        assert_eq!(fails(&["sweep", "--n", "10"]), 1);
        assert_eq!(fails(&["sweep", "--r", "1", "--jy", "1"]), 1);
        assert_eq!(fails(&["sweep", "--bogus"]), 1);
        assert_eq!(fails(&["sweep", "--h", "abc"]), 1);
        assert_eq!(fails(&["sweep", "--range", "2:-2"]), 1);
        assert_eq!(fails(&["sweep", "--steps", "1"]), 1);
        assert_eq!(fails(&["verify", "--n", "8", "--r", "0.5", "--h", "0"]), 1);
        assert_eq!(fails(&["verify", "--n", "16", "--h", "0.5"]), 1);
        assert_eq!(fails(&["--help"]), 0);
    }

    #[test]
    fn verify_spec() {
        let spec = parse_args(["kitaev", "verify", "--n", "8", "--r", "0.5", "--h", "0.5", "--tol", "1e-6"]).unwrap();
        let expected = ModelParams::with_ratio(0.5, 0.5, 8).unwrap();
        assert_eq!(spec, Spec::Verify(VerifySpec { params: expected, tolerance: 1e-6 }));
    }

    #[test]
    fn measure_groups() {
        let s = sweep(&["sweep", "--measures", "concurrence,derivatives"]);
        assert!(s.measures.concurrence && s.measures.derivatives && !s.measures.discord);
    }
}
