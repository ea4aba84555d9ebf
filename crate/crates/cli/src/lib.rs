// SPDX-License-Identifier: Apache-2.0

//! Sweep driver and oracle front end for the `kitaev` binary.

#![forbid(unsafe_code)]

pub mod args;
pub mod emit;
mod error;
pub mod sweep;
pub mod verify;

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};

pub use args::{parse_args, Spec, SweepSpec, VerifySpec};
pub use error::{CliError, CliResult};
pub use sweep::{run_sweep, OutputRecord};
pub use verify::{run_verify, VerifyOutcome};

/// Runs a sweep and writes it to the spec's destination.
pub fn sweep_to_output(spec: &SweepSpec) -> CliResult<()> {
    let records = run_sweep(spec)?;
    match &spec.out {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path)?);
            emit::emit(&mut w, &records, spec.format, &spec.measures, &spec.variants)?;
            w.flush()?;
        }
        None => {
            let mut w = BufWriter::new(io::stdout().lock());
            emit::emit(&mut w, &records, spec.format, &spec.measures, &spec.variants)?;
            w.flush()?;
        }
    }
    Ok(())
}

/// Entry point shared by the binary; returns the process exit code.
pub fn main_with_args<I: IntoIterator<Item = OsString>>(argv: I) -> i32 {
    let spec = match parse_args(argv) {
        Ok(spec) => spec,
        Err(outcome) => {
            match &outcome {
                args::ParseOutcome::Clap(e) => {
                    let _ = e.print();
                }
                args::ParseOutcome::Cli(e) => eprintln!("error: {e}"),
            }
            return outcome.exit_code();
        }
    };
    let result = match spec {
        Spec::Sweep(s) => sweep_to_output(&s),
        Spec::Verify(v) => run_verify(&v, &mut io::stdout().lock(), &mut io::stderr().lock()).map(|_| ()),
    };
    match result {
        Ok(()) => 0,
        // A closed stdout (`| head`) is the reader's choice, not a failed write.
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
