// SPDX-License-Identifier: Apache-2.0

use std::io;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error("evaluation failed at {point}: {source}")]
    Evaluation { point: String, source: kitaev_core::Error },

    #[error("verification failed")]
    VerificationFailed,

    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Evaluation { .. } | CliError::VerificationFailed => 2,
            CliError::Io(_) => 3,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
