use std::io;

use altbraid::signature::SignatureError;
use altbraid::{BraidError, BurauError, ConjectureError};
use thiserror::Error;

/// Exit status 1 for bad input, 2 for arithmetic that should never fail.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    User(String),
    #[error("internal error: {0}")]
    Defect(String),
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::User(_) | CliError::Io(_) => 1,
            CliError::Defect(_) => 2,
        }
    }
}

impl From<BraidError> for CliError {
    fn from(e: BraidError) -> Self {
        CliError::User(e.to_string())
    }
}

impl From<SignatureError> for CliError {
    fn from(e: SignatureError) -> Self {
        CliError::User(e.to_string())
    }
}

impl From<BurauError> for CliError {
    fn from(e: BurauError) -> Self {
        if e.is_defect() {
            CliError::Defect(e.to_string())
        } else {
            CliError::User(e.to_string())
        }
    }
}

impl From<ConjectureError> for CliError {
    fn from(e: ConjectureError) -> Self {
        if e.is_defect() {
            CliError::Defect(e.to_string())
        } else {
            CliError::User(e.to_string())
        }
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        match e.into_kind() {
            csv::ErrorKind::Io(io) => CliError::Io(io),
            other => CliError::Defect(format!("csv: {other:?}")),
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Defect(format!("json: {e}"))
    }
}
