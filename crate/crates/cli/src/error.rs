use std::io;

use pbwt_core::AlphabetError;
use thiserror::Error;

use crate::verify::Mismatch;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Read { path: String, source: io::Error },
    #[error("{0}")]
    Alphabet(#[from] AlphabetError),
    #[error("input has {len} symbols, over the limit of {max}")]
    TooLong { len: usize, max: usize },
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Mismatch(#[from] Mismatch),
    #[error("write failed: {0}")]
    Write(#[from] io::Error),
}

impl CliError {
    /// 1 for a verification mismatch, 2 for everything else.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Mismatch(_) => 1,
            _ => 2,
        }
    }
}
