use std::path::PathBuf;

use strathom_core::certificate::CertificateError;
use strathom_core::diagram::DiagramError;
use strathom_core::filtered::ComplexViolation;
use strathom_core::poset::{PosetError, PosetViolation};

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("{0}")]
    Diagram(#[from] DiagramError),
    #[error("{0}")]
    Poset(#[from] PosetError),
    #[error("{0}")]
    PosetViolation(#[from] PosetViolation),
    #[error("{0}")]
    Complex(#[from] ComplexViolation),
    #[error("{0}")]
    Certificate(#[from] CertificateError),
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{0}")]
    Config(String),
    #[error("knot table has no entries")]
    EmptyTable,
    #[error("{0}")]
    Internal(String),
}

impl Error {
    pub fn syntax(line: usize, msg: impl Into<String>) -> Self {
        Error::Syntax { line, msg: msg.into() }
    }

    /// 1 for internal failures, 2 for bad input.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Certificate(_) | Error::Internal(_) => 1,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
