use std::fmt::Display;
use std::io;
use std::path::{Path, PathBuf};

use hypergirth::{Classify, ErrorKind};
use thiserror::Error;

/// Every failure the command line can report, grouped by exit code.
///
/// | code | meaning                                   |
/// |------|-------------------------------------------|
/// | 0    | success                                   |
/// | 1    | file could not be read or written         |
/// | 2    | malformed input file, recipe or arguments |
/// | 3    | precondition violated                     |
/// | 4    | resource budget exceeded                  |
/// | 5    | verification failed                       |
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Precondition(String),
    #[error("{0}")]
    Resource(String),
    #[error("{0}")]
    Verification(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io { .. } => 1,
            CliError::Parse(_) => 2,
            CliError::Precondition(_) => 3,
            CliError::Resource(_) => 4,
            CliError::Verification(_) => 5,
        }
    }

    pub fn io(path: &Path, source: io::Error) -> Self {
        CliError::Io {
            path: path.to_path_buf(),
            source,
        }
    }

    /// Maps a library error by its kind, prefixing `context` when non-empty.
    pub fn from_core<E: Classify + Display>(context: &str, e: E) -> Self {
        let message = if context.is_empty() {
            e.to_string()
        } else {
            format!("{context}: {e}")
        };
        match e.kind() {
            ErrorKind::Parse => CliError::Parse(message),
            ErrorKind::Precondition => CliError::Precondition(message),
            ErrorKind::Resource => CliError::Resource(message),
            ErrorKind::Verification => CliError::Verification(message),
        }
    }

    /// Same error with `context: ` in front of its message.
    pub fn context(self, context: &str) -> Self {
        let wrap = |m: String| format!("{context}: {m}");
        match self {
            CliError::Io { path, source } => CliError::Io {
                path,
                source: io::Error::new(source.kind(), format!("{context}: {source}")),
            },
            CliError::Parse(m) => CliError::Parse(wrap(m)),
            CliError::Precondition(m) => CliError::Precondition(wrap(m)),
            CliError::Resource(m) => CliError::Resource(wrap(m)),
            CliError::Verification(m) => CliError::Verification(wrap(m)),
        }
    }
}

macro_rules! from_core {
    ($($t:ty),*) => {$(
        impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::from_core("", e)
            }
        }
    )*};
}

from_core!(
    hypergirth::format::ParseError,
    hypergirth::hypergraph::StructureError,
    hypergirth::girth::OracleError,
    hypergirth::geometry::GeometryError,
    hypergirth::transform::TransformError,
    hypergirth::planner::PlannerError
);
