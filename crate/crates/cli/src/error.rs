use std::path::PathBuf;

use thiserror::Error;

/// Exit status for a complete description or any other success.
pub const EXIT_OK: i32 = 0;
/// Exit status when `check` finds missing facets or a bound fails.
pub const EXIT_INCOMPLETE: i32 = 2;
/// Exit status for unreadable or malformed input and usage errors.
pub const EXIT_INVALID: i32 = 3;
/// Exit status when a size cap stops the computation.
pub const EXIT_CAP: i32 = 4;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{what}, line {line}: {msg}")]
    Parse {
        what: &'static str,
        line: usize,
        msg: String,
    },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] tmlab_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(tmlab_core::Error::CapExceeded { .. }) => EXIT_CAP,
            _ => EXIT_INVALID,
        }
    }

    pub(crate) fn parse(what: &'static str, line: usize, msg: impl Into<String>) -> Self {
        CliError::Parse {
            what,
            line,
            msg: msg.into(),
        }
    }
}
