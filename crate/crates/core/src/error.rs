use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// A function was called with an argument outside its documented domain.
    #[error("contract violation: {0}")]
    Contract(String),

    #[error("malformed CoNLL-U at line {line}: {message}")]
    Conllu { line: usize, message: String },

    #[error("lexicon {source_name}, line {line}: {message}")]
    Lexicon {
        source_name: String,
        line: usize,
        message: String,
    },

    #[error(
        "line count mismatch: {left} has {left_lines} lines, {right} has {right_lines} lines"
    )]
    Alignment {
        left: PathBuf,
        left_lines: usize,
        right: PathBuf,
        right_lines: usize,
    },

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Stream(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn contract(message: impl Into<String>) -> Self {
        Error::Contract(message.into())
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// True for errors caused by the contents of input data rather than by
    /// how the library was called.
    pub fn is_data_error(&self) -> bool {
        !matches!(self, Error::Contract(_))
    }
}
