use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{}:{line}:{column}: {field}: {message}", file.display())]
    Parse { file: PathBuf, line: usize, column: usize, field: String, message: String },
    #[error("{field}: {message}")]
    Invalid { field: String, message: String },
    #[error("scenario is for command {found}, not {expected}")]
    CommandMismatch { expected: &'static str, found: &'static str },
    #[error("{context}: {source}")]
    Core {
        context: String,
        #[source]
        source: schmidt_gates::Error,
    },
}

impl CliError {
    pub fn invalid(field: impl Into<String>, message: impl Into<String>) -> Self {
        CliError::Invalid { field: field.into(), message: message.into() }
    }

    pub fn core(context: impl Into<String>) -> impl FnOnce(schmidt_gates::Error) -> Self {
        let context = context.into();
        move |source| CliError::Core { context, source }
    }
}
