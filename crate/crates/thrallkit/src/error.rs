use thiserror::Error;

#[derive(Debug, Error)]
pub enum AppError {
    #[error("{0}")]
    Usage(String),
    /// Malformed input; `field` is a dotted path into the JSON document.
    #[error("invalid field `{field}`: {message}")]
    Input { field: String, message: String },
    #[error(transparent)]
    Core(#[from] thrallkit_core::Error),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

impl AppError {
    pub fn input(field: impl Into<String>, message: impl Into<String>) -> Self {
        AppError::Input { field: field.into(), message: message.into() }
    }

    /// 3 for resource guards, 2 for everything the caller got wrong.
    pub fn exit_code(&self) -> i32 {
        match self {
            AppError::Core(thrallkit_core::Error::ResourceLimit { .. }) => 3,
            _ => 2,
        }
    }
}

pub type AppResult<T> = Result<T, AppError>;
