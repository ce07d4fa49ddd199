use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument fell outside the domain where the formula is defined.
    #[error("{name} = {value:e} is out of domain: {constraint}")]
    Domain {
        name: &'static str,
        value: f64,
        constraint: &'static str,
    },

    /// A mode pair that the requested operation cannot handle.
    #[error("invalid mode pair: {0}")]
    ModePair(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unknown key(s): {}", .0.join(", "))]
    UnknownKeys(Vec<String>),

    #[error("invalid {field}: {constraint}")]
    Validation { field: String, constraint: String },
}

impl Error {
    pub(crate) fn domain(name: &'static str, value: f64, constraint: &'static str) -> Self {
        Error::Domain {
            name,
            value,
            constraint,
        }
    }

    pub(crate) fn validation(field: impl Into<String>, constraint: impl Into<String>) -> Self {
        Error::Validation {
            field: field.into(),
            constraint: constraint.into(),
        }
    }

    /// True for errors caused by user input (config text, CLI arguments)
    /// rather than by a numerical domain violation inside a formula.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Parse { .. } | Error::UnknownKeys(_) | Error::Validation { .. }
        )
    }
}
