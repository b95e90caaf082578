use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("matrix is not positive definite (pivot {pivot} at row {row})")]
    NotPositiveDefinite { row: usize, pivot: f64 },

    /// An element whose singleton value is (numerically) zero; curvature is undefined.
    #[error("degenerate element {element}: singleton value {value} is not positive")]
    DegenerateElement { element: usize, value: f64 },

    /// Raw curvature fell outside [0, 1] by more than the diagnostic tolerance.
    #[error("objective is not monotone submodular: raw curvature {raw} outside [0, 1]")]
    NotSubmodular { raw: f64 },

    #[error("enumeration of {required} {what} exceeds cap {cap}; {hint}")]
    Capacity {
        what: &'static str,
        required: u128,
        cap: u128,
        hint: &'static str,
    },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("io error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    /// True for errors caused by malformed input text rather than by the problem itself.
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse(_))
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
