use thiserror::Error;

/// Errors raised by the library. Each variant maps onto one CLI exit code.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the function.
    #[error("domain error in {op}: {reason}")]
    Domain { op: &'static str, reason: String },

    /// A bound was requested under hypotheses the inputs do not satisfy.
    #[error("assumption violated in {op}: {reason}")]
    Assumption { op: &'static str, reason: String },

    /// Inputs are well-typed but incompatible with each other.
    #[error("usage error: {0}")]
    Usage(String),

    /// A structure file or generator spec failed to parse.
    #[error("parse error at line {line}: {reason}")]
    Parse { line: usize, reason: String },
}

impl Error {
    pub(crate) fn domain(op: &'static str, reason: impl Into<String>) -> Self {
        Error::Domain {
            op,
            reason: reason.into(),
        }
    }

    pub(crate) fn assumption(op: &'static str, reason: impl Into<String>) -> Self {
        Error::Assumption {
            op,
            reason: reason.into(),
        }
    }

    pub(crate) fn parse(line: usize, reason: impl Into<String>) -> Self {
        Error::Parse {
            line,
            reason: reason.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Rejects NaN/inf and values not strictly positive.
pub(crate) fn require_positive(op: &'static str, name: &str, x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::domain(op, format!("{name} must be finite, got {x}")));
    }
    if x <= 0.0 {
        return Err(Error::domain(op, format!("{name} must be > 0, got {x}")));
    }
    Ok(x)
}

pub(crate) fn require_non_negative(op: &'static str, name: &str, x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::domain(op, format!("{name} must be finite, got {x}")));
    }
    if x < 0.0 {
        return Err(Error::domain(op, format!("{name} must be >= 0, got {x}")));
    }
    Ok(x)
}
