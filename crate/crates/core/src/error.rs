use std::fmt;

use serde::{Deserialize, Serialize};

/// Maximum number of witnesses kept in a [`ViolationReport`].
pub const MAX_WITNESSES: usize = 100;

/// One failed instance of a checked condition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub condition: String,
    pub tuple: Vec<usize>,
    pub detail: String,
}

/// Collected failures of an exhaustive check.
///
/// `total` counts every failing instance even when the witness list has been
/// capped at [`MAX_WITNESSES`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViolationReport {
    pub subject: String,
    pub witnesses: Vec<Witness>,
    pub total: usize,
}

impl ViolationReport {
    pub fn new(subject: impl Into<String>) -> Self {
        ViolationReport {
            subject: subject.into(),
            witnesses: Vec::new(),
            total: 0,
        }
    }

    pub fn push(&mut self, condition: &str, tuple: &[usize], detail: impl Into<String>) {
        self.total += 1;
        if self.witnesses.len() < MAX_WITNESSES {
            self.witnesses.push(Witness {
                condition: condition.to_string(),
                tuple: tuple.to_vec(),
                detail: detail.into(),
            });
        }
    }

    pub fn is_empty(&self) -> bool {
        self.total == 0
    }

    pub fn truncated(&self) -> bool {
        self.total > self.witnesses.len()
    }

    /// Whether any witness was recorded for `condition`.
    pub fn has(&self, condition: &str) -> bool {
        self.witnesses.iter().any(|w| w.condition == condition)
    }

    /// `Ok(ok)` if nothing was recorded, otherwise the report as an error.
    pub fn into_result<T>(self, ok: T) -> Result<T> {
        if self.is_empty() {
            Ok(ok)
        } else {
            Err(Error::Violation(self))
        }
    }
}

impl fmt::Display for ViolationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: {} violation(s)", self.subject, self.total)?;
        for w in &self.witnesses {
            writeln!(
                f,
                "  condition {} at {:?}: {}",
                w.condition, w.tuple, w.detail
            )?;
        }
        if self.truncated() {
            writeln!(
                f,
                "  ... {} more not shown",
                self.total - self.witnesses.len()
            )?;
        }
        Ok(())
    }
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Input is structurally unusable (wrong shape, out-of-range entries).
    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    /// A well-formed object failed a mathematical condition.
    #[error("{0}")]
    Violation(ViolationReport),

    #[error("signature mismatch: expected {expected}, found {found}")]
    SignatureMismatch { expected: String, found: String },

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("quandle of order {0} exceeds the solver limit of {1}")]
    TooLarge(usize, usize),

    #[error("cocycle and movie are defined over different symmetric quandles")]
    QuandleMismatch,

    /// Bookkeeping that contradicts itself, e.g. an impossible Euler characteristic.
    #[error("inconsistent data: {0}")]
    Inconsistent(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            location: location.into(),
            message: message.into(),
        }
    }

    /// True for failures of a mathematical condition, as opposed to bad input.
    pub fn is_domain_violation(&self) -> bool {
        matches!(self, Error::Violation(_) | Error::Inconsistent(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
