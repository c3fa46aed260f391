use core::fmt;

use alloc::string::String;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A probability table entry is negative.
    NegativeProbability {
        index: usize,
        value: f64,
    },
    /// Table entries do not sum to one within [`crate::probability::NORMALIZATION_TOLERANCE`].
    NotNormalized {
        sum: f64,
    },
    /// Wrong number of variables or table entries for the operation.
    BadArity {
        expected: &'static str,
        found: usize,
    },
    UnknownLabel(String),
    DuplicateLabel(String),
    SameLabel(String),
    /// A conditioned-on label also appears as the target.
    Overlap(String),
    /// A scalar argument lies outside its allowed interval.
    OutOfRange {
        what: &'static str,
        value: f64,
    },
    /// An empty or inverted sweep range, or too few steps.
    BadRange,
    EmptyCountTable,
    /// Nothing to write.
    NoRows,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NegativeProbability { index, value } => {
                write!(f, "probability at index {index} is negative ({value})")
            }
            Error::NotNormalized { sum } => write!(f, "probabilities sum to {sum}, not 1"),
            Error::BadArity { expected, found } => {
                write!(f, "bad arity: expected {expected}, found {found}")
            }
            Error::UnknownLabel(l) => write!(f, "unknown variable label `{l}`"),
            Error::DuplicateLabel(l) => write!(f, "variable label `{l}` appears twice"),
            Error::SameLabel(l) => write!(f, "mutual information of `{l}` with itself"),
            Error::Overlap(l) => write!(f, "label `{l}` is both target and condition"),
            Error::OutOfRange { what, value } => write!(f, "{what} out of range: {value}"),
            Error::BadRange => f.write_str("sweep range must satisfy min < max with at least 2 steps"),
            Error::EmptyCountTable => f.write_str("count table is empty"),
            Error::NoRows => f.write_str("no sweep rows to write"),
        }
    }
}

impl core::error::Error for Error {}
