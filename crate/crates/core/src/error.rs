use alloc::string::String;
use core::fmt;

use crate::matrix::Word;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A word must have at least one entry.
    EmptyWord,
    /// Word entries are positive integers.
    NonPositiveEntry { index: usize },
    /// The operation needs a longer word.
    TooShort { needed: usize, got: usize },
    /// The matrix does not have determinant one.
    Determinant,
    /// A surgery or its inverse cannot be applied at the requested position.
    NotApplicable { op: &'static str, position: usize },
    /// The word is not a solution of any of the three problems; `stuck` is the
    /// word at which reduction stopped (the input itself when the matrix test fails).
    NotASolution { stuck: Word },
    /// The requested size is above the configured enumeration ceiling.
    Budget { what: &'static str, n: usize, limit: usize },
    /// A dissection is malformed (crossing or invalid diagonals, bad certificate, ...).
    InvalidDissection(String),
    /// The quiddity is not periodic with the requested period.
    NotPeriodic { period: usize },
    /// Central symmetry only makes sense for polygons with an even number of vertices.
    OddPolygon { n: usize },
    /// The input is valid but outside what the operation supports.
    Unsupported(&'static str),
    /// An intermediate value does not fit the fixed-width type used for word entries.
    Overflow,
    /// The two enumerators disagree.
    OracleMismatch { n: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyWord => write!(f, "empty word"),
            Error::NonPositiveEntry { index } => {
                write!(f, "entry {index} is not a positive integer")
            }
            Error::TooShort { needed, got } => {
                write!(f, "word of length {got} is too short (need at least {needed})")
            }
            Error::Determinant => write!(f, "matrix determinant is not 1"),
            Error::NotApplicable { op, position } => {
                write!(f, "{op} is not applicable at position {position}")
            }
            Error::NotASolution { stuck } => write!(f, "not a solution (stuck at {stuck})"),
            Error::Budget { what, n, limit } => {
                write!(f, "{what}: n = {n} exceeds the budget ceiling {limit}")
            }
            Error::InvalidDissection(why) => write!(f, "invalid dissection: {why}"),
            Error::NotPeriodic { period } => write!(f, "quiddity is not {period}-periodic"),
            Error::OddPolygon { n } => write!(f, "polygon has an odd number of vertices ({n})"),
            Error::Unsupported(why) => write!(f, "unsupported: {why}"),
            Error::Overflow => write!(f, "word entry overflow"),
            Error::OracleMismatch { n } => {
                write!(f, "brute-force and generative enumeration disagree at n = {n}")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}
