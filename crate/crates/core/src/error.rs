use std::fmt;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A null-sum query exceeded the decision bound of a presented pasture.
    UndecidedAtBound { len: usize, bound: usize },
    /// An enumeration would exceed its hard candidate cap.
    ResourceCap { needed: u128, cap: u128 },
    /// Unit arithmetic was requested on the trivial (collapsed) pasture.
    CollapsedPasture,
    /// A basis family violates the exchange axiom where a matroid is required.
    NotAMatroid(String),
    /// GF(q) was requested for an unsupported q.
    UnsupportedField(u64),
    /// An operation mixed values from different pastures.
    PastureMismatch,
    /// An operation is not defined for the given pasture kind.
    Unsupported(String),
    /// Malformed textual input (element grammar, names, JSON adjacent).
    Parse(String),
    /// A precondition on an operation's arguments failed.
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::UndecidedAtBound { len, bound } => {
                write!(f, "null-sum of length {len} is undecided at bound {bound}")
            }
            Error::ResourceCap { needed, cap } => {
                write!(f, "enumeration needs {needed} candidates, cap is {cap}")
            }
            Error::CollapsedPasture => write!(f, "unit operation on the collapsed pasture {{0}}"),
            Error::NotAMatroid(msg) => write!(f, "not a matroid: {msg}"),
            Error::UnsupportedField(q) => write!(f, "GF({q}) is not supported"),
            Error::PastureMismatch => write!(f, "pasture mismatch"),
            Error::Unsupported(msg) => write!(f, "unsupported: {msg}"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::Invalid(msg) => write!(f, "invalid input: {msg}"),
        }
    }
}

impl std::error::Error for Error {}
