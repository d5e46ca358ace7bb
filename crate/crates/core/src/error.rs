//! Error type shared across the crate.

use alloc::string::String;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two permutations of different degree were combined.
    DegreeMismatch { left: usize, right: usize },
    /// A permutation image list was not a bijection of `{0..n-1}`.
    NotABijection(String),
    /// Cycle notation failed to parse; carries the offending token.
    Parse(String),
    /// Requested degree exceeds the fixed-width point storage.
    DegreeTooLarge(usize),
    /// Group enumeration exceeded the configured cap; carries the
    /// number of elements discovered before giving up.
    EnumerationCap { cap: usize, reached: usize },
    /// Coset enumeration exceeded the point cap.
    PointCap { cap: usize },
    /// Clique search refused a graph above the vertex cap.
    CliqueCap { cap: usize, vertices: usize },
    /// A claimed subgroup is not contained in the group.
    NotASubgroup,
    /// A subgroup handed to a block quotient is not normal.
    NotNormal,
    /// Bad numeric parameter (not prime, not a divisor, out of range...).
    BadParameter(String),
    /// The action does not satisfy a structural precondition
    /// (intransitive, not Frobenius, not a p-group...).
    BadAction(String),
    /// A deterministic generator search failed; this signals a bug in
    /// the construction, not a valid outcome.
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DegreeMismatch { left, right } => {
                write!(f, "degree mismatch: {left} vs {right}")
            }
            Error::NotABijection(s) => write!(f, "not a bijection: {s}"),
            Error::Parse(s) => write!(f, "parse error: {s}"),
            Error::DegreeTooLarge(n) => write!(f, "degree {n} exceeds the 65535 cap"),
            Error::EnumerationCap { cap, reached } => {
                write!(f, "enumeration cap {cap} exceeded ({reached} elements found)")
            }
            Error::PointCap { cap } => write!(f, "coset point cap {cap} exceeded"),
            Error::CliqueCap { cap, vertices } => write!(
                f,
                "intersection graph has {vertices} vertices, above the clique cap {cap}; \
                 use subgroup-level analysis instead"
            ),
            Error::NotASubgroup => write!(f, "elements do not lie in the ambient group"),
            Error::NotNormal => write!(f, "subgroup is not normal"),
            Error::BadParameter(s) => write!(f, "bad parameter: {s}"),
            Error::BadAction(s) => write!(f, "unsuitable action: {s}"),
            Error::Internal(s) => write!(f, "internal error: {s}"),
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
