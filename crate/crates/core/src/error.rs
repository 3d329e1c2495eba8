//! Error type shared by all modules.

use alloc::string::String;
use core::fmt;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;

/// Everything that can go wrong while building or querying the structures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The Cartan matrix violates a shape or entry constraint.
    InvalidCartan(String),
    /// Root closure exceeded the finite-type bound.
    InfiniteType { bound: usize },
    /// A type name did not parse as `[A-G][0-9]+` with the classical rank
    /// constraints.
    UnknownTypeName(String),
    /// Two values built over different root systems were combined.
    MismatchedSystems,
    /// The three indices do not form roots summing to zero.
    NotTitsTriple,
    /// `n_ordered` was called on a pair that is not an ordered triple with
    /// positive first root.
    NotOrdered,
    /// The matrix oracle does not cover the requested type or rank.
    UnsupportedFrame(String),
    /// `exp` was asked for a matrix that is not nilpotent.
    NonNilpotent,
    /// An internal invariant failed (e.g. a chain replay left a root space).
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidCartan(msg) => write!(f, "invalid Cartan matrix: {msg}"),
            Error::InfiniteType { bound } => {
                write!(f, "not of finite type: root closure exceeded {bound} positive roots")
            }
            Error::UnknownTypeName(name) => write!(f, "unknown type name: {name:?}"),
            Error::MismatchedSystems => write!(f, "values belong to different root systems"),
            Error::NotTitsTriple => write!(f, "indices do not form a Tits triple"),
            Error::NotOrdered => write!(f, "pair is not an ordered triple with positive first root"),
            Error::UnsupportedFrame(msg) => write!(f, "unsupported matrix frame: {msg}"),
            Error::NonNilpotent => write!(f, "matrix exponential did not terminate"),
            Error::Internal(msg) => write!(f, "internal consistency error: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
