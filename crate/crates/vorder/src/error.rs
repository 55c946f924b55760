//! Error type shared across the crate.

use std::fmt;

use crate::alphabet::Symbol;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A raw symbol does not belong to the alphabet. `position` is 1-based.
    UnknownSymbol { position: usize, symbol: Symbol },
    /// The same symbol was listed twice while building an alphabet.
    DuplicateSymbol { symbol: Symbol },
    /// A rank has no symbol in the alphabet it is rendered against.
    UnknownRank { rank: u32 },
    /// The operation requires a nonempty string.
    EmptyString,
    /// A suffix array does not cover the string it is applied to.
    LengthMismatch { expected: usize, found: usize },
    /// The suffix arrays passed to a merge do not cover adjacent segments of
    /// the string, or are not both lex-extension arrays.
    SegmentMismatch { detail: String },
    /// A factor range `i..=j` is out of bounds for a factorization of `count`
    /// factors (indices are 1-based).
    FactorRange { i: usize, j: usize, count: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::UnknownSymbol { position, symbol } => {
                write!(f, "symbol {} at position {} is not in the alphabet", symbol, position)
            }
            Error::DuplicateSymbol { symbol } => {
                write!(f, "duplicate symbol {} in alphabet", symbol)
            }
            Error::UnknownRank { rank } => {
                write!(f, "rank {} has no symbol in this alphabet", rank)
            }
            Error::EmptyString => write!(f, "operation requires a nonempty string"),
            Error::LengthMismatch { expected, found } => {
                write!(f, "suffix array covers {} positions, string has {}", found, expected)
            }
            Error::SegmentMismatch { detail } => write!(f, "segment mismatch: {}", detail),
            Error::FactorRange { i, j, count } => {
                write!(f, "factor range {}..={} out of bounds for {} factors", i, j, count)
            }
        }
    }
}

impl std::error::Error for Error {}
