use alloc::boxed::Box;
use alloc::string::String;
use core::fmt;

use crate::engine::{IntegralKey, Kind};
use crate::multiindex::MultiIndex;
use crate::Rational;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Clone, Debug, PartialEq)]
pub enum Error {
    /// A recursion or operation was called outside its stated range.
    InvalidArgument(String),
    /// Malformed index text.
    Parse(String),
    /// `2^{|i|+1}` times the value is not an integer.
    NonIntegral { key: IntegralKey, value: Rational },
    /// An extracted binomial polynomial exceeds the proven degree bound.
    DegreeBound { kind: Kind, index: MultiIndex, degree: usize, bound: usize },
    /// A memo entry would be overwritten with a different value.
    MemoConflict { key: IntegralKey, stored: Box<Rational>, incoming: Box<Rational> },
    /// Truncated series with different slot counts.
    SlotMismatch { left: usize, right: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::NonIntegral { key, value } => {
                write!(f, "integrality violated at {key}: value {value} times 2^(|i|+1) is not an integer")
            }
            Error::DegreeBound { kind, index, degree, bound } => {
                write!(f, "polynomial for {kind}[{index}] has degree {degree} above the bound {bound}")
            }
            Error::MemoConflict { key, stored, incoming } => {
                write!(f, "conflicting value for {key}: stored {stored}, incoming {incoming}")
            }
            Error::SlotMismatch { left, right } => {
                write!(f, "series slot counts differ: {left} vs {right}")
            }
        }
    }
}

impl core::error::Error for Error {}
