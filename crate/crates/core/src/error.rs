use std::fmt;

use crate::Rule;

/// Errors surfaced by the library.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Subtraction would go below zero.
    Underflow,
    /// A decimal literal contained something other than digits.
    InvalidDigit(char),
    /// An empty string where at least one digit was required.
    EmptyLiteral,
    /// Negative radicands have no real-root semantics here.
    NegativeInput,
    /// The input literal is not `digits [ '.' digits ]`.
    MalformedLiteral(String),
    /// A rule was applied to a state that fails its guard.
    GuardViolation(Rule),
    /// Degree outside `2..=MAX_DEGREE`.
    DegreeOutOfRange(u32),
    /// A machine was fed a group stream built for a different degree.
    DegreeMismatch { expected: u32, found: u32 },
    /// Float-mode domain error (degree or radicand out of range).
    FloatDomain(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Underflow => write!(f, "subtraction underflow: minuend < subtrahend"),
            Error::InvalidDigit(c) => write!(f, "invalid decimal digit {c:?}"),
            Error::EmptyLiteral => write!(f, "empty literal: at least one digit required"),
            Error::NegativeInput => {
                write!(f, "negative input rejected: no real-root semantics for negative radicands")
            }
            Error::MalformedLiteral(s) => write!(f, "malformed decimal literal {s:?}"),
            Error::GuardViolation(rule) => {
                write!(f, "rule {rule} applied to a state that fails its guard")
            }
            Error::DegreeOutOfRange(r) => {
                write!(f, "degree {r} outside supported range 2..={}", crate::MAX_DEGREE)
            }
            Error::DegreeMismatch { expected, found } => {
                write!(f, "group stream has degree {found}, machine needs {expected}")
            }
            Error::FloatDomain(msg) => write!(f, "float mode: {msg}"),
        }
    }
}

impl std::error::Error for Error {}
