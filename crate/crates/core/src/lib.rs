//! Digit-at-a-time extraction of r-th roots.
//!
//! The machines in this crate emit the decimal digits of `M^(1/r)` one at a
//! time, left to right, never revising an emitted digit. Their inner loops
//! use nothing but arbitrary-precision addition, subtraction, comparison and
//! shifts by powers of ten: each digit is the number of times a subtrahend
//! could be taken out of the running remainder before it went negative.
//!
//! - [`sqrt`] — square roots, as the classic pair machine `⟨P, Q⟩` and as a
//!   plain subtractive loop over successive odd numbers.
//! - [`cbrt`] — cube roots, as the addition-only quintuple machine
//!   `⟨M, D, R, S, W⟩` and as a subtractive loop with a difference table.
//! - [`metaroot`] — any degree `r >= 2`, driven by a forward-difference
//!   table of `f(k) = (k+1)^r - k^r`, plus an experimental floating-point
//!   mode for non-integer degrees.
//! - [`bignat`] — the decimal big integer the machines run on.
//! - [`oracle`] — an independent floor-root checker with its own
//!   multiplication, used as ground truth in tests.
//! - [`groups`] — radix-aligned digit grouping of the input and radix-point
//!   placement in the output.

pub mod bignat;
pub mod cbrt;
mod error;
pub mod groups;
pub mod metaroot;
pub mod oracle;
pub mod sqrt;

pub use bignat::BigNat;
pub use error::Error;
pub use groups::{place_radix, GroupStream};

/// Largest supported integer degree. Binomial rows and difference tables
/// grow linearly with the degree; the machines are valid beyond this but
/// the bound keeps state sizes predictable.
pub const MAX_DEGREE: u32 = 64;

/// The two transitions every digit machine is built from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rule {
    /// Subtract the current subtrahend from the remainder and count.
    A,
    /// Rescale the state, consume the next input group, emit the count.
    B,
}

impl std::fmt::Display for Rule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Rule::A => f.write_str("A"),
            Rule::B => f.write_str("B"),
        }
    }
}

/// Outcome of driving a machine one transition forward.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Step {
    /// Rule A fired.
    A,
    /// Rule B fired and emitted the next digit.
    B { digit: u8 },
}

impl Step {
    pub fn rule(&self) -> Rule {
        match self {
            Step::A => Rule::A,
            Step::B { .. } => Rule::B,
        }
    }

    pub fn digit(&self) -> Option<u8> {
        match self {
            Step::A => None,
            Step::B { digit } => Some(*digit),
        }
    }
}
