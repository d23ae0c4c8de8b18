//! Radix-aligned digit grouping of the radicand.
//!
//! For an r-th root the radicand is split into groups of r digits anchored
//! at the radix point: the integer part is grouped from the right (so the
//! leftmost group may be short), the fraction part from the left (padded
//! with zeros on the right). One group is consumed per output digit, and
//! once the input is exhausted the stream hands out zero groups forever.
//! This is what makes the digit sequence identical for `2.3456`, `234.56`
//! and `23456` at degree 2.

use std::collections::VecDeque;

use crate::bignat::BigNat;
use crate::{Error, MAX_DEGREE};

/// The radicand, decomposed into degree-sized decimal digit groups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupStream {
    degree: u32,
    int_groups: Vec<BigNat>,
    frac_groups: Vec<BigNat>,
}

impl GroupStream {
    /// Parse a decimal literal (`digits [ '.' digits ]`) into groups.
    ///
    /// The integer part is normalized first: leading zeros drop, and an
    /// empty or all-zero integer part becomes the single group `0`, so the
    /// root of an input below one starts with a zero digit like any other.
    pub fn parse(literal: &str, degree: u32) -> Result<Self, Error> {
        check_degree(degree)?;
        if literal.starts_with('-') {
            return Err(Error::NegativeInput);
        }
        if literal.is_empty() {
            return Err(Error::EmptyLiteral);
        }
        let (int_part, frac_part) = match literal.split_once('.') {
            Some((i, f)) => (i, f),
            None => (literal, ""),
        };
        let all_digits =
            int_part.bytes().all(|b| b.is_ascii_digit()) && frac_part.bytes().all(|b| b.is_ascii_digit());
        if !all_digits || frac_part.contains('.') || int_part.len() + frac_part.len() == 0 {
            return Err(Error::MalformedLiteral(literal.to_string()));
        }

        let r = degree as usize;
        let int_digits = int_part.trim_start_matches('0');
        let mut int_groups = Vec::new();
        if int_digits.is_empty() {
            int_groups.push(BigNat::zero());
        } else {
            let first = int_digits.len() % r;
            let mut pos = 0;
            if first > 0 {
                int_groups.push(BigNat::from_decimal(&int_digits[..first])?);
                pos = first;
            }
            while pos < int_digits.len() {
                int_groups.push(BigNat::from_decimal(&int_digits[pos..pos + r])?);
                pos += r;
            }
        }

        let mut frac_groups = Vec::new();
        let mut pos = 0;
        while pos < frac_part.len() {
            let end = (pos + r).min(frac_part.len());
            let mut chunk = frac_part[pos..end].to_string();
            while chunk.len() < r {
                chunk.push('0');
            }
            frac_groups.push(BigNat::from_decimal(&chunk)?);
            pos = end;
        }

        Ok(GroupStream { degree, int_groups, frac_groups })
    }

    /// Group an integer radicand — handy in tests and for oracle alignment.
    pub fn from_integer(m: &BigNat, degree: u32) -> Result<Self, Error> {
        Self::parse(&m.to_decimal(), degree)
    }

    pub fn from_u64(m: u64, degree: u32) -> Result<Self, Error> {
        Self::from_integer(&BigNat::from_u64(m), degree)
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Number of integer groups; equals the number of digits the root has
    /// before the radix point.
    pub fn int_group_count(&self) -> usize {
        self.int_groups.len()
    }

    pub fn int_groups(&self) -> &[BigNat] {
        &self.int_groups
    }

    pub fn frac_groups(&self) -> &[BigNat] {
        &self.frac_groups
    }

    /// All groups in consumption order, then zeros forever.
    pub fn cursor(&self) -> GroupCursor {
        GroupCursor {
            queue: self.int_groups.iter().chain(self.frac_groups.iter()).cloned().collect(),
        }
    }
}

/// Owned walk over a [`GroupStream`], zero-extended past the input.
#[derive(Clone, Debug)]
pub struct GroupCursor {
    queue: VecDeque<BigNat>,
}

impl GroupCursor {
    pub fn next_group(&mut self) -> BigNat {
        self.queue.pop_front().unwrap_or_default()
    }

    /// Groups remaining from the original input (the stream itself never
    /// runs out).
    pub fn remaining(&self) -> usize {
        self.queue.len()
    }
}

fn check_degree(degree: u32) -> Result<(), Error> {
    if (2..=MAX_DEGREE).contains(&degree) {
        Ok(())
    } else {
        Err(Error::DegreeOutOfRange(degree))
    }
}

/// Lay out extracted digits around the radix point: the first
/// `int_group_count` digits are the integer part, the rest follow a `.`.
/// Nothing is rounded and leading zeros are kept, so the string is always a
/// prefix of any longer run's string.
pub fn place_radix(digits: &[u8], int_group_count: usize) -> String {
    let mut s = String::with_capacity(digits.len() + 1);
    for (i, d) in digits.iter().enumerate() {
        if i == int_group_count {
            s.push('.');
        }
        s.push((b'0' + d) as char);
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn nats(vals: &[u64]) -> Vec<BigNat> {
        vals.iter().map(|&v| BigNat::from_u64(v)).collect()
    }

    #[test]
    fn grouping_anchors_at_the_radix_point() {
        let g = GroupStream::parse("23456", 2).unwrap();
        assert_eq!(g.int_groups(), nats(&[2, 34, 56]).as_slice());
        assert_eq!(g.int_group_count(), 3);
        assert!(g.frac_groups().is_empty());

        let g = GroupStream::parse("2.3456", 2).unwrap();
        assert_eq!(g.int_groups(), nats(&[2]).as_slice());
        assert_eq!(g.frac_groups(), nats(&[34, 56]).as_slice());
        assert_eq!(g.int_group_count(), 1);

        let g = GroupStream::parse("7", 5).unwrap();
        assert_eq!(g.int_groups(), nats(&[7]).as_slice());
    }

    #[test]
    fn inputs_below_one_get_a_zero_integer_group() {
        let g = GroupStream::parse("0.07", 2).unwrap();
        assert_eq!(g.int_groups(), nats(&[0]).as_slice());
        assert_eq!(g.frac_groups(), nats(&[7]).as_slice());
        assert_eq!(g.int_group_count(), 1);

        let g = GroupStream::parse(".5", 2).unwrap();
        assert_eq!(g.int_groups(), nats(&[0]).as_slice());
        assert_eq!(g.frac_groups(), nats(&[50]).as_slice());
    }

    #[test]
    fn fraction_groups_pad_right() {
        let g = GroupStream::parse("2.340", 2).unwrap();
        assert_eq!(g.frac_groups(), nats(&[34, 0]).as_slice());
        let g = GroupStream::parse("1.2", 3).unwrap();
        assert_eq!(g.frac_groups(), nats(&[200]).as_slice());
    }

    #[test]
    fn malformed_literals_rejected() {
        assert_eq!(GroupStream::parse("-5", 2), Err(Error::NegativeInput));
        assert_eq!(GroupStream::parse("", 2), Err(Error::EmptyLiteral));
        assert!(matches!(GroupStream::parse("1.2.3", 2), Err(Error::MalformedLiteral(_))));
        assert!(matches!(GroupStream::parse("12x", 2), Err(Error::MalformedLiteral(_))));
        assert!(matches!(GroupStream::parse(".", 2), Err(Error::MalformedLiteral(_))));
        assert_eq!(GroupStream::parse("7", 1), Err(Error::DegreeOutOfRange(1)));
        assert_eq!(GroupStream::parse("7", 65), Err(Error::DegreeOutOfRange(65)));
    }

    #[test]
    fn cursor_zero_extends() {
        let g = GroupStream::parse("7", 3).unwrap();
        let mut c = g.cursor();
        assert_eq!(c.next_group(), BigNat::from_u64(7));
        assert_eq!(c.next_group(), BigNat::zero());
        assert_eq!(c.next_group(), BigNat::zero());
    }

    #[test]
    fn place_radix_examples() {
        assert_eq!(place_radix(&[1, 7, 3, 2, 0, 5], 1), "1.73205");
        assert_eq!(place_radix(&[1, 5, 3, 1, 5], 3), "153.15");
        assert_eq!(place_radix(&[0, 2, 6, 4, 5], 1), "0.2645");
        assert_eq!(place_radix(&[1, 5], 3), "15");
        assert_eq!(place_radix(&[2, 0, 0], 3), "200");
    }

    proptest! {
        /// Regrouping the groups reproduces the input digits up to
        /// leading/trailing zero padding.
        #[test]
        fn groups_reconstruct_the_literal(
            int_part in "[0-9]{0,12}",
            frac_part in "[0-9]{0,12}",
            degree in 2u32..8,
        ) {
            prop_assume!(!int_part.is_empty() || !frac_part.is_empty());
            let literal = if frac_part.is_empty() {
                int_part.clone()
            } else {
                format!("{int_part}.{frac_part}")
            };
            let g = GroupStream::parse(&literal, degree).unwrap();
            let r = degree as usize;

            for part in [g.int_groups(), g.frac_groups()] {
                for grp in part {
                    prop_assert!(grp.decimal_len() <= r);
                }
            }

            // integer part: concatenating right-aligned groups == normalized digits
            let mut rebuilt = String::new();
            for (i, grp) in g.int_groups().iter().enumerate() {
                let s = grp.to_decimal();
                if i == 0 {
                    rebuilt.push_str(&s);
                } else {
                    rebuilt.push_str(&"0".repeat(r - s.len()));
                    rebuilt.push_str(&s);
                }
            }
            let normalized = {
                let t = int_part.trim_start_matches('0');
                if t.is_empty() { "0" } else { t }
            };
            let rebuilt_trim = rebuilt.trim_start_matches('0');
            let rebuilt_norm = if rebuilt_trim.is_empty() { "0" } else { rebuilt_trim };
            prop_assert_eq!(rebuilt_norm, normalized);

            // fraction part: groups concatenate to the digits padded to a
            // multiple of the degree
            let mut rebuilt_frac = String::new();
            for grp in g.frac_groups() {
                let s = grp.to_decimal();
                rebuilt_frac.push_str(&"0".repeat(r - s.len()));
                rebuilt_frac.push_str(&s);
            }
            let mut padded = frac_part.clone();
            while padded.len() % r != 0 {
                padded.push('0');
            }
            prop_assert_eq!(rebuilt_frac, padded);
        }

        /// A shorter run's radix string prefixes a longer run's.
        #[test]
        fn radix_string_is_prefix_monotone(
            digits in proptest::collection::vec(0u8..10, 1..30),
            g in 1usize..5,
            cut in 0usize..30,
        ) {
            let cut = cut.min(digits.len());
            let full = place_radix(&digits, g);
            let short = place_radix(&digits[..cut], g);
            prop_assert!(full.starts_with(&short));
        }
    }
}
