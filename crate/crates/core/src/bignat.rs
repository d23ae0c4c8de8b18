//! Arbitrary-precision non-negative integers in decimal limbs.
//!
//! This is deliberately not a general bignum: the digit machines only ever
//! add, subtract, compare, shift by powers of ten and multiply by a
//! machine-word scalar, and that is the whole arithmetic surface here.
//! General multiplication lives in [`crate::oracle`], behind its own module
//! boundary, so the restricted-operation claim stays auditable.
//!
//! Limbs are base `10^9`, least significant first. A shift by `10^t` is a
//! limb shift plus at most one intra-limb split, and printing is a
//! concatenation of limb digits.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::Error;

/// Decimal digits held per limb.
pub const LIMB_DIGITS: usize = 9;

/// Limb radix. Every stored limb is `< LIMB_BASE`. Scalar products are
/// accumulated in `u128`, so `(LIMB_BASE - 1) * c + carry < LIMB_BASE * c`
/// cannot overflow for any `u64` scalar `c`.
pub const LIMB_BASE: u64 = 1_000_000_000;

/// Arbitrary-precision non-negative integer, decimal limbs, little-endian.
///
/// Canonical form: no most-significant zero limb; zero is the empty limb
/// vector. Every operation returns canonical values.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BigNat {
    limbs: Vec<u64>,
}

impl BigNat {
    pub fn zero() -> Self {
        BigNat { limbs: Vec::new() }
    }

    pub fn one() -> Self {
        BigNat { limbs: vec![1] }
    }

    pub fn from_u64(v: u64) -> Self {
        let mut limbs = Vec::new();
        let mut v = v;
        while v > 0 {
            limbs.push(v % LIMB_BASE);
            v /= LIMB_BASE;
        }
        BigNat { limbs }
    }

    pub fn is_zero(&self) -> bool {
        self.limbs.is_empty()
    }

    /// Least significant decimal digit (0 for zero).
    pub fn last_digit(&self) -> u8 {
        match self.limbs.first() {
            Some(l) => (l % 10) as u8,
            None => 0,
        }
    }

    /// Number of decimal digits ("0" counts as one).
    pub fn decimal_len(&self) -> usize {
        match self.limbs.last() {
            None => 1,
            Some(&top) => {
                let mut digits = 1;
                let mut t = top / 10;
                while t > 0 {
                    digits += 1;
                    t /= 10;
                }
                (self.limbs.len() - 1) * LIMB_DIGITS + digits
            }
        }
    }

    pub(crate) fn limbs(&self) -> &[u64] {
        &self.limbs
    }

    /// Build from raw limbs, trimming to canonical form.
    pub(crate) fn from_limbs(mut limbs: Vec<u64>) -> Self {
        while limbs.last() == Some(&0) {
            limbs.pop();
        }
        debug_assert!(limbs.iter().all(|&l| l < LIMB_BASE));
        BigNat { limbs }
    }

    pub fn add(&self, other: &BigNat) -> BigNat {
        let (long, short) = if self.limbs.len() >= other.limbs.len() {
            (&self.limbs, &other.limbs)
        } else {
            (&other.limbs, &self.limbs)
        };
        let mut out = Vec::with_capacity(long.len() + 1);
        let mut carry = 0u64;
        for i in 0..long.len() {
            let mut sum = long[i] + carry;
            if i < short.len() {
                sum += short[i];
            }
            carry = (sum >= LIMB_BASE) as u64;
            out.push(sum - carry * LIMB_BASE);
        }
        if carry > 0 {
            out.push(carry);
        }
        BigNat { limbs: out }
    }

    pub fn add_small(&self, c: u64) -> BigNat {
        self.add(&BigNat::from_u64(c))
    }

    /// `self - other`, or [`Error::Underflow`] when `self < other`.
    ///
    /// The machines never reach the error path: their rules branch on
    /// [`cmp`](Self::cmp) first and only subtract under a guard.
    pub fn sub(&self, other: &BigNat) -> Result<BigNat, Error> {
        if self.cmp(other) == Ordering::Less {
            return Err(Error::Underflow);
        }
        let mut out = Vec::with_capacity(self.limbs.len());
        let mut borrow = 0u64;
        for i in 0..self.limbs.len() {
            let take = borrow + if i < other.limbs.len() { other.limbs[i] } else { 0 };
            if self.limbs[i] >= take {
                out.push(self.limbs[i] - take);
                borrow = 0;
            } else {
                out.push(self.limbs[i] + LIMB_BASE - take);
                borrow = 1;
            }
        }
        debug_assert_eq!(borrow, 0);
        Ok(BigNat::from_limbs(out))
    }

    /// `self - other` as an `Option`.
    pub fn checked_sub(&self, other: &BigNat) -> Option<BigNat> {
        self.sub(other).ok()
    }

    pub fn sub_small(&self, c: u64) -> Result<BigNat, Error> {
        self.sub(&BigNat::from_u64(c))
    }

    /// `self * 10^t`: whole-limb shift plus one intra-limb split.
    pub fn shl10(&self, t: usize) -> BigNat {
        if self.is_zero() {
            return BigNat::zero();
        }
        let limb_shift = t / LIMB_DIGITS;
        let digit_shift = t % LIMB_DIGITS;
        let mut limbs = vec![0u64; limb_shift];
        limbs.extend_from_slice(&self.limbs);
        let shifted = BigNat { limbs };
        if digit_shift == 0 {
            shifted
        } else {
            shifted.mul_small(10u64.pow(digit_shift as u32))
        }
    }

    /// `self * c` for a machine-word scalar.
    pub fn mul_small(&self, c: u64) -> BigNat {
        if c == 0 || self.is_zero() {
            return BigNat::zero();
        }
        let mut out = Vec::with_capacity(self.limbs.len() + 3);
        let mut carry = 0u128;
        for &limb in &self.limbs {
            let prod = limb as u128 * c as u128 + carry;
            out.push((prod % LIMB_BASE as u128) as u64);
            carry = prod / LIMB_BASE as u128;
        }
        while carry > 0 {
            out.push((carry % LIMB_BASE as u128) as u64);
            carry /= LIMB_BASE as u128;
        }
        BigNat::from_limbs(out)
    }

    /// Parse a plain digit string. Leading zeros are normalized away.
    pub fn from_decimal(s: &str) -> Result<BigNat, Error> {
        if s.is_empty() {
            return Err(Error::EmptyLiteral);
        }
        if let Some(bad) = s.chars().find(|c| !c.is_ascii_digit()) {
            return Err(Error::InvalidDigit(bad));
        }
        let digits = s.trim_start_matches('0');
        let bytes = digits.as_bytes();
        let mut limbs = Vec::with_capacity(bytes.len() / LIMB_DIGITS + 1);
        let mut i = bytes.len();
        while i > 0 {
            let start = i.saturating_sub(LIMB_DIGITS);
            let mut limb = 0u64;
            for &b in &bytes[start..i] {
                limb = limb * 10 + (b - b'0') as u64;
            }
            limbs.push(limb);
            i = start;
        }
        Ok(BigNat::from_limbs(limbs))
    }

    /// Decimal digit string, no leading zeros except `"0"`.
    pub fn to_decimal(&self) -> String {
        match self.limbs.last() {
            None => "0".to_string(),
            Some(&top) => {
                let mut s = String::with_capacity(self.limbs.len() * LIMB_DIGITS);
                s.push_str(&top.to_string());
                for limb in self.limbs.iter().rev().skip(1) {
                    s.push_str(&format!("{limb:09}"));
                }
                s
            }
        }
    }
}

/// Total order consistent with integer value: canonical form means more
/// limbs is strictly larger, ties compare limbs most significant first.
impl Ord for BigNat {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.limbs.len() != other.limbs.len() {
            return self.limbs.len().cmp(&other.limbs.len());
        }
        for (a, b) in self.limbs.iter().rev().zip(other.limbs.iter().rev()) {
            if a != b {
                return a.cmp(b);
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for BigNat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BigNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_decimal())
    }
}

impl fmt::Debug for BigNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BigNat({})", self.to_decimal())
    }
}

impl FromStr for BigNat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BigNat::from_decimal(s)
    }
}

impl From<u64> for BigNat {
    fn from(v: u64) -> Self {
        BigNat::from_u64(v)
    }
}
