//! General r-th-root digit spigot.
//!
//! Each digit is found by subtracting `f(k) = (k+1)^r - k^r` for ascending
//! `k` until the remainder would go negative; the count of subtractions is
//! the digit, and the telescoped sum of the subtrahends is exactly
//! `(10D + d)^r - (10D)^r`, the slice of the radicand the digit accounts
//! for. A forward-difference table of `f` makes the inner loop pure
//! addition: `f` has degree `r - 1`, so its `(r-1)`-th difference is the
//! constant `r!` and every deeper entry advances by a single add.
//!
//! At a group boundary the candidate index jumps `k -> 10k`, and the table
//! is rebuilt from direct evaluations of `f` at `10k .. 10k + r - 1`. The
//! evaluations use the checker's multiplier through [`eval_f`]; that is the
//! one place big-by-big products enter, once per emitted digit, never in
//! the subtraction loop. Closed-form rescale identities (like the cube
//! machine's `100W - 270R - 99`) exist per degree but not uniformly in
//! `r`, so rebuilding is the general-degree answer.
//!
//! A floating-point mode extends the same walk to non-integer degrees
//! (`f(x) = (x+1)^α - x^α`); it is honest about being approximate and
//! stops emitting digits once the working magnitudes eat into the `f64`
//! significand.

use crate::bignat::BigNat;
use crate::groups::{GroupCursor, GroupStream};
use crate::{oracle, Error, Step, MAX_DEGREE};

/// Binomial coefficients `C(r,1) ..= C(r,r)`: the coefficients of
/// `f(k) = (k+1)^r - k^r` by descending power of `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinomialRow {
    r: u32,
    coeffs: Vec<BigNat>,
}

impl BinomialRow {
    /// Build by Pascal's triangle — additions only, exact.
    pub fn new(r: u32) -> Result<Self, Error> {
        if !(2..=MAX_DEGREE).contains(&r) {
            return Err(Error::DegreeOutOfRange(r));
        }
        // row[j] = C(n, j) for the current n, full row including C(n, 0)
        let mut row = vec![BigNat::one()];
        for _ in 0..r {
            let mut next = Vec::with_capacity(row.len() + 1);
            next.push(BigNat::one());
            for w in row.windows(2) {
                next.push(w[0].add(&w[1]));
            }
            next.push(BigNat::one());
            row = next;
        }
        Ok(BinomialRow { r, coeffs: row.into_iter().skip(1).collect() })
    }

    pub fn degree(&self) -> u32 {
        self.r
    }

    /// `C(r, k)` for `k` in `1..=r`.
    pub fn coeffs(&self) -> &[BigNat] {
        &self.coeffs
    }

    /// `f(k) = (k+1)^r - k^r`, by Horner over this row. The big-by-big
    /// products go through the oracle's multiplier; nothing here is used
    /// inside the digit loop.
    pub fn eval(&self, k: &BigNat) -> BigNat {
        let mut acc = self.coeffs[0].clone();
        for c in &self.coeffs[1..] {
            acc = oracle::mul(&acc, k).add(c);
        }
        acc
    }
}

/// `binomial_row(r)` — see [`BinomialRow::new`].
pub fn binomial_row(r: u32) -> Result<BinomialRow, Error> {
    BinomialRow::new(r)
}

/// `f(k) = (k+1)^r - k^r`, exactly.
pub fn eval_f(r: u32, k: &BigNat) -> BigNat {
    BinomialRow::new(r).expect("degree validated by caller").eval(k)
}

/// Forward differences of `f` at `k0`: `[f(k0), Δf(k0), ..., Δ^(r-1)f(k0)]`,
/// from direct evaluations at `k0 ..= k0 + r - 1`.
pub fn build_diff_table(row: &BinomialRow, k0: &BigNat) -> Vec<BigNat> {
    let r = row.degree() as usize;
    let mut table: Vec<BigNat> = (0..r as u64).map(|i| row.eval(&k0.add_small(i))).collect();
    for level in 1..r {
        for i in (level..r).rev() {
            table[i] = table[i].sub(&table[i - 1]).expect("f is increasing and convex");
        }
    }
    debug_assert_eq!(*table.last().unwrap(), factorial(row.degree()));
    table
}

/// Advance a difference table from `k` to `k + 1`: `t[i] += t[i+1]`,
/// ascending, so every addend is still the pre-step value.
pub fn step_diff_table(table: &mut [BigNat]) {
    for i in 0..table.len().saturating_sub(1) {
        table[i] = table[i].add(&table[i + 1]);
    }
}

fn factorial(r: u32) -> BigNat {
    let mut acc = BigNat::one();
    for i in 2..=r as u64 {
        acc = acc.mul_small(i);
    }
    acc
}

/// Full state of the general-degree machine.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetaState {
    pub r: u32,
    pub remainder: BigNat,
    /// Candidate index `10·D + group_digit` for the digit prefix `D`.
    pub k: BigNat,
    /// `[f(k), Δf(k), ..., Δ^(r-1)f(k)]`; the last entry stays `r!`.
    pub diff_table: Vec<BigNat>,
    pub group_digit: u8,
}

/// Degree-r digit machine over a degree-r group stream.
#[derive(Clone, Debug)]
pub struct MetaMachine {
    row: BinomialRow,
    state: MetaState,
    cursor: GroupCursor,
}

impl MetaMachine {
    pub fn new(r: u32, stream: &GroupStream) -> Result<Self, Error> {
        let row = BinomialRow::new(r)?;
        if stream.degree() != r {
            return Err(Error::DegreeMismatch { expected: r, found: stream.degree() });
        }
        let mut cursor = stream.cursor();
        let state = MetaState {
            r,
            remainder: cursor.next_group(),
            k: BigNat::zero(),
            diff_table: build_diff_table(&row, &BigNat::zero()),
            group_digit: 0,
        };
        Ok(MetaMachine { row, state, cursor })
    }

    pub fn state(&self) -> &MetaState {
        &self.state
    }

    pub fn step(&mut self) -> Step {
        let s = &mut self.state;
        if s.remainder >= s.diff_table[0] {
            s.remainder = s.remainder.sub(&s.diff_table[0]).expect("guard checked");
            step_diff_table(&mut s.diff_table);
            s.k = s.k.add_small(1);
            s.group_digit += 1;
            Step::A
        } else {
            let digit = s.group_digit;
            debug_assert!(digit <= 9, "valid group streams emit digits 0..=9");
            s.k = s.k.shl10(1);
            s.remainder = s.remainder.shl10(s.r as usize).add(&self.cursor.next_group());
            s.diff_table = build_diff_table(&self.row, &s.k);
            s.group_digit = 0;
            Step::B { digit }
        }
    }

    pub fn next_digit(&mut self) -> u8 {
        loop {
            if let Step::B { digit } = self.step() {
                return digit;
            }
        }
    }
}

/// First `n` digits of the r-th root of the grouped radicand.
pub fn root_digits(r: u32, stream: &GroupStream, n: usize) -> Result<Vec<u8>, Error> {
    let mut machine = MetaMachine::new(r, stream)?;
    Ok((0..n).map(|_| machine.next_digit()).collect())
}

// ---------------------------------------------------------------------------
// Float mode: non-integer degrees, explicitly precision-limited.
// ---------------------------------------------------------------------------

/// Decimal digits an `f64` significand is good for.
const F64_DECIMAL_DIGITS: f64 = 15.95;
/// Digits of headroom we insist on keeping between the working magnitude
/// and the significand limit; past that, digit decisions are no longer
/// trustworthy and the machine stops.
const FLOAT_HEADROOM_DIGITS: f64 = 3.0;

/// Largest working magnitude the float machine will accept.
fn float_magnitude_cap() -> f64 {
    10f64.powf(F64_DECIMAL_DIGITS - FLOAT_HEADROOM_DIGITS)
}

/// Non-integer-degree digit machine over `f64`.
///
/// Same subtract-and-count walk with `f(x) = (x+1)^α - x^α`; each group
/// boundary multiplies the remainder by `10^α`. The magnitudes grow by
/// that factor per digit, so only a handful of digits fit inside an `f64`
/// — the machine refuses to emit past its reliability cap rather than
/// produce garbage.
#[derive(Clone, Debug)]
pub struct FloatMachine {
    alpha: f64,
    remainder: f64,
    k: u64,
    group_digit: u8,
    exhausted: bool,
}

impl FloatMachine {
    /// `m` is normalized into `[0, 10^α)` by `10^α`-sized steps first;
    /// the number of steps fixes how many output digits precede the radix
    /// point, mirroring integer-group counting.
    pub fn new(alpha: f64, m: f64) -> Result<(Self, usize), Error> {
        if !alpha.is_finite() || alpha <= 1.0 {
            return Err(Error::FloatDomain(format!("degree must be a finite value > 1, got {alpha}")));
        }
        if !m.is_finite() || m <= 0.0 {
            return Err(Error::FloatDomain(format!("radicand must be a finite value > 0, got {m}")));
        }
        let scale = 10f64.powf(alpha);
        let mut m = m;
        let mut int_digits = 1;
        while m >= scale {
            m /= scale;
            int_digits += 1;
        }
        let machine = FloatMachine { alpha, remainder: m, k: 0, group_digit: 0, exhausted: false };
        Ok((machine, int_digits))
    }

    pub fn remainder(&self) -> f64 {
        self.remainder
    }

    pub fn index(&self) -> u64 {
        self.k
    }

    /// Next subtrahend `f(k) = (k+1)^α - k^α`.
    pub fn subtrahend(&self) -> f64 {
        let k = self.k as f64;
        (k + 1.0).powf(self.alpha) - k.powf(self.alpha)
    }

    /// `None` once the reliability cap is reached.
    pub fn step(&mut self) -> Option<Step> {
        if self.exhausted {
            return None;
        }
        let f = self.subtrahend();
        if self.remainder >= f {
            self.remainder -= f;
            self.k += 1;
            self.group_digit += 1;
            Some(Step::A)
        } else {
            let digit = self.group_digit;
            self.group_digit = 0;
            self.k *= 10;
            self.remainder *= 10f64.powf(self.alpha);
            if self.remainder > float_magnitude_cap() {
                self.exhausted = true;
            }
            Some(Step::B { digit })
        }
    }

    pub fn next_digit(&mut self) -> Option<u8> {
        loop {
            match self.step()? {
                Step::B { digit } => return Some(digit),
                Step::A => {}
            }
        }
    }
}

/// Result of a float-mode run. `digits.len() < requested` means the
/// machine hit its reliability cap; what was emitted is still trustworthy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FloatOutcome {
    pub digits: Vec<u8>,
    pub requested: usize,
    /// Output digits before the radix point.
    pub int_digits: usize,
}

impl FloatOutcome {
    pub fn exhausted(&self) -> bool {
        self.digits.len() < self.requested
    }
}

/// Digits of `m^(1/alpha)` for real `alpha > 1`, floating point, capped at
/// the reliable-precision limit.
pub fn root_digits_float(alpha: f64, m: f64, n: usize) -> Result<FloatOutcome, Error> {
    let (mut machine, int_digits) = FloatMachine::new(alpha, m)?;
    let mut digits = Vec::with_capacity(n);
    while digits.len() < n {
        match machine.next_digit() {
            Some(d) => digits.push(d),
            None => break,
        }
    }
    Ok(FloatOutcome { digits, requested: n, int_digits })
}
