//! Square-root digit spigot, two interchangeable variants.
//!
//! The pair machine keeps `⟨P, Q⟩` with everything scaled by 5: starting
//! from `⟨5M, 5⟩`, Rule A replaces it by `⟨P - Q, Q + 10⟩` while `P >= Q`,
//! and Rule B by `⟨100P, 10Q - 45⟩` once `P < Q`. The count of A-steps
//! between B-steps is the next digit. The 5-scaling buys nothing
//! mathematically — it turns the per-step `+2` into `+10` and the rescale
//! of Q into inserting a zero before its final digit, which is what makes
//! the machine pleasant on an abacus.
//!
//! The subtractive variant is the same walk without the scaling: subtract
//! successive odd numbers `2k + 1` from the remainder, where `k` runs
//! through `10·D + 0, 10·D + 1, ...` for the digit prefix `D`.

use crate::bignat::BigNat;
use crate::groups::{GroupCursor, GroupStream};
use crate::{Error, Rule, Step};

/// State of the pair machine. `P` is five times the running remainder and
/// `Q` is `5·(2k + 1)` for the current candidate index `k`, so `P` is
/// always a multiple of 5 and `Q` always ends in 5.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairState {
    pub p: BigNat,
    pub q: BigNat,
}

impl PairState {
    /// Starting state `⟨5·g, 5⟩` for the leading digit group `g`.
    pub fn init(first_group: &BigNat) -> PairState {
        PairState { p: first_group.mul_small(5), q: BigNat::from_u64(5) }
    }

    /// Rule A: `⟨P - Q, Q + 10⟩`. Guard: `P >= Q`.
    pub fn rule_a(&self) -> Result<PairState, Error> {
        if self.p < self.q {
            return Err(Error::GuardViolation(Rule::A));
        }
        Ok(PairState {
            p: self.p.sub(&self.q).expect("guard: P >= Q"),
            q: self.q.add_small(10),
        })
    }

    /// Rule B: `⟨100P + 5·g, 10Q - 45⟩` for the next group `g` (zero once
    /// the input is exhausted). Guard: `P < Q`.
    ///
    /// The appended group is scaled by 5 like everything else in this
    /// machine, which keeps `P` at exactly five times the remainder the
    /// subtractive variant carries.
    pub fn rule_b(&self, next_group: Option<&BigNat>) -> Result<PairState, Error> {
        if self.p >= self.q {
            return Err(Error::GuardViolation(Rule::B));
        }
        let mut p = self.p.shl10(2);
        if let Some(g) = next_group {
            p = p.add(&g.mul_small(5));
        }
        let q = self.q.shl10(1).sub_small(45).expect("Q ends in 5, so 10Q >= 45");
        Ok(PairState { p, q })
    }
}

/// Drives [`PairState`] over a degree-2 group stream, counting A-steps to
/// produce digits.
#[derive(Clone, Debug)]
pub struct PairMachine {
    state: PairState,
    cursor: GroupCursor,
    a_count: u8,
}

impl PairMachine {
    pub fn new(stream: &GroupStream) -> Result<Self, Error> {
        if stream.degree() != 2 {
            return Err(Error::DegreeMismatch { expected: 2, found: stream.degree() });
        }
        let mut cursor = stream.cursor();
        let state = PairState::init(&cursor.next_group());
        Ok(PairMachine { state, cursor, a_count: 0 })
    }

    pub fn state(&self) -> &PairState {
        &self.state
    }

    /// Apply whichever rule the guard selects.
    pub fn step(&mut self) -> Step {
        if self.state.p >= self.state.q {
            self.state = self.state.rule_a().expect("guard checked");
            self.a_count += 1;
            debug_assert!(self.a_count <= 9, "valid group streams emit digits 0..=9");
            Step::A
        } else {
            let digit = self.a_count;
            self.a_count = 0;
            let g = self.cursor.next_group();
            self.state = self.state.rule_b(Some(&g)).expect("guard checked");
            debug_assert_eq!(self.state.q.last_digit(), 5);
            debug_assert_eq!(self.state.p.last_digit() % 5, 0);
            Step::B { digit }
        }
    }

    /// Run to the next Rule-B firing and return the digit it emits.
    pub fn next_digit(&mut self) -> u8 {
        loop {
            if let Step::B { digit } = self.step() {
                return digit;
            }
        }
    }
}

/// State of the unscaled subtractive walk. `odd_term` is the next
/// subtrahend `2·(10·prefix + digit_count) + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubtractiveSqrtState {
    pub remainder: BigNat,
    pub odd_term: BigNat,
    pub prefix: BigNat,
    pub digit_count: u8,
}

/// Subtractive square-root machine. The successive subtrahends differ by
/// the constant 2, so the inner loop is two additions and a compare.
#[derive(Clone, Debug)]
pub struct SubtractiveSqrt {
    state: SubtractiveSqrtState,
    cursor: GroupCursor,
}

impl SubtractiveSqrt {
    pub fn new(stream: &GroupStream) -> Result<Self, Error> {
        if stream.degree() != 2 {
            return Err(Error::DegreeMismatch { expected: 2, found: stream.degree() });
        }
        let mut cursor = stream.cursor();
        let state = SubtractiveSqrtState {
            remainder: cursor.next_group(),
            odd_term: BigNat::one(),
            prefix: BigNat::zero(),
            digit_count: 0,
        };
        Ok(SubtractiveSqrt { state, cursor })
    }

    pub fn state(&self) -> &SubtractiveSqrtState {
        &self.state
    }

    /// Current candidate index `k = 10·prefix + digit_count`.
    pub fn index(&self) -> BigNat {
        self.state.prefix.mul_small(10).add_small(self.state.digit_count as u64)
    }

    pub fn step(&mut self) -> Step {
        let s = &mut self.state;
        if s.remainder >= s.odd_term {
            s.remainder = s.remainder.sub(&s.odd_term).expect("guard checked");
            s.odd_term = s.odd_term.add_small(2);
            s.digit_count += 1;
            Step::A
        } else {
            let digit = s.digit_count;
            debug_assert!(digit <= 9, "valid group streams emit digits 0..=9");
            s.prefix = s.prefix.mul_small(10).add_small(digit as u64);
            s.remainder = s.remainder.shl10(2).add(&self.cursor.next_group());
            // 2·(10·D + d) + 1 -> 2·(10·(10·D + d)) + 1 is 10·odd - 9
            s.odd_term = s.odd_term.shl10(1).sub_small(9).expect("odd term >= 1");
            s.digit_count = 0;
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

/// First `n` digits of the square root of the grouped radicand, via the
/// pair machine.
pub fn sqrt_digits_pair(stream: &GroupStream, n: usize) -> Result<Vec<u8>, Error> {
    let mut machine = PairMachine::new(stream)?;
    Ok((0..n).map(|_| machine.next_digit()).collect())
}

/// First `n` digits via the subtractive variant. Identical output to
/// [`sqrt_digits_pair`] on every input.
pub fn sqrt_digits_subtractive(stream: &GroupStream, n: usize) -> Result<Vec<u8>, Error> {
    let mut machine = SubtractiveSqrt::new(stream)?;
    Ok((0..n).map(|_| machine.next_digit()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(s: &str) -> BigNat {
        BigNat::from_decimal(s).unwrap()
    }

    fn pair(p: &str, q: &str) -> PairState {
        PairState { p: nat(p), q: nat(q) }
    }

    fn stream_u64(m: u64) -> GroupStream {
        GroupStream::from_u64(m, 2).unwrap()
    }

    #[test]
    fn init_scales_by_five() {
        assert_eq!(PairState::init(&nat("3")), pair("15", "5"));
        assert_eq!(PairState::init(&nat("0")), pair("0", "5"));
        assert_eq!(PairState::init(&nat("7")), pair("35", "5"));
    }

    #[test]
    fn rule_a_trace_steps() {
        assert_eq!(pair("15", "5").rule_a().unwrap(), pair("10", "15"));
        assert_eq!(pair("1000", "105").rule_a().unwrap(), pair("895", "115"));
        assert_eq!(pair("5500", "1705").rule_a().unwrap(), pair("3795", "1715"));
    }

    #[test]
    fn rule_a_guard() {
        assert_eq!(pair("10", "15").rule_a(), Err(Error::GuardViolation(Rule::A)));
    }

    #[test]
    fn rule_b_trace_steps() {
        assert_eq!(pair("10", "15").rule_b(None).unwrap(), pair("1000", "105"));
        assert_eq!(pair("55", "175").rule_b(None).unwrap(), pair("5500", "1705"));
        assert_eq!(pair("880", "17325").rule_b(None).unwrap(), pair("88000", "173205"));
    }

    #[test]
    fn rule_b_guard() {
        assert_eq!(pair("15", "5").rule_b(None), Err(Error::GuardViolation(Rule::B)));
    }

    #[test]
    fn rule_b_appends_scaled_group() {
        // remainder 1 with group 34 appended -> remainder 134, P = 5·134
        let s = pair("5", "15").rule_b(Some(&nat("34"))).unwrap();
        assert_eq!(s.p, nat("670"));
    }

    #[test]
    fn sqrt_of_three() {
        assert_eq!(sqrt_digits_pair(&stream_u64(3), 6).unwrap(), vec![1, 7, 3, 2, 0, 5]);
        assert_eq!(sqrt_digits_subtractive(&stream_u64(3), 6).unwrap(), vec![1, 7, 3, 2, 0, 5]);
    }

    #[test]
    fn exact_root_emits_zeros() {
        assert_eq!(sqrt_digits_pair(&stream_u64(1), 5).unwrap(), vec![1, 0, 0, 0, 0]);
        assert_eq!(sqrt_digits_pair(&stream_u64(0), 3).unwrap(), vec![0, 0, 0]);
        assert_eq!(sqrt_digits_subtractive(&stream_u64(0), 3).unwrap(), vec![0, 0, 0]);
    }

    #[test]
    fn sqrt_of_two_ten_digits() {
        assert_eq!(
            sqrt_digits_pair(&stream_u64(2), 10).unwrap(),
            vec![1, 4, 1, 4, 2, 1, 3, 5, 6, 2]
        );
    }

    #[test]
    fn subtractive_sqrt_of_seven_with_remainders() {
        let mut m = SubtractiveSqrt::new(&stream_u64(7)).unwrap();
        let mut digits = Vec::new();
        let mut rems = Vec::new();
        while digits.len() < 4 {
            let before = m.state().remainder.clone();
            if let Step::B { digit } = m.step() {
                digits.push(digit);
                rems.push(before.to_decimal());
            }
        }
        assert_eq!(digits, vec![2, 6, 4, 5]);
        assert_eq!(rems, ["3", "24", "304", "3975"]);
    }

    #[test]
    fn multi_group_input() {
        let g = GroupStream::parse("23456", 2).unwrap();
        assert_eq!(sqrt_digits_pair(&g, 5).unwrap(), vec![1, 5, 3, 1, 5]);
        assert_eq!(sqrt_digits_subtractive(&g, 5).unwrap(), vec![1, 5, 3, 1, 5]);
    }

    #[test]
    fn fractional_input() {
        let g = GroupStream::parse("0.07", 2).unwrap();
        assert_eq!(sqrt_digits_pair(&g, 5).unwrap(), vec![0, 2, 6, 4, 5]);
    }

    #[test]
    fn degree_mismatch_rejected() {
        let g = GroupStream::from_u64(7, 3).unwrap();
        assert!(matches!(
            PairMachine::new(&g),
            Err(Error::DegreeMismatch { expected: 2, found: 3 })
        ));
        assert!(SubtractiveSqrt::new(&g).is_err());
    }

    #[test]
    fn pair_invariants_over_full_runs() {
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};

        let mut rng = StdRng::seed_from_u64(0x9a12);
        for _ in 0..25 {
            let m: u64 = rng.gen_range(0..1_000_000_000_000);
            let mut machine = PairMachine::new(&stream_u64(m)).unwrap();
            let mut digits = 0;
            while digits < 30 {
                if let Step::B { .. } = machine.step() {
                    digits += 1;
                }
                assert_eq!(machine.state().q.last_digit(), 5, "Q must end in 5 (M={m})");
                assert_eq!(machine.state().p.last_digit() % 5, 0, "P must be divisible by 5 (M={m})");
            }
        }
    }
}
