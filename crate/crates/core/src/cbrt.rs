//! Cube-root digit spigot, two variants.
//!
//! The quintuple machine `⟨M, D, R, S, W⟩` keeps the remainder `M`, the
//! A-step count `D`, the candidate index `R`, and the difference pair
//! `S = 6R`, `W = f(R) = 3R² + 3R + 1`. Rule A is addition-only:
//! subtract `W`, bump everything by its difference. Rule B emits `D` and
//! rescales in place, using `100W - 270R - 99 = f(10R)` so `W` never has
//! to be recomputed from scratch.
//!
//! The subtractive variant is the degree-3 instance of the general
//! difference-table engine in [`crate::metaroot`]: same subtrahends
//! `f(k)`, advanced by a two-level difference table in the loop and
//! rebuilt by direct evaluation at each group boundary. Running both
//! variants against each other checks the closed-form rescale against the
//! rebuild path.

use crate::bignat::BigNat;
use crate::groups::{GroupCursor, GroupStream};
use crate::metaroot::{build_diff_table, step_diff_table, BinomialRow};
use crate::{Error, Rule, Step};

#[cfg(feature = "direct-subtrahend")]
use crate::metaroot::eval_f;

/// State of the optimized cube-root machine.
///
/// Reachable states always satisfy `W == 3R² + 3R + 1` and `S == 6R`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuintState {
    /// Current remainder.
    pub m: BigNat,
    /// Rule-A count in the current group; the next digit.
    pub d: u8,
    /// Candidate index `10·D_n + d`.
    pub r: BigNat,
    /// First-difference accumulator `6R`.
    pub s: BigNat,
    /// Current subtrahend `f(R)`.
    pub w: BigNat,
}

impl QuintState {
    /// `⟨g, 0, 0, 0, 1⟩` for the leading group `g`.
    pub fn init(first_group: &BigNat) -> QuintState {
        QuintState {
            m: first_group.clone(),
            d: 0,
            r: BigNat::zero(),
            s: BigNat::zero(),
            w: BigNat::one(),
        }
    }

    /// Rule A: `⟨M - W, D + 1, R + 1, S + 6, W + S + 6⟩`. Guard: `M >= W`.
    pub fn rule_a(&self) -> Result<QuintState, Error> {
        if self.m < self.w {
            return Err(Error::GuardViolation(Rule::A));
        }
        let s_next = self.s.add_small(6);
        Ok(QuintState {
            m: self.m.sub(&self.w).expect("guard: M >= W"),
            d: self.d + 1,
            r: self.r.add_small(1),
            w: self.w.add(&s_next),
            s: s_next,
        })
    }

    /// Rule B: emit `D` and rescale to
    /// `⟨1000M + g, 0, 10R, 10S, 100W - 270R - 99⟩`. Guard: `M < W`.
    ///
    /// The new `W` equals `f(10R)`: `100W` is always at least
    /// `270R + 99` because `100W = 300R² + 300R + 100`.
    pub fn rule_b(&self, next_group: Option<&BigNat>) -> Result<(QuintState, u8), Error> {
        if self.m >= self.w {
            return Err(Error::GuardViolation(Rule::B));
        }
        let mut m = self.m.shl10(3);
        if let Some(g) = next_group {
            m = m.add(g);
        }
        let w = self
            .w
            .shl10(2)
            .sub(&self.r.mul_small(270))
            .and_then(|x| x.sub_small(99))
            .expect("100W >= 270R + 99 for W = f(R)");
        let next = QuintState { m, d: 0, r: self.r.shl10(1), s: self.s.shl10(1), w };
        Ok((next, self.d))
    }
}

/// Drives [`QuintState`] over a degree-3 group stream.
#[derive(Clone, Debug)]
pub struct QuintMachine {
    state: QuintState,
    cursor: GroupCursor,
}

impl QuintMachine {
    pub fn new(stream: &GroupStream) -> Result<Self, Error> {
        if stream.degree() != 3 {
            return Err(Error::DegreeMismatch { expected: 3, found: stream.degree() });
        }
        let mut cursor = stream.cursor();
        let state = QuintState::init(&cursor.next_group());
        Ok(QuintMachine { state, cursor })
    }

    pub fn state(&self) -> &QuintState {
        &self.state
    }

    pub fn step(&mut self) -> Step {
        if self.state.m >= self.state.w {
            self.state = self.state.rule_a().expect("guard checked");
            Step::A
        } else {
            let g = self.cursor.next_group();
            let (next, digit) = self.state.rule_b(Some(&g)).expect("guard checked");
            debug_assert!(digit <= 9, "valid group streams emit digits 0..=9");
            self.state = next;
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

/// State of the subtractive cube-root walk.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubtractiveCbrtState {
    pub remainder: BigNat,
    /// Candidate index `10·prefix + digit_count`.
    pub k: BigNat,
    pub prefix: BigNat,
    pub digit_count: u8,
}

/// Subtractive cube-root machine: subtrahends `f(k) = 3k² + 3k + 1`
/// advanced by a `[f, Δf, 6]` difference table.
#[derive(Clone, Debug)]
pub struct SubtractiveCbrt {
    state: SubtractiveCbrtState,
    /// `[f(k), Δf(k), Δ²f = 6]`.
    table: Vec<BigNat>,
    row: BinomialRow,
    cursor: GroupCursor,
}

impl SubtractiveCbrt {
    pub fn new(stream: &GroupStream) -> Result<Self, Error> {
        if stream.degree() != 3 {
            return Err(Error::DegreeMismatch { expected: 3, found: stream.degree() });
        }
        let row = BinomialRow::new(3)?;
        let mut cursor = stream.cursor();
        let state = SubtractiveCbrtState {
            remainder: cursor.next_group(),
            k: BigNat::zero(),
            prefix: BigNat::zero(),
            digit_count: 0,
        };
        let table = build_diff_table(&row, &BigNat::zero());
        Ok(SubtractiveCbrt { state, table, row, cursor })
    }

    pub fn state(&self) -> &SubtractiveCbrtState {
        &self.state
    }

    /// Current subtrahend `f(k)`. The difference table carries it; the
    /// `direct-subtrahend` build recomputes it from the closed form so the
    /// two paths can be tested against each other.
    pub fn subtrahend(&self) -> BigNat {
        #[cfg(feature = "direct-subtrahend")]
        {
            eval_f(3, &self.state.k)
        }
        #[cfg(not(feature = "direct-subtrahend"))]
        {
            self.table[0].clone()
        }
    }

    pub fn step(&mut self) -> Step {
        let f = self.subtrahend();
        let s = &mut self.state;
        if s.remainder >= f {
            s.remainder = s.remainder.sub(&f).expect("guard checked");
            step_diff_table(&mut self.table);
            s.k = s.k.add_small(1);
            s.digit_count += 1;
            Step::A
        } else {
            let digit = s.digit_count;
            debug_assert!(digit <= 9, "valid group streams emit digits 0..=9");
            s.prefix = s.prefix.mul_small(10).add_small(digit as u64);
            s.k = s.prefix.mul_small(10);
            s.remainder = s.remainder.shl10(3).add(&self.cursor.next_group());
            s.digit_count = 0;
            self.table = build_diff_table(&self.row, &s.k);
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

/// First `n` digits of the cube root of the grouped radicand, via the
/// quintuple machine.
pub fn cbrt_digits_quint(stream: &GroupStream, n: usize) -> Result<Vec<u8>, Error> {
    let mut machine = QuintMachine::new(stream)?;
    Ok((0..n).map(|_| machine.next_digit()).collect())
}

/// First `n` digits via the subtractive variant. Identical output to
/// [`cbrt_digits_quint`] on every input.
pub fn cbrt_digits_subtractive(stream: &GroupStream, n: usize) -> Result<Vec<u8>, Error> {
    let mut machine = SubtractiveCbrt::new(stream)?;
    Ok((0..n).map(|_| machine.next_digit()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    fn nat(s: &str) -> BigNat {
        BigNat::from_decimal(s).unwrap()
    }

    fn quint(m: u64, d: u8, r: u64, s: u64, w: u64) -> QuintState {
        QuintState {
            m: BigNat::from_u64(m),
            d,
            r: BigNat::from_u64(r),
            s: BigNat::from_u64(s),
            w: BigNat::from_u64(w),
        }
    }

    fn stream_u64(m: u64) -> GroupStream {
        GroupStream::from_u64(m, 3).unwrap()
    }

    #[test]
    fn rule_a_examples() {
        assert_eq!(quint(7, 0, 0, 0, 1).rule_a().unwrap(), quint(6, 1, 1, 6, 7));
        assert_eq!(quint(6000, 0, 10, 60, 331).rule_a().unwrap(), quint(5669, 1, 11, 66, 397));
        // boundary of the guard: M == W drains the remainder to zero
        let s = quint(331, 0, 10, 60, 331).rule_a().unwrap();
        assert!(s.m.is_zero());
    }

    #[test]
    fn rule_a_guard() {
        assert_eq!(quint(6, 1, 1, 6, 7).rule_a(), Err(Error::GuardViolation(Rule::A)));
    }

    #[test]
    fn rule_b_examples() {
        let (s, d) = quint(6, 1, 1, 6, 7).rule_b(None).unwrap();
        assert_eq!(d, 1);
        assert_eq!(s, quint(6000, 0, 10, 60, 331));

        let (s, d) = quint(141, 9, 19, 114, 1141).rule_b(None).unwrap();
        assert_eq!(d, 9);
        assert_eq!(s, quint(141000, 0, 190, 1140, 108871));

        // zero remainder keeps emitting the pending digit then zeros
        let (s, d) = quint(0, 2, 2, 12, 19).rule_b(None).unwrap();
        assert_eq!(d, 2);
        assert!(s.m.is_zero());
    }

    #[test]
    fn rule_b_guard() {
        assert_eq!(quint(7, 0, 0, 0, 1).rule_b(None), Err(Error::GuardViolation(Rule::B)));
    }

    #[test]
    fn cube_root_of_seven() {
        assert_eq!(cbrt_digits_quint(&stream_u64(7), 4).unwrap(), vec![1, 9, 1, 2]);
        assert_eq!(cbrt_digits_subtractive(&stream_u64(7), 4).unwrap(), vec![1, 9, 1, 2]);
    }

    #[test]
    fn exact_cube() {
        assert_eq!(cbrt_digits_quint(&stream_u64(8), 4).unwrap(), vec![2, 0, 0, 0]);
        assert_eq!(cbrt_digits_quint(&stream_u64(0), 2).unwrap(), vec![0, 0]);
        assert_eq!(cbrt_digits_subtractive(&stream_u64(0), 2).unwrap(), vec![0, 0]);
    }

    #[test]
    fn cube_root_of_two_ten_digits() {
        assert_eq!(
            cbrt_digits_quint(&stream_u64(2), 10).unwrap(),
            vec![1, 2, 5, 9, 9, 2, 1, 0, 4, 9]
        );
    }

    #[test]
    fn subtractive_remainder_trace() {
        let mut m = SubtractiveCbrt::new(&stream_u64(7)).unwrap();
        let mut digits = Vec::new();
        let mut rems = Vec::new();
        while digits.len() < 4 {
            let before = m.state().remainder.clone();
            if let Step::B { digit } = m.step() {
                digits.push(digit);
                rems.push(before.to_decimal());
            }
        }
        assert_eq!(digits, vec![1, 9, 1, 2]);
        assert_eq!(rems, ["6", "141", "32129", "10217472"]);
    }

    #[test]
    fn trace_step_subtrahend() {
        // fourth group of the cube root of 7
        let f_1910 = crate::metaroot::eval_f(3, &nat("1910"));
        assert_eq!(nat("32129000").sub(&f_1910).unwrap(), nat("21178969"));
    }

    #[test]
    fn quint_invariants_over_full_runs() {
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};

        let three = nat("3");
        let mut rng = StdRng::seed_from_u64(0x9a13);
        for _ in 0..20 {
            let m: u64 = rng.gen_range(0..1_000_000_000_000);
            let mut machine = QuintMachine::new(&stream_u64(m)).unwrap();
            let mut digits = 0;
            while digits < 20 {
                if let Step::B { .. } = machine.step() {
                    digits += 1;
                }
                let s = machine.state();
                let r2 = oracle::mul(&s.r, &s.r);
                let expect_w = oracle::mul(&three, &r2).add(&s.r.mul_small(3)).add_small(1);
                assert_eq!(s.w, expect_w, "W == 3R²+3R+1 (M={m})");
                assert_eq!(s.s, s.r.mul_small(6), "S == 6R (M={m})");
            }
        }
    }

    #[test]
    fn degree_mismatch_rejected() {
        let g = GroupStream::from_u64(7, 2).unwrap();
        assert!(QuintMachine::new(&g).is_err());
        assert!(SubtractiveCbrt::new(&g).is_err());
    }
}
