//! Independent ground truth for the digit machines.
//!
//! A schoolbook multiplier, square-and-multiply powering, and a
//! binary-search floor root. This module imports nothing from the machine
//! modules and the machine inner loops import nothing from here, so a bug
//! cannot validate itself across the boundary. Everything here is allowed
//! to be slow.

use crate::bignat::{BigNat, LIMB_BASE};

/// Exact product, schoolbook over decimal limbs.
pub fn mul(a: &BigNat, b: &BigNat) -> BigNat {
    let (al, bl) = (a.limbs(), b.limbs());
    if al.is_empty() || bl.is_empty() {
        return BigNat::zero();
    }
    let mut acc = vec![0u128; al.len() + bl.len()];
    for (i, &x) in al.iter().enumerate() {
        let mut carry = 0u128;
        for (j, &y) in bl.iter().enumerate() {
            let cell = acc[i + j] + x as u128 * y as u128 + carry;
            acc[i + j] = cell % LIMB_BASE as u128;
            carry = cell / LIMB_BASE as u128;
        }
        acc[i + bl.len()] += carry;
    }
    BigNat::from_limbs(acc.into_iter().map(|c| c as u64).collect())
}

/// `a^r` by square-and-multiply.
pub fn ipow(a: &BigNat, r: u32) -> BigNat {
    let mut result = BigNat::one();
    let mut base = a.clone();
    let mut exp = r;
    while exp > 0 {
        if exp & 1 == 1 {
            result = mul(&result, &base);
        }
        exp >>= 1;
        if exp > 0 {
            base = mul(&base, &base);
        }
    }
    result
}

/// Largest `x` with `x^r <= m`, by binary search.
///
/// The bracket `[0, 10^ceil(len(m)/r)]` is guaranteed by digit-length
/// arithmetic. Every call re-verifies its own answer with [`ipow`] before
/// returning.
pub fn iroot_floor(m: &BigNat, r: u32) -> BigNat {
    assert!(r >= 2, "iroot_floor needs degree >= 2");
    let mut lo = BigNat::zero();
    let mut hi = BigNat::one().shl10(m.decimal_len().div_ceil(r as usize));
    // invariant: lo^r <= m < hi^r
    while hi.sub(&lo).unwrap() > BigNat::one() {
        let mid = half(&lo.add(&hi));
        if ipow(&mid, r) <= *m {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    assert!(ipow(&lo, r) <= *m, "oracle self-check failed: root too large");
    assert!(
        ipow(&lo.add_small(1), r) > *m,
        "oracle self-check failed: root too small"
    );
    lo
}

/// Floor halving; the decimal limb base is even, so the remainder cascades
/// cleanly limb to limb.
fn half(x: &BigNat) -> BigNat {
    let mut out = vec![0u64; x.limbs().len()];
    let mut rem = 0u64;
    for (i, &limb) in x.limbs().iter().enumerate().rev() {
        let cur = rem * LIMB_BASE + limb;
        out[i] = cur / 2;
        rem = cur % 2;
    }
    BigNat::from_limbs(out)
}
