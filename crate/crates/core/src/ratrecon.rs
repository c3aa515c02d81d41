//! Rational reconstruction of floating-point exponents by continued fractions.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, ToPrimitive, Zero};

/// A reconstructed fraction `numer / denom` with `denom >= 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fraction {
    pub numer: BigInt,
    pub denom: u64,
}

/// The fraction of smallest denominator in the closed interval `[lo, hi]`,
/// provided that denominator is at most `max_denom`.
///
/// Walks the continued fraction shared by both endpoints; the convergent
/// denominators only grow, so the walk stops as soon as one exceeds the bound.
pub fn simplest_in_interval(lo: &BigRational, hi: &BigRational, max_denom: u64) -> Option<Fraction> {
    debug_assert!(lo <= hi);
    let (mut lo, mut hi) = (lo.clone(), hi.clone());
    // convergents h/k
    let (mut h_prev, mut h) = (BigInt::zero(), BigInt::one());
    let (mut k_prev, mut k) = (1u128, 0u128);
    let bound = max_denom as u128;

    loop {
        let fl = lo.floor();
        let fl_int = fl.to_integer();
        let (a, done) = if fl == lo {
            (fl_int, true)
        } else if &fl + BigRational::one() <= hi {
            (fl_int + BigInt::one(), true)
        } else {
            (fl_int, false)
        };
        // k == 0 only before the first term; later partial quotients are >= 1
        let next_k = if k == 0 {
            1
        } else {
            a.to_u128()?.checked_mul(k)?.checked_add(k_prev)?
        };
        let next_h = &a * &h + &h_prev;
        if next_k > bound {
            return None;
        }
        h_prev = std::mem::replace(&mut h, next_h);
        k_prev = std::mem::replace(&mut k, next_k);
        if done {
            return Some(Fraction {
                numer: h,
                denom: k as u64,
            });
        }
        let new_lo = (&hi - &fl).recip();
        let new_hi = (&lo - &fl).recip();
        lo = new_lo;
        hi = new_hi;
    }
}

/// Reconstruct `x` as a fraction with denominator `<= max_denom` and error
/// at most `tol * max(1, |x|)`.
pub fn reconstruct(x: f64, tol: f64, max_denom: u64) -> Option<Fraction> {
    if !x.is_finite() {
        return None;
    }
    let slack = tol * x.abs().max(1.0);
    let xr = BigRational::from_f64(x)?;
    let sr = BigRational::from_f64(slack)?;
    simplest_in_interval(&(&xr - &sr), &(&xr + &sr), max_denom)
}

impl Fraction {
    pub fn to_f64(&self) -> f64 {
        self.numer.to_f64().unwrap_or(f64::NAN) / self.denom as f64
    }

    pub fn is_integer(&self) -> bool {
        self.denom == 1
    }
}
