//! Exact integer kernels.
//!
//! Everything that decides whether √m is close to an integer does so through
//! integer inequalities only; no floating point is involved. [`sqrt_fixed`]
//! exists purely for reporting.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::fixed::FixedPoint;

/// Floor integer square root: returns s with s² ≤ m < (s+1)².
pub fn isqrt(m: &BigUint) -> BigUint {
    if m.is_zero() {
        return BigUint::zero();
    }
    // Newton's method seeded from the bit length; converges monotonically
    // once the iterate is above the root.
    let bits = m.bits();
    let mut r = BigUint::one() << bits.div_ceil(2);
    loop {
        let next = (&r + m / &r) >> 1;
        if next >= r {
            break;
        }
        r = next;
    }
    debug_assert!(&r * &r <= *m && (&r + 1u32) * (&r + 1u32) > *m);
    r
}

/// Nearest integer to √m, decided exactly by comparing 4m with (2s+1)².
pub fn nearest_sqrt_int(m: &BigUint) -> BigUint {
    let s = isqrt(m);
    let mid_sq = (&s * 2u32 + 1u32).pow(2);
    let four_m = m * 4u32;
    // 4m = (2s+1)² would make an odd square even; cannot happen.
    debug_assert!(four_m != mid_sq);
    if four_m < mid_sq {
        s
    } else {
        s + 1u32
    }
}

/// Exact decision of ‖√m‖ < num/den, i.e. whether the distance from √m to
/// its nearest integer is below the given fraction. Requires num/den < 1/2;
/// larger thresholds are ill-posed since ‖·‖ ≤ 1/2 by definition.
pub fn sqrt_dist_lt(m: &BigUint, num: &BigUint, den: &BigUint) -> Result<bool> {
    if den.is_zero() {
        return Err(Error::InvalidInput("denominator must be positive".into()));
    }
    if num * 2u32 >= *den {
        return Err(Error::InvalidInput(
            "threshold num/den must be < 1/2".into(),
        ));
    }
    let d = nearest_sqrt_int(m);
    let lhs = m * den * den;
    let d_den = &d * den;
    if &d * &d <= *m {
        // √m ≥ D: distance < num/den  ⟺  m·den² < (D·den + num)²
        Ok(lhs < (d_den + num).pow(2))
    } else {
        // √m < D: distance < num/den  ⟺  m·den² > (D·den − num)²
        // D ≥ 1 here and num/den < 1/2, so D·den − num > 0.
        Ok(lhs > (d_den - num).pow(2))
    }
}

/// √m rounded to `digits` decimal places; absolute error < 10^-digits.
pub fn sqrt_fixed(m: &BigUint, digits: u32) -> FixedPoint {
    let scaled = m * BigUint::from(10u32).pow(2 * digits);
    let mantissa = nearest_sqrt_int(&scaled);
    FixedPoint::new(BigInt::from(mantissa), digits)
}

/// Jacobi symbol (h/q) for odd q ≥ 1; 0 exactly when gcd(h, q) > 1.
pub fn jacobi(h: i64, q: u64) -> Result<i8> {
    if q % 2 == 0 {
        return Err(Error::EvenModulus(q));
    }
    let mut num = h.rem_euclid(q as i64) as u64;
    let mut den = q;
    let mut acc = 1i8;
    loop {
        num %= den;
        if num == 0 {
            return Ok(if den == 1 { acc } else { 0 });
        }
        // pull out factors of two: (2/den) = 1 iff den ≡ ±1 (mod 8)
        while num % 2 == 0 {
            num /= 2;
            if matches!(den % 8, 3 | 5) {
                acc = -acc;
            }
        }
        if num == 1 {
            return Ok(acc);
        }
        // quadratic reciprocity for odd coprime parts
        if num % 4 == 3 && den % 4 == 3 {
            acc = -acc;
        }
        std::mem::swap(&mut num, &mut den);
    }
}

/// Multiplicative inverse of h modulo q, in [1, q). Requires q ≥ 2 and
/// gcd(h, q) = 1.
pub fn mod_inverse(h: i64, q: u64) -> Result<u64> {
    if q < 2 {
        return Err(Error::InvalidInput("modulus must be at least 2".into()));
    }
    let a = h.rem_euclid(q as i64) as u64;
    if a.gcd(&q) != 1 {
        return Err(Error::NotInvertible(h, q));
    }
    // extended Euclid on (a, q), tracking only the coefficient of a
    let (mut r0, mut r1) = (a as i128, q as i128);
    let (mut s0, mut s1) = (1i128, 0i128);
    while r1 != 0 {
        let k = r0 / r1;
        (r0, r1) = (r1, r0 - k * r1);
        (s0, s1) = (s1, s0 - k * s1);
    }
    debug_assert_eq!(r0, 1);
    Ok(s0.rem_euclid(q as i128) as u64)
}
