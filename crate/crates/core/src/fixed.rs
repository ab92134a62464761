//! Decimal fixed-point values and certified enclosures.
//!
//! Every accept/reject decision in this crate is made on exact integers; the
//! types here exist for the places where an irrational quantity (√x, x^θ)
//! has to be compared, displayed or folded into an integer window. A
//! [`DecInterval`] is a closed interval `[lo, hi] · 10^-scale` that is
//! guaranteed to contain the true value, with `lo == hi` exactly when the
//! value is known exactly (perfect squares, rational powers). Interval
//! endpoints only ever move outward, so windows derived from them can only
//! shrink.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact decimal value `mantissa · 10^-scale`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedPoint {
    mantissa: BigInt,
    scale: u32,
}

impl FixedPoint {
    pub fn new(mantissa: BigInt, scale: u32) -> Self {
        FixedPoint { mantissa, scale }
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mantissa
    }

    pub fn scale(&self) -> u32 {
        self.scale
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn to_f64(&self) -> f64 {
        let m = self.mantissa.to_f64().unwrap_or(f64::NAN);
        m / 10f64.powi(self.scale as i32)
    }
}

impl fmt::Display for FixedPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.scale == 0 {
            return write!(f, "{}", self.mantissa);
        }
        let sign = if self.mantissa.is_negative() { "-" } else { "" };
        let abs = self.mantissa.abs();
        let pow = pow10(self.scale);
        let (int, frac) = abs.div_rem(&pow);
        write!(
            f,
            "{sign}{int}.{frac:0>width$}",
            width = self.scale as usize
        )
    }
}

pub(crate) fn pow10(scale: u32) -> BigInt {
    BigInt::from(10u32).pow(scale)
}

fn pow10_nat(scale: u32) -> BigUint {
    BigUint::from(10u32).pow(scale)
}

/// Closed decimal interval `[lo, hi] · 10^-scale` certified to contain the
/// true value. `lo == hi` means the value is exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecInterval {
    lo: BigInt,
    hi: BigInt,
    scale: u32,
}

impl DecInterval {
    pub fn exact_int(v: BigInt, scale: u32) -> Self {
        let m = v * pow10(scale);
        DecInterval {
            lo: m.clone(),
            hi: m,
            scale,
        }
    }

    pub fn from_rational(r: Rational64, scale: u32) -> Self {
        let num = BigInt::from(*r.numer()) * pow10(scale);
        let den = BigInt::from(*r.denom());
        let lo = num.div_floor(&den);
        let hi = num.div_ceil(&den);
        DecInterval { lo, hi, scale }
    }

    pub fn scale(&self) -> u32 {
        self.scale
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    /// Enclosure of √m. Exact when m is a perfect square times an even power
    /// of ten.
    pub fn sqrt_nat(m: &BigUint, scale: u32) -> Self {
        let scaled = m * pow10_nat(2 * scale);
        let root = crate::arith::isqrt(&scaled);
        let exact = &root * &root == scaled;
        let lo = BigInt::from(root);
        let hi = if exact { lo.clone() } else { &lo + 1 };
        DecInterval { lo, hi, scale }
    }

    /// Enclosure of x^(num/den) for x ≥ 1 and num/den > 0, via the exact
    /// integer den-th root of `x^num · 10^(den·scale)`.
    fn pow_positive(x: &BigUint, num: u64, den: u64, scale: u32) -> Self {
        debug_assert!(den > 0 && num > 0 && !x.is_zero());
        let g = num.gcd(&den);
        let (num, den) = (num / g, den / g);
        let radicand = x.pow(num as u32) * pow10_nat(den as u32 * scale);
        let root = radicand.nth_root(den as u32);
        let exact = root.pow(den as u32) == radicand;
        let lo = BigInt::from(root);
        let hi = if exact { lo.clone() } else { &lo + 1 };
        DecInterval { lo, hi, scale }
    }

    /// Enclosure of x^r for x ≥ 1 and any rational exponent r. Exponents are
    /// limited to numerator and denominator at most 1000: the radicand grows
    /// with both, and every exponent in use (θ, 2θ, 1/2 ± θ, θ − 2ε)
    /// reduces far below that.
    pub fn pow_rational(x: &BigUint, r: Rational64, scale: u32) -> Result<Self> {
        if x.is_zero() {
            return Err(Error::InvalidInput("power base must be positive".into()));
        }
        if r.numer().unsigned_abs() > 1000 || r.denom().unsigned_abs() > 1000 {
            return Err(Error::InvalidInput(format!(
                "exponent {r} too fine-grained; use a rational within 1000ths"
            )));
        }
        if r.is_zero() || x.is_one() {
            return Ok(DecInterval::exact_int(BigInt::one(), scale));
        }
        if r.is_negative() {
            let pos = DecInterval::pow_positive(
                x,
                r.numer().unsigned_abs(),
                r.denom().unsigned_abs(),
                scale,
            );
            return pos.recip();
        }
        Ok(DecInterval::pow_positive(
            x,
            r.numer().unsigned_abs(),
            r.denom().unsigned_abs(),
            scale,
        ))
    }

    /// Enclosure of 1/v; requires the value to be strictly positive.
    pub fn recip(&self) -> Result<Self> {
        if !self.lo.is_positive() {
            return Err(Error::InvalidInput(
                "reciprocal of a non-positive enclosure".into(),
            ));
        }
        let sq = pow10(2 * self.scale);
        let lo = sq.div_floor(&self.hi);
        let hi = if self.is_exact() && (&sq % &self.lo).is_zero() {
            lo.clone()
        } else {
            sq.div_ceil(&self.lo)
        };
        Ok(DecInterval {
            lo,
            hi,
            scale: self.scale,
        })
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.scale, other.scale);
        DecInterval {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
            scale: self.scale,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.scale, other.scale);
        DecInterval {
            lo: &self.lo - &other.hi,
            hi: &self.hi - &other.lo,
            scale: self.scale,
        }
    }

    pub fn neg(&self) -> Self {
        DecInterval {
            lo: -self.hi.clone(),
            hi: -self.lo.clone(),
            scale: self.scale,
        }
    }

    pub fn abs(&self) -> Self {
        if !self.lo.is_negative() {
            self.clone()
        } else if !self.hi.is_positive() {
            self.neg()
        } else {
            DecInterval {
                lo: BigInt::zero(),
                hi: self.hi.clone().max(-self.lo.clone()),
                scale: self.scale,
            }
        }
    }

    /// Outward multiplication by an exact nonnegative integer.
    pub fn mul_nat(&self, k: &BigUint) -> Self {
        let k = BigInt::from(k.clone());
        DecInterval {
            lo: &self.lo * &k,
            hi: &self.hi * &k,
            scale: self.scale,
        }
    }

    /// Outward multiplication by a rational factor.
    pub fn mul_rational(&self, r: Rational64) -> Self {
        let num = BigInt::from(*r.numer());
        let den = BigInt::from(*r.denom());
        let a = (&self.lo * &num).div_floor(&den);
        let a_hi = (&self.lo * &num).div_ceil(&den);
        let b = (&self.hi * &num).div_floor(&den);
        let b_hi = (&self.hi * &num).div_ceil(&den);
        DecInterval {
            lo: a.min(b),
            hi: a_hi.max(b_hi),
            scale: self.scale,
        }
    }

    /// Outward division by an exact positive integer.
    pub fn div_nat(&self, k: &BigUint) -> Self {
        debug_assert!(!k.is_zero());
        let k = BigInt::from(k.clone());
        DecInterval {
            lo: self.lo.div_floor(&k),
            hi: self.hi.div_ceil(&k),
            scale: self.scale,
        }
    }

    /// Fractional part, when the enclosure does not straddle an integer.
    pub fn frac(&self) -> Option<Self> {
        let pow = pow10(self.scale);
        let f_lo = self.lo.div_floor(&pow);
        let f_hi = self.hi.div_floor(&pow);
        if f_lo != f_hi {
            return None;
        }
        let shift = f_lo * &pow;
        Some(DecInterval {
            lo: &self.lo - &shift,
            hi: &self.hi - &shift,
            scale: self.scale,
        })
    }

    /// Smallest integer certainly ≥ the true value.
    pub fn ceil_outer(&self) -> BigInt {
        self.hi.div_ceil(&pow10(self.scale))
    }

    /// Nearest integer to the midpoint of the enclosure.
    pub fn round_mid(&self) -> BigInt {
        let two = BigInt::from(2u32);
        let mid = (&self.lo + &self.hi).div_floor(&two);
        let pow = pow10(self.scale);
        (mid * &two + &pow).div_floor(&(pow * &two))
    }

    /// Largest integer certainly ≤ the true value.
    pub fn floor_outer(&self) -> BigInt {
        self.lo.div_floor(&pow10(self.scale))
    }

    /// True when every value in this enclosure is ≥ every value in `other`.
    pub fn definitely_ge(&self, other: &Self) -> bool {
        debug_assert_eq!(self.scale, other.scale);
        self.lo >= other.hi
    }

    /// True when this enclosure lies strictly below `other` with at least
    /// `margin_scale` decimal digits of clearance (10^-margin ≤ gap).
    pub fn lt_with_margin(&self, other: &Self, margin_digits: u32) -> bool {
        debug_assert_eq!(self.scale, other.scale);
        debug_assert!(margin_digits <= self.scale);
        let margin = pow10(self.scale - margin_digits);
        &self.hi + margin < other.lo
    }

    /// Round to a displayable fixed-point value with `digits` fractional
    /// digits; the result is within 10^-digits of the true value provided the
    /// enclosure is at least that tight.
    pub fn to_fixed(&self, digits: u32) -> FixedPoint {
        debug_assert!(digits <= self.scale);
        let two = BigInt::from(2u32);
        let mid = (&self.lo + &self.hi).div_floor(&two);
        // round half away handled by floor((2*mid/P + 1)/2) on the midpoint
        let pow = pow10(self.scale - digits);
        let mantissa = (mid * &two + &pow).div_floor(&(pow * &two));
        FixedPoint::new(mantissa, digits)
    }

    pub fn mid_f64(&self) -> f64 {
        let two = BigInt::from(2u32);
        let mid = (&self.lo + &self.hi).div_floor(&two);
        FixedPoint::new(mid, self.scale).to_f64()
    }

    /// Width of the enclosure in units of 10^-scale.
    pub fn width(&self) -> BigInt {
        &self.hi - &self.lo
    }
}

/// Parse "0.25", "2", or "1/4" into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational64> {
    let bad = || Error::InvalidInput(format!("cannot parse '{s}' as a rational"));
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: i64 = n.trim().parse().map_err(|_| bad())?;
        let d: i64 = d.trim().parse().map_err(|_| bad())?;
        if d == 0 {
            return Err(bad());
        }
        return Ok(Rational64::new(n, d));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let neg = int.starts_with('-');
        let int_abs: i64 = if int.is_empty() || int == "-" {
            0
        } else {
            int.parse::<i64>().map_err(|_| bad())?.abs()
        };
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        if frac.len() > 15 {
            return Err(Error::InvalidInput(format!(
                "'{s}' has too many decimal digits for an exact i64 rational"
            )));
        }
        let den = 10i64.pow(frac.len() as u32);
        let num: i64 = frac.parse().map_err(|_| bad())?;
        let total = int_abs
            .checked_mul(den)
            .and_then(|v| v.checked_add(num))
            .ok_or_else(bad)?;
        let total = if neg { -total } else { total };
        return Ok(Rational64::new(total, den));
    }
    let v: i64 = s.parse().map_err(|_| bad())?;
    Ok(Rational64::from_integer(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_fixed_point() {
        assert_eq!(FixedPoint::new(BigInt::from(141421), 5).to_string(), "1.41421");
        assert_eq!(FixedPoint::new(BigInt::from(-1250), 8).to_string(), "-0.00001250");
        assert_eq!(FixedPoint::new(BigInt::from(42), 0).to_string(), "42");
        assert_eq!(FixedPoint::new(BigInt::from(5), 2).to_string(), "0.05");
    }

    #[test]
    fn sqrt_enclosure_exactness() {
        let s = DecInterval::sqrt_nat(&BigUint::from(4u32), 10);
        assert!(s.is_exact());
        assert_eq!(s.floor_outer(), BigInt::from(2));

        let s = DecInterval::sqrt_nat(&BigUint::from(2u32), 10);
        assert!(!s.is_exact());
        assert_eq!(s.width(), BigInt::one());
        // 1.4142135623 < sqrt 2 < 1.4142135624
        assert_eq!(s.to_fixed(5).to_string(), "1.41421");
    }

    #[test]
    fn pow_rational_exact_cases() {
        let x = BigUint::from(1_000_000u64);
        let p = DecInterval::pow_rational(&x, Rational64::new(1, 2), 20).unwrap();
        assert!(p.is_exact());
        assert_eq!(p.floor_outer(), BigInt::from(1000));

        let p0 = DecInterval::pow_rational(&x, Rational64::new(0, 1), 20).unwrap();
        assert!(p0.is_exact());
        assert_eq!(p0.floor_outer(), BigInt::one());

        // 10^1.5 = 31.6227766...
        let q = DecInterval::pow_rational(&x, Rational64::new(1, 4), 20).unwrap();
        assert!(!q.is_exact());
        assert_eq!(q.to_fixed(6).to_string(), "31.622777");
    }

    #[test]
    fn pow_rational_negative_exponent() {
        // 997^-0.28 = 0.14466...
        let x = BigUint::from(997u64);
        let d = DecInterval::pow_rational(&x, Rational64::new(-28, 100), 30).unwrap();
        assert_eq!(d.to_fixed(6).to_string(), "0.144666");
    }

    #[test]
    fn interval_arithmetic_outward() {
        let a = DecInterval::sqrt_nat(&BigUint::from(1000u32), 20);
        let b = DecInterval::from_rational(Rational64::new(9, 4), 20);
        let d = a.sub(&b);
        // sqrt(1000) - 2.25 = 29.3727766...
        assert_eq!(d.ceil_outer(), BigInt::from(30));
        assert_eq!(d.floor_outer(), BigInt::from(29));
    }

    #[test]
    fn frac_detects_straddle() {
        let exact = DecInterval::exact_int(BigInt::from(3), 10);
        assert_eq!(
            exact.frac().unwrap(),
            DecInterval::exact_int(BigInt::zero(), 10)
        );
        let s = DecInterval::sqrt_nat(&BigUint::from(997u32), 20);
        let f = s.frac().unwrap();
        // {sqrt 997} = 0.5753069...
        assert_eq!(f.to_fixed(5).to_string(), "0.57531");
    }

    #[test]
    fn parse_rational_forms() {
        assert_eq!(parse_rational("0.25").unwrap(), Rational64::new(1, 4));
        assert_eq!(parse_rational("1/4").unwrap(), Rational64::new(1, 4));
        assert_eq!(parse_rational("2").unwrap(), Rational64::from_integer(2));
        assert_eq!(parse_rational("-0.3").unwrap(), Rational64::new(-3, 10));
        assert_eq!(parse_rational("0.3").unwrap(), Rational64::new(3, 10));
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("1/0").is_err());
    }
}
