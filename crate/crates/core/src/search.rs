//! Almost-square searches around a target x.
//!
//! Three routes to the same object: an exhaustive scan over factor pairs in
//! the window (the oracle everything else is judged against), a pigeonhole
//! scan over the half-difference d using exact nearest-square decisions, and
//! a conditional variant that only visits d whose fractional part
//! {d²/(2√x)} falls in the window that makes √(x+d²) nearly integral.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::nearest_sqrt_int;
use crate::error::{Error, Result};
use crate::fixed::{DecInterval, FixedPoint};

/// Decimal digits used for window-membership enclosures.
const WINDOW_SCALE: u32 = 30;
/// Points within 10^-MARGIN of a window endpoint are treated as outside.
const WINDOW_MARGIN_DIGITS: u32 = 25;
/// Largest d-scan the conditional search will attempt.
const MAX_SCAN: u64 = 50_000_000;

/// A found factorization n = a·b near x, with the difference-of-squares
/// decomposition (a, b) = (mid − half, mid + half) when a ≡ b (mod 2).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlmostSquare {
    pub x: BigUint,
    pub a: BigUint,
    pub b: BigUint,
    pub n: BigUint,
    pub offset: BigUint,
    pub mid: Option<BigUint>,
    pub half: Option<BigUint>,
}

impl AlmostSquare {
    pub fn from_pair(x: &BigUint, a: BigUint, b: BigUint) -> Self {
        debug_assert!(a <= b);
        let n = &a * &b;
        let offset = abs_diff(x, &n);
        let (mid, half) = if (&a + &b).is_even() {
            (Some((&a + &b) >> 1), Some((&b - &a) >> 1))
        } else {
            (None, None)
        };
        AlmostSquare {
            x: x.clone(),
            a,
            b,
            n,
            offset,
            mid,
            half,
        }
    }

    pub fn from_mid_half(x: &BigUint, mid: BigUint, half: BigUint) -> Self {
        debug_assert!(mid > half);
        let a = &mid - &half;
        let b = &mid + &half;
        let n = &a * &b;
        debug_assert_eq!(n, &mid * &mid - &half * &half);
        let offset = abs_diff(x, &n);
        AlmostSquare {
            x: x.clone(),
            a,
            b,
            n,
            offset,
            mid: Some(mid),
            half: Some(half),
        }
    }
}

pub(crate) fn abs_diff(a: &BigUint, b: &BigUint) -> BigUint {
    if a >= b {
        a - b
    } else {
        b - a
    }
}

/// Integer factor window [lo, hi] around √x with half-width c2·x^θ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchWindow {
    pub x: BigUint,
    pub theta: Rational64,
    pub c2: Rational64,
    pub lo: BigUint,
    pub hi: BigUint,
}

/// Build the window [⌈√x − c2·x^θ⌉, ⌊√x + c2·x^θ⌋]. Bounds are derived from
/// certified enclosures rounded inward, so the window never overstates the
/// real interval; exact cases (θ = 0, perfect squares) stay exact.
pub fn search_window(x: &BigUint, theta: Rational64, c2: Rational64) -> Result<SearchWindow> {
    if theta.is_negative() || theta >= Rational64::new(1, 2) {
        return Err(Error::InvalidInput(format!(
            "theta = {theta} must lie in [0, 1/2)"
        )));
    }
    if !c2.is_positive() {
        return Err(Error::InvalidInput("c2 must be positive".into()));
    }
    if x.is_zero() {
        return Err(Error::InvalidInput("x must be positive".into()));
    }
    let sqrt = DecInterval::sqrt_nat(x, WINDOW_SCALE);
    let w = DecInterval::pow_rational(x, theta, WINDOW_SCALE)?.mul_rational(c2);
    let lo = sqrt.sub(&w).ceil_outer().max(BigInt::one());
    let hi = sqrt.add(&w).floor_outer();
    if lo > hi {
        return Err(Error::EmptyWindow(x.to_string()));
    }
    Ok(SearchWindow {
        x: x.clone(),
        theta,
        c2,
        lo: lo.to_biguint().unwrap(),
        hi: hi.to_biguint().unwrap(),
    })
}

/// Minimal |x − ab| over all pairs lo ≤ a ≤ b ≤ hi; ties broken by smaller
/// n, then smaller a. For each a only b near x/a can be optimal, so the scan
/// is linear in the window width.
pub fn brute_force_nearest(x: &BigUint, w: &SearchWindow) -> Result<AlmostSquare> {
    if w.lo.is_zero() {
        return Err(Error::InvalidInput("window must start at a >= 1".into()));
    }
    let mut best: Option<(BigUint, BigUint, BigUint, BigUint)> = None;
    let mut a = w.lo.clone();
    while a <= w.hi {
        let q = x / &a;
        for cand in [q.clone(), &q + 1u32] {
            let b = cand.max(a.clone()).min(w.hi.clone());
            if b < a {
                continue;
            }
            let n = &a * &b;
            let off = abs_diff(x, &n);
            let key = (off, n, a.clone(), b);
            if best.as_ref().is_none_or(|cur| {
                (&key.0, &key.1, &key.2) < (&cur.0, &cur.1, &cur.2)
            }) {
                best = Some(key);
            }
        }
        a += 1u32;
    }
    let (_, _, a, b) = best.expect("window is nonempty");
    Ok(AlmostSquare::from_pair(x, a, b))
}

/// Pigeonhole scan: for d in [d_lo, d_hi], the candidate nearest to x is
/// D² − d² with D the nearest integer to √(x + d²). Ties go to the smaller
/// d. Shifts with D ≤ d would make the smaller factor nonpositive and are
/// skipped.
pub fn d_search(x: &BigUint, d_lo: u64, d_hi: u64) -> Result<AlmostSquare> {
    if d_lo > d_hi {
        return Err(Error::InvalidInput(format!(
            "empty d-range [{d_lo}, {d_hi}]"
        )));
    }
    let mut best: Option<(BigUint, u64, BigUint)> = None;
    for d in d_lo..=d_hi {
        let dd = BigUint::from(d) * BigUint::from(d);
        let m = x + &dd;
        let center = nearest_sqrt_int(&m);
        if center <= BigUint::from(d) {
            continue;
        }
        let n = &center * &center - &dd;
        let off = abs_diff(x, &n);
        if best.as_ref().is_none_or(|(cur, _, _)| off < *cur) {
            best = Some((off, d, center));
        }
    }
    let (_, d, center) = best.ok_or(Error::NoCandidate(d_hi))?;
    Ok(AlmostSquare::from_mid_half(x, center, BigUint::from(d)))
}

/// Exact ⌊mult · x^exp⌋ via integer nth roots. Exponent granularity is
/// capped like [`DecInterval::pow_rational`].
pub fn floor_pow_times(x: &BigUint, exp: Rational64, mult: Rational64) -> Result<BigUint> {
    if exp.is_negative() || !mult.is_positive() || x.is_zero() {
        return Err(Error::InvalidInput(
            "floor_pow_times needs x >= 1, exp >= 0, mult > 0".into(),
        ));
    }
    if *exp.numer() > 1000 || *exp.denom() > 1000 {
        return Err(Error::InvalidInput(format!(
            "exponent {exp} too fine-grained; use a rational within 1000ths"
        )));
    }
    let (en, ed) = (*exp.numer() as u32, *exp.denom() as u32);
    let (mn, md) = (
        BigUint::from(mult.numer().unsigned_abs()),
        BigUint::from(mult.denom().unsigned_abs()),
    );
    // ⌊(mn/md)·x^(en/ed)⌋ = ⌊⌊(x^en · mn^ed)^(1/ed)⌋ / md⌋
    let radicand = x.pow(en) * mn.pow(ed);
    Ok(radicand.nth_root(ed) / md)
}

/// Scan budget and window parameters for the conditional search.
struct ConditionalSetup {
    n_max: u64,
    lambda: DecInterval,
    delta: DecInterval,
    sqrt_x: DecInterval,
}

fn conditional_setup(x: &BigUint, theta: Rational64, eps: Rational64) -> Result<ConditionalSetup> {
    if theta <= Rational64::new(1, 4) || theta >= Rational64::new(1, 3) {
        return Err(Error::InvalidInput(format!(
            "theta = {theta} must lie in (1/4, 1/3)"
        )));
    }
    if !eps.is_positive() || theta - eps * 2 <= Rational64::zero() {
        return Err(Error::InvalidInput(format!(
            "eps = {eps} must satisfy 0 < 2*eps < theta"
        )));
    }
    // feasibility: 1/x^(1-2θ) ≤ Δ/2  ⟺  2 ≤ x^e with e = 1 − 3θ + 2ε,
    // decided from bit lengths (2^(b−1) ≤ x < 2^b) so no huge power is
    // ever formed; the narrow inconclusive band falls back to a logarithm
    // and rejects ties, which only shrinks the claim
    let e = Rational64::one() - theta * 3 + eps * 2;
    if !e.is_positive() {
        return Err(Error::InvalidInput(
            "theta too close to 1/3 for this eps".into(),
        ));
    }
    let (en, ed) = (*e.numer() as u64, *e.denom() as u64);
    let bits = x.bits();
    let ok = if en.saturating_mul(bits - 1) >= ed {
        true
    } else if en.saturating_mul(bits) <= ed {
        false
    } else {
        let log2x = if bits > 53 {
            ((x >> (bits - 53)).to_f64().unwrap()).log2() + (bits - 53) as f64
        } else {
            x.to_f64().unwrap().log2()
        };
        en as f64 * log2x > ed as f64 * (1.0 + 1e-12) + 1e-6
    };
    if !ok {
        return Err(Error::InvalidInput(format!(
            "x = {x} too small: needs 1/x^(1-2θ) ≤ Δ/2"
        )));
    }
    let n_max_big = floor_pow_times(x, theta, Rational64::one())?;
    let n_max = u64::try_from(&n_max_big).map_err(|_| Error::DeskLimit {
        what: "conditional scan length",
        got: u64::MAX,
        limit: MAX_SCAN,
    })?;
    if n_max > MAX_SCAN {
        return Err(Error::DeskLimit {
            what: "conditional scan length",
            got: n_max,
            limit: MAX_SCAN,
        });
    }
    let delta = DecInterval::pow_rational(x, -(theta - eps * 2), WINDOW_SCALE)?;
    let sqrt_x = DecInterval::sqrt_nat(x, WINDOW_SCALE);
    let frac = sqrt_x
        .frac()
        .ok_or_else(|| Error::InvalidInput("sqrt(x) too close to an integer".into()))?;
    let lambda = if frac.is_exact() && frac == DecInterval::exact_int(BigInt::zero(), WINDOW_SCALE)
    {
        frac
    } else {
        DecInterval::exact_int(BigInt::one(), WINDOW_SCALE).sub(&frac)
    };
    Ok(ConditionalSetup {
        n_max,
        lambda,
        delta,
        sqrt_x,
    })
}

/// Conservative test for circle-distance(value, center) < delta, with the
/// crate-wide safety margin. Ambiguous enclosures count as outside.
fn inside_window(value: &DecInterval, center: &DecInterval, delta: &DecInterval) -> bool {
    let diff = value.sub(center);
    // shift by the nearest integer to the midpoint; a wrong pick near a
    // half-integer only makes the distance larger, which is conservative
    let k = diff.round_mid();
    let dist = diff.sub(&DecInterval::exact_int(k, value.scale())).abs();
    dist.lt_with_margin(delta, WINDOW_MARGIN_DIGITS)
}

/// Conditional search: with N = ⌊x^θ⌋, Δ = x^-(θ-2ε) and λ the gap from √x
/// up to the next integer, scan d = 0..N for {d²/(2√x)} ∈ (λ−Δ, λ+Δ) mod 1
/// and return the almost square built from the smallest qualifying d.
pub fn conditional_find(x: &BigUint, theta: Rational64, eps: Rational64) -> Result<AlmostSquare> {
    let setup = conditional_setup(x, theta, eps)?;
    let two_x = x * 2u32;
    for d in 0..=setup.n_max {
        let dd = BigUint::from(d) * BigUint::from(d);
        let value = match setup.sqrt_x.mul_nat(&dd).div_nat(&two_x).frac() {
            Some(v) => v,
            // enclosure straddles an integer: conservatively outside
            None => continue,
        };
        if inside_window(&value, &setup.lambda, &setup.delta) {
            let m = x + &dd;
            let center = nearest_sqrt_int(&m);
            if center <= BigUint::from(d) {
                continue;
            }
            return Ok(AlmostSquare::from_mid_half(x, center, BigUint::from(d)));
        }
    }
    Err(Error::NoCandidate(setup.n_max))
}

/// |√(x+d²) − √x − d²/(2√x)| to the requested number of digits; the
/// second-order error of the expansion that links the d-scan to n²α mod 1.
pub fn taylor_error(x: &BigUint, d: &BigUint, digits: u32) -> Result<FixedPoint> {
    let dd = d * d;
    if dd >= *x {
        return Err(Error::InvalidInput("taylor_error needs d^2 < x".into()));
    }
    let scale = digits + 10;
    let shifted = DecInterval::sqrt_nat(&(x + &dd), scale);
    let base = DecInterval::sqrt_nat(x, scale);
    let linear = base.mul_nat(&dd).div_nat(&(x * 2u32));
    let err = shifted.sub(&base).sub(&linear).abs();
    Ok(err.to_fixed(digits))
}

/// The identity 4ab = (a+b)² − (b−a)², verified exactly; returns (a+b, b−a).
pub fn diff_of_squares_check(a: &BigUint, b: &BigUint) -> Result<(BigUint, BigUint)> {
    if a > b {
        return Err(Error::InvalidInput("need a <= b".into()));
    }
    let s = a + b;
    let t = b - a;
    assert_eq!(a * b * 4u32, &s * &s - &t * &t);
    Ok((s, t))
}
