//! Desk-scale gap experiments.
//!
//! Each operation here turns one of the asymptotic statements about almost
//! squares into a finite, reproducible check: worst offsets across an x-grid
//! and the exponent they fit, the quarter-point lower bound, the product-gap
//! floor, multiplication-table density, and the sums-of-two-squares
//! companion search.

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_rational::Rational64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::arith::nearest_sqrt_int;
use crate::error::{Error, Result};
use crate::fixed::{DecInterval, FixedPoint};
use crate::search::{abs_diff, brute_force_nearest, d_search, floor_pow_times, search_window};

/// Bound-comparison scale (decimal digits).
const SCALE: u32 = 30;
/// Largest multiplication table enumerated in memory.
pub const MULT_TABLE_LIMIT: u64 = 10_000;
/// Largest two-squares sieve, in bits.
pub const SIEVE_LIMIT: u64 = 200_000_000;
/// Widest factor window product_gap will enumerate.
const PRODUCT_WINDOW_LIMIT: u64 = 1_000_000;

/// One experiment outcome: the offset achieved at x.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapRecord {
    pub x: BigUint,
    pub offset: BigUint,
    pub meta: String,
}

/// Search strategy for [`scan_worst_offset`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScanMethod {
    Brute,
    DSearch,
}

impl ScanMethod {
    pub fn name(self) -> &'static str {
        match self {
            ScanMethod::Brute => "brute",
            ScanMethod::DSearch => "dsearch",
        }
    }
}

/// Minimal achievable offset per x, in input order. Each x is independent,
/// so the grid is processed in parallel; the output order never depends on
/// the worker count.
pub fn scan_worst_offset(
    xs: &[BigUint],
    theta: Rational64,
    c2: Rational64,
    method: ScanMethod,
) -> Result<Vec<GapRecord>> {
    if xs.is_empty() {
        return Err(Error::InvalidInput("empty x-grid".into()));
    }
    xs.par_iter()
        .map(|x| {
            let offset = match method {
                ScanMethod::Brute => {
                    let w = search_window(x, theta, c2)?;
                    brute_force_nearest(x, &w)?.offset
                }
                ScanMethod::DSearch => {
                    let d_hi_big = floor_pow_times(x, theta, c2)?;
                    let d_hi = u64::try_from(&d_hi_big).map_err(|_| Error::DeskLimit {
                        what: "d-scan length",
                        got: u64::MAX,
                        limit: PRODUCT_WINDOW_LIMIT,
                    })?;
                    d_search(x, 0, d_hi)?.offset
                }
            };
            Ok(GapRecord {
                x: x.clone(),
                offset,
                meta: format!("scan-{}", method.name()),
            })
        })
        .collect()
}

/// Least-squares exponent fit of ln(offset) against ln(x).
#[derive(Debug, Clone, PartialEq)]
pub struct ExponentFit {
    pub slope: f64,
    pub intercept: f64,
    pub count: usize,
}

/// Fit ln(offset) = intercept + slope·ln(x) over records with offset ≥ 1.
/// Zero offsets (perfect hits) carry no exponent information and are
/// dropped.
pub fn fit_exponent(records: &[GapRecord]) -> Result<ExponentFit> {
    let pts: Vec<(f64, f64)> = records
        .iter()
        .filter(|r| !r.offset.is_zero())
        .map(|r| {
            let x = r.x.to_f64().unwrap_or(f64::INFINITY).ln();
            let y = r.offset.to_f64().unwrap_or(f64::INFINITY).ln();
            (x, y)
        })
        .collect();
    if pts.len() < 2 {
        return Err(Error::InsufficientData(pts.len()));
    }
    let n = pts.len() as f64;
    let sx: f64 = pts.iter().map(|p| p.0).sum();
    let sy: f64 = pts.iter().map(|p| p.1).sum();
    let sxx: f64 = pts.iter().map(|p| p.0 * p.0).sum();
    let sxy: f64 = pts.iter().map(|p| p.0 * p.1).sum();
    let denom = n * sxx - sx * sx;
    if denom.abs() < 1e-12 {
        return Err(Error::InvalidInput(
            "x values coincide; slope undefined".into(),
        ));
    }
    let slope = (n * sxy - sx * sy) / denom;
    let intercept = (sy - slope * sx) / n;
    Ok(ExponentFit {
        slope,
        intercept,
        count: pts.len(),
    })
}

/// Adversarial lower-bound check at a quarter point.
#[derive(Debug, Clone)]
pub struct QuarterCheck {
    pub k: u64,
    pub x: BigUint,
    pub min_offset: BigUint,
    pub bound: FixedPoint,
    pub pass: bool,
}

/// At x ≈ (k + 1/4)², every product of window factors stays at least
/// (1/4)√x − c2²·x^(2θ) − 1 away from x (the −1 absorbs rounding x to an
/// integer). Passing means the exhaustive minimum respects that floor.
pub fn quarter_point_check(k: u64, theta: Rational64, c2: Rational64) -> Result<QuarterCheck> {
    if k == 0 {
        return Err(Error::InvalidInput("k must be positive".into()));
    }
    if theta >= Rational64::new(1, 4) || theta.is_negative() {
        return Err(Error::InvalidInput(format!(
            "theta = {theta} must lie in [0, 1/4)"
        )));
    }
    // nearest integer to (k + 1/4)^2 = (16k^2 + 8k + 1)/16
    let kk = BigUint::from(k);
    let x = (&kk * &kk * 16u32 + &kk * 8u32 + 9u32) / BigUint::from(16u32);
    let w = search_window(&x, theta, c2)?;
    let min_offset = brute_force_nearest(&x, &w)?.offset;
    let bound = DecInterval::sqrt_nat(&x, SCALE)
        .mul_rational(Rational64::new(1, 4))
        .sub(&DecInterval::pow_rational(&x, theta * 2, SCALE)?.mul_rational(c2 * c2))
        .sub(&DecInterval::exact_int(BigInt::one(), SCALE));
    let pass =
        DecInterval::exact_int(BigInt::from(min_offset.clone()), SCALE).definitely_ge(&bound);
    Ok(QuarterCheck {
        k,
        x,
        min_offset,
        bound: bound.to_fixed(6),
        pass,
    })
}

/// Product-gap floor check over one interval.
#[derive(Debug, Clone)]
pub struct ProductGapCheck {
    pub x: BigUint,
    pub products: usize,
    pub max_gap: BigUint,
    pub floor: FixedPoint,
    pub pass: bool,
}

/// Enumerate the distinct products a·b with both factors in the window
/// [√x − c·x^θ, √x + c·x^θ] that land in [x − c·x^(1/2+θ), x], and measure
/// the largest stretch of the interval free of them (interval endpoints
/// count as gap boundaries, matching the pigeonhole count). Passing means
/// max_gap ≥ x^(1/2−θ)/(4c). An empty product set leaves the whole interval
/// as the gap.
pub fn product_gap(x: &BigUint, theta: Rational64, c: Rational64) -> Result<ProductGapCheck> {
    let w = search_window(x, theta, c)?;
    let width = u64::try_from(&(&w.hi - &w.lo)).unwrap_or(u64::MAX);
    if width > PRODUCT_WINDOW_LIMIT {
        return Err(Error::DeskLimit {
            what: "product window width",
            got: width,
            limit: PRODUCT_WINDOW_LIMIT,
        });
    }
    let half_plus = Rational64::new(1, 2) + theta;
    let reach = DecInterval::pow_rational(x, half_plus, SCALE)?.mul_rational(c);
    let interval_lo = DecInterval::exact_int(BigInt::from(x.clone()), SCALE)
        .sub(&reach)
        .ceil_outer()
        .max(BigInt::zero())
        .to_biguint()
        .unwrap();

    let mut products: BTreeSet<BigUint> = BTreeSet::new();
    let mut a = w.lo.clone();
    while a <= w.hi {
        let mut b = a.clone();
        while b <= w.hi {
            let p = &a * &b;
            if p > *x {
                break;
            }
            if p >= interval_lo {
                products.insert(p);
            }
            b += 1u32;
        }
        a += 1u32;
    }

    let mut max_gap = BigUint::zero();
    let mut prev = interval_lo.clone();
    for p in products.iter().chain(std::iter::once(x)) {
        if *p >= prev {
            max_gap = max_gap.max(p - &prev);
        }
        prev = p.clone();
    }
    if products.is_empty() {
        max_gap = x - &interval_lo;
    }

    let floor = DecInterval::pow_rational(x, Rational64::new(1, 2) - theta, SCALE)?
        .mul_rational((c * 4).recip());
    let pass = DecInterval::exact_int(BigInt::from(max_gap.clone()), SCALE).definitely_ge(&floor);
    Ok(ProductGapCheck {
        x: x.clone(),
        products: products.len(),
        max_gap,
        floor: floor.to_fixed(6),
        pass,
    })
}

/// Number of distinct values in the n × n multiplication table.
pub fn mult_table_count(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::InvalidInput("table size must be positive".into()));
    }
    if n > MULT_TABLE_LIMIT {
        return Err(Error::DeskLimit {
            what: "multiplication table size",
            got: n,
            limit: MULT_TABLE_LIMIT,
        });
    }
    let mut seen = Bitmap::new(n * n + 1);
    for a in 1..=n {
        for b in a..=n {
            seen.set(a * b);
        }
    }
    Ok(seen.count_ones())
}

/// Erdős's multiplication-table density exponent 1 − log(e·log 2)/log 2.
pub fn erdos_alpha() -> f64 {
    1.0 - (std::f64::consts::E * 2f64.ln()).ln() / 2f64.ln()
}

/// Plain bit set indexed by value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bitmap {
    words: Vec<u64>,
    len: u64,
}

impl Bitmap {
    pub fn new(len: u64) -> Self {
        Bitmap {
            words: vec![0; len.div_ceil(64) as usize],
            len,
        }
    }

    #[inline]
    pub fn set(&mut self, i: u64) {
        debug_assert!(i < self.len);
        self.words[(i / 64) as usize] |= 1 << (i % 64);
    }

    #[inline]
    pub fn get(&self, i: u64) -> bool {
        i < self.len && self.words[(i / 64) as usize] >> (i % 64) & 1 == 1
    }

    pub fn len(&self) -> u64 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn count_ones(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }
}

fn isqrt_u64(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    let mut r = (n as f64).sqrt() as u64;
    while r.saturating_mul(r) > n {
        r -= 1;
    }
    while (r + 1).saturating_mul(r + 1) <= n {
        r += 1;
    }
    r
}

/// Bitmap over 0..=limit marking every u² + v² (u, v ≥ 0).
pub fn two_squares_sieve(limit: u64) -> Result<Bitmap> {
    if limit > SIEVE_LIMIT {
        return Err(Error::DeskLimit {
            what: "two-squares sieve limit",
            got: limit,
            limit: SIEVE_LIMIT,
        });
    }
    let mut bits = Bitmap::new(limit + 1);
    let mut u = 0u64;
    while u * u <= limit {
        let uu = u * u;
        let mut v = u;
        while uu + v * v <= limit {
            bits.set(uu + v * v);
            v += 1;
        }
        u += 1;
    }
    Ok(bits)
}

/// Segmented variant: value ranges are sieved independently (in parallel)
/// and concatenated. Produces a bitmap identical to [`two_squares_sieve`].
pub fn two_squares_sieve_segmented(limit: u64, segments: usize) -> Result<Bitmap> {
    if limit > SIEVE_LIMIT {
        return Err(Error::DeskLimit {
            what: "two-squares sieve limit",
            got: limit,
            limit: SIEVE_LIMIT,
        });
    }
    let total_words = (limit + 1).div_ceil(64) as usize;
    let segments = segments.clamp(1, total_words.max(1));
    let per = total_words.div_ceil(segments);
    let chunks: Vec<(usize, usize)> = (0..segments)
        .map(|i| (i * per, total_words.min((i + 1) * per)))
        .filter(|(a, b)| a < b)
        .collect();
    let parts: Vec<Vec<u64>> = chunks
        .par_iter()
        .map(|&(w_lo, w_hi)| {
            let v_lo = (w_lo as u64) * 64;
            let v_hi = ((w_hi as u64) * 64 - 1).min(limit);
            let mut words = vec![0u64; w_hi - w_lo];
            let mut u = 0u64;
            while u * u <= v_hi {
                let uu = u * u;
                let mut v = if uu >= v_lo {
                    u
                } else {
                    // smallest v ≥ u with u² + v² ≥ v_lo
                    let need = v_lo - uu;
                    let mut s = isqrt_u64(need);
                    if s * s < need {
                        s += 1;
                    }
                    s.max(u)
                };
                while uu + v * v <= v_hi {
                    let val = uu + v * v;
                    debug_assert!(val >= v_lo);
                    let off = val - v_lo;
                    words[(off / 64) as usize] |= 1 << (off % 64);
                    v += 1;
                }
                u += 1;
            }
            words
        })
        .collect();
    let mut words = Vec::with_capacity(total_words);
    for p in parts {
        words.extend(p);
    }
    Ok(Bitmap {
        words,
        len: limit + 1,
    })
}

/// Best sum of two squares near x found by scanning the smaller square.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoSquaresNear {
    pub x: BigUint,
    pub d: u64,
    pub center: BigUint,
    pub n: BigUint,
    pub offset: BigUint,
}

/// Over d ≤ d_max, round √(x − d²) to the nearest integer D and take
/// D² + d² as the candidate; ties go to the smaller d.
pub fn two_squares_near(x: &BigUint, d_max: u64) -> Result<TwoSquaresNear> {
    let dm = BigUint::from(d_max);
    if &dm * &dm >= *x {
        return Err(Error::InvalidInput("need d_max^2 < x".into()));
    }
    let mut best: Option<TwoSquaresNear> = None;
    for d in 0..=d_max {
        let dd = BigUint::from(d) * BigUint::from(d);
        let m = x - &dd;
        let center = nearest_sqrt_int(&m);
        let n = &center * &center + &dd;
        let offset = abs_diff(x, &n);
        if best.as_ref().is_none_or(|b| offset < b.offset) {
            best = Some(TwoSquaresNear {
                x: x.clone(),
                d,
                center,
                n,
                offset,
            });
        }
    }
    Ok(best.expect("d = 0 always yields a candidate"))
}

/// Largest difference between consecutive sums of two squares inside
/// [lo, hi], with the left endpoint of that gap. Fewer than two marked
/// values yield (0, lo).
pub fn max_gap_two_squares(lo: u64, hi: u64) -> Result<(u64, u64)> {
    if lo > hi {
        return Err(Error::InvalidInput(format!("empty range [{lo}, {hi}]")));
    }
    let bits = two_squares_sieve(hi)?;
    Ok(max_gap_in_bitmap(&bits, lo, hi))
}

/// Gap scan over an existing sieve; values outside [lo, hi] are ignored.
pub fn max_gap_in_bitmap(bits: &Bitmap, lo: u64, hi: u64) -> (u64, u64) {
    let mut prev: Option<u64> = None;
    let mut best = (0u64, lo);
    for v in lo..=hi.min(bits.len().saturating_sub(1)) {
        if !bits.get(v) {
            continue;
        }
        if let Some(p) = prev {
            if v - p > best.0 {
                best = (v - p, p);
            }
        }
        prev = Some(v);
    }
    best
}

/// Geometric grid of `points` integers spanning [lo, hi], deduplicated.
pub fn log_grid(lo: u64, hi: u64, points: usize) -> Vec<BigUint> {
    assert!(lo >= 1 && lo <= hi && points >= 2);
    let (llo, lhi) = ((lo as f64).ln(), (hi as f64).ln());
    let mut out: Vec<u64> = (0..points)
        .map(|i| {
            let t = i as f64 / (points - 1) as f64;
            (llo + t * (lhi - llo)).exp().round() as u64
        })
        .collect();
    out.dedup();
    out.into_iter().map(BigUint::from).collect()
}

/// `count` distinct log-uniform draws from [lo, hi], sorted; seeded for
/// reproducibility.
pub fn seeded_log_sample(lo: u64, hi: u64, count: usize, seed: u64) -> Vec<BigUint> {
    assert!(lo >= 1 && lo < hi);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (llo, lhi) = ((lo as f64).ln(), (hi as f64).ln());
    let mut seen = BTreeSet::new();
    while seen.len() < count {
        let v = rng.gen_range(llo..lhi).exp().round() as u64;
        seen.insert(v.clamp(lo, hi));
    }
    seen.into_iter().map(BigUint::from).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(v: u64) -> BigUint {
        BigUint::from(v)
    }

    fn rat(n: i64, d: i64) -> Rational64 {
        Rational64::new(n, d)
    }

    #[test]
    fn scan_examples() {
        let recs =
            scan_worst_offset(&[nat(1_000_000)], rat(1, 4), rat(2, 1), ScanMethod::Brute).unwrap();
        assert_eq!(recs[0].offset, nat(0));

        let recs = scan_worst_offset(&[nat(997)], rat(1, 4), rat(2, 1), ScanMethod::Brute).unwrap();
        assert_eq!(recs[0].offset, nat(2));

        let squares: Vec<BigUint> = (100u64..=120).map(|k| nat(k * k)).collect();
        for method in [ScanMethod::Brute, ScanMethod::DSearch] {
            let recs = scan_worst_offset(&squares, rat(1, 4), rat(2, 1), method).unwrap();
            assert!(recs.iter().all(|r| r.offset.is_zero()), "{method:?}");
        }
    }

    #[test]
    fn fit_examples() {
        let mk = |pts: &[(u64, u64)]| -> Vec<GapRecord> {
            pts.iter()
                .map(|&(x, o)| GapRecord {
                    x: nat(x),
                    offset: nat(o),
                    meta: String::new(),
                })
                .collect()
        };
        let f = fit_exponent(&mk(&[(100, 10), (10_000, 100)])).unwrap();
        assert!((f.slope - 0.5).abs() < 1e-12);
        assert!(f.intercept.abs() < 1e-12);

        let f = fit_exponent(&mk(&[(100, 5), (10_000, 5)])).unwrap();
        assert!(f.slope.abs() < 1e-12);

        let f = fit_exponent(&mk(&[(10, 1), (1000, 10)])).unwrap();
        assert!((f.slope - 0.5).abs() < 1e-12);

        // offset-0 records are dropped, and too few points is an error
        assert!(matches!(
            fit_exponent(&mk(&[(100, 0), (10_000, 7)])),
            Err(Error::InsufficientData(1))
        ));
    }

    #[test]
    fn quarter_example() {
        let q = quarter_point_check(100, rat(1, 10), rat(1, 1)).unwrap();
        assert_eq!(q.x, nat(10_050));
        assert_eq!(q.min_offset, nat(48));
        assert_eq!(q.bound.to_string(), "17.746552");
        assert!(q.pass);

        let q = quarter_point_check(1000, rat(1, 10), rat(1, 1)).unwrap();
        assert!(q.pass);
    }

    #[test]
    fn quarter_vacuous_when_bound_negative() {
        // tiny k: (1/4)√x − x^(2θ) − 1 < 0 ≤ offset
        let q = quarter_point_check(2, rat(1, 5), rat(1, 1)).unwrap();
        assert!(q.bound.to_f64() < 0.0);
        assert!(q.pass);
    }

    #[test]
    fn quarter_rejects_theta_at_quarter() {
        assert!(quarter_point_check(100, rat(1, 4), rat(1, 1)).is_err());
    }

    #[test]
    fn product_gap_example() {
        let g = product_gap(&nat(10_000), rat(1, 4), rat(1, 1)).unwrap();
        assert_eq!(g.products, 90);
        assert_eq!(g.max_gap, nat(65));
        assert_eq!(g.floor.to_string(), "2.500000");
        assert!(g.pass);

        let g = product_gap(&nat(1_000_000), rat(3, 10), rat(1, 1)).unwrap();
        assert!(g.pass);
    }

    #[test]
    fn product_gap_degenerate_window() {
        // x = k², θ = 0, c = 1/2: window collapses to {k}, single product k²
        let g = product_gap(&nat(10_000), rat(0, 1), rat(1, 2)).unwrap();
        assert_eq!(g.products, 1);
        // the single product sits at the right endpoint; the gap spans back
        // to the interval's left end: 10000 − ⌈10000 − 50⌉ = 50
        assert_eq!(g.max_gap, nat(50));
        assert!(g.pass);
    }

    #[test]
    fn mult_table_examples() {
        assert_eq!(mult_table_count(1).unwrap(), 1);
        assert_eq!(mult_table_count(2).unwrap(), 3);
        assert_eq!(mult_table_count(10).unwrap(), 42);
        assert!(mult_table_count(0).is_err());
        assert!(mult_table_count(MULT_TABLE_LIMIT + 1).is_err());
    }

    #[test]
    fn erdos_alpha_value() {
        let a = erdos_alpha();
        assert!((a - 0.0861).abs() < 1e-4);
        assert!((a - 0.086).abs() < 1e-3);
    }

    #[test]
    fn sieve_marks_examples() {
        let bits = two_squares_sieve(100).unwrap();
        assert!(bits.get(25)); // 3² + 4²
        assert!(!bits.get(7)); // 7 ≡ 3 (mod 4), prime
        assert!(bits.get(0));
        assert!(bits.get(2));
        assert!(!bits.get(3));
    }

    // sum-of-two-squares characterization: every prime p ≡ 3 (mod 4) must
    // divide to an even power
    fn representable(mut m: u64) -> bool {
        if m == 0 {
            return true;
        }
        let mut p = 2u64;
        while p * p <= m {
            if m % p == 0 {
                let mut e = 0;
                while m % p == 0 {
                    m /= p;
                    e += 1;
                }
                if p % 4 == 3 && e % 2 == 1 {
                    return false;
                }
            }
            p += 1;
        }
        if m > 1 && m % 4 == 3 {
            return false;
        }
        true
    }

    #[test]
    fn sieve_agrees_with_characterization_to_100() {
        let bits = two_squares_sieve(100).unwrap();
        for m in 0..=100 {
            assert_eq!(bits.get(m), representable(m), "m = {m}");
        }
    }

    #[test]
    fn segmented_sieve_is_identical() {
        for limit in [0u64, 1, 63, 64, 65, 1000, 12_345] {
            let single = two_squares_sieve(limit).unwrap();
            for segs in [1usize, 2, 3, 8] {
                let seg = two_squares_sieve_segmented(limit, segs).unwrap();
                assert_eq!(single, seg, "limit = {limit}, segs = {segs}");
            }
        }
    }

    #[test]
    fn two_squares_near_examples() {
        let r = two_squares_near(&nat(103), 5).unwrap();
        assert_eq!((r.d, r.center, r.n, r.offset), (2, nat(10), nat(104), nat(1)));

        let r = two_squares_near(&nat(10_000), 3).unwrap();
        assert_eq!((r.d, r.offset), (0, nat(0)));

        let r = two_squares_near(&nat(2), 1).unwrap();
        assert_eq!((r.d, r.center, r.n, r.offset), (1, nat(1), nat(2), nat(0)));

        assert!(two_squares_near(&nat(10), 4).is_err());
    }

    #[test]
    fn max_gap_examples() {
        // marked values in [1, 10]: 1, 2, 4, 5, 8, 9, 10 → largest jump 5 → 8
        assert_eq!(max_gap_two_squares(1, 10).unwrap(), (3, 5));
        // adjacent marked values k², k²+1
        assert_eq!(max_gap_two_squares(49, 50).unwrap(), (1, 49));
        // fewer than two marked values
        assert_eq!(max_gap_two_squares(3, 3).unwrap(), (0, 3));
    }

    #[test]
    fn grids_are_deterministic() {
        let g = log_grid(10_000, 100_000_000, 200);
        assert_eq!(g.len(), 200);
        assert!(g.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(g.first().unwrap(), &nat(10_000));
        assert_eq!(g.last().unwrap(), &nat(100_000_000));

        let s1 = seeded_log_sample(10_000, 1_000_000, 100, 42);
        let s2 = seeded_log_sample(10_000, 1_000_000, 100, 42);
        assert_eq!(s1, s2);
        assert_eq!(s1.len(), 100);
    }
}
