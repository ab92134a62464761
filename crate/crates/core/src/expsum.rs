//! Quadratic Gauss sums, twisted incomplete Salié sums, Fejér windows and
//! the fractional-part counter they control.
//!
//! The sums are evaluated directly (no sub-quadratic tricks) with
//! compensated accumulation, and with quadratic phases looked up from an
//! exact residue table so the only drift left is the final rounding of each
//! term. Counting decisions, by contrast, never touch floating point: window
//! membership is settled in exact rational arithmetic, or conservatively
//! from certified enclosures when the window width is irrational.

use num_bigint::BigUint;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::arith::{isqrt, jacobi, mod_inverse};
use crate::error::{Error, Result};
use crate::fixed::DecInterval;
use crate::search::floor_pow_times;

/// Hard cap on terms per directly-evaluated sum.
pub const MAX_TERMS: u64 = 20_000_000;
/// Per-term roundoff must stay below this for a sum to be trusted.
const PER_TERM_TRUST: f64 = 1e-9;
/// Digits used for enclosure-based window decisions.
const SCALE: u32 = 30;
/// Enclosure margin: points this close to a window endpoint are rejected.
const MARGIN_DIGITS: u32 = 25;
/// Cap on the fractional-count scan length.
const MAX_COUNT: u64 = 100_000_000;

/// Compensated (Kahan) accumulator for complex terms.
#[derive(Debug, Clone, Default)]
pub struct KahanSum {
    re: f64,
    re_c: f64,
    im: f64,
    im_c: f64,
}

impl KahanSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, z: Complex64) {
        let y = z.re - self.re_c;
        let t = self.re + y;
        self.re_c = (t - self.re) - y;
        self.re = t;
        let y = z.im - self.im_c;
        let t = self.im + y;
        self.im_c = (t - self.im) - y;
        self.im = t;
    }

    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }
}

/// e(u) = exp(2πiu), with the argument reduced to [-1/2, 1/2] first.
#[inline]
fn e(u: f64) -> Complex64 {
    let t = std::f64::consts::TAU * (u - u.round());
    Complex64::new(t.cos(), t.sin())
}

/// Exact table of e(j/q) for j mod q; quadratic phases index into it with
/// integer residues, so they never drift.
struct PhaseTable {
    q: u64,
    table: Vec<Complex64>,
}

impl PhaseTable {
    fn new(q: u64) -> Self {
        let table = (0..q).map(|j| e(j as f64 / q as f64)).collect();
        PhaseTable { q, table }
    }

    #[inline]
    fn at(&self, j: u64) -> Complex64 {
        debug_assert!(j < self.q);
        self.table[j as usize]
    }
}

/// Reject sums whose predicted roundoff exceeds the trust budget of
/// 10^-9 per term: the dominant loss is the reduction of the linear phase
/// arguments λh and μk.
fn roundoff_guard(terms: u64, max_linear_arg: f64) -> Result<()> {
    if terms > MAX_TERMS {
        return Err(Error::DeskLimit {
            what: "sum terms",
            got: terms,
            limit: MAX_TERMS,
        });
    }
    let per_term = (8.0 + std::f64::consts::TAU * max_linear_arg.abs()) * f64::EPSILON;
    if per_term > PER_TERM_TRUST {
        return Err(Error::RoundoffBudget { terms });
    }
    Ok(())
}

fn gauss_sum_with(table: &PhaseTable, a: i64, b: i64) -> Complex64 {
    let q = table.q as i128;
    let mut acc = KahanSum::new();
    for d in 0..table.q {
        let d = d as i128;
        let idx = (a as i128 * d * d + b as i128 * d).rem_euclid(q) as u64;
        acc.add(table.at(idx));
    }
    acc.value()
}

/// Complete quadratic Gauss sum G(a, b; q) = Σ_{d mod q} e((ad² + bd)/q),
/// evaluated term by term with compensated summation; the result is within
/// q · 10^-12 of the exact value.
pub fn gauss_sum(a: i64, b: i64, q: u64) -> Result<Complex64> {
    if q == 0 {
        return Err(Error::InvalidInput("modulus must be positive".into()));
    }
    roundoff_guard(q, 0.0)?;
    Ok(gauss_sum_with(&PhaseTable::new(q), a, b))
}

/// Parameters of one twisted incomplete Salié sum
/// Σ_{1≤h≤H, (h,q)=1} e(λh) (h/q) Σ_{0≤k<K} e(μk) e(a·h̄·k²/q).
#[derive(Debug, Clone, PartialEq)]
pub struct ExpSumQuery {
    pub a: i64,
    pub q: u64,
    pub h_max: f64,
    pub k_max: f64,
    pub lambda: f64,
    pub mu: f64,
}

impl ExpSumQuery {
    pub fn new(a: i64, q: u64, h_max: f64, k_max: f64, lambda: f64, mu: f64) -> Self {
        ExpSumQuery {
            a,
            q,
            h_max,
            k_max,
            lambda,
            mu,
        }
    }
}

/// Evaluate the twisted incomplete Salié sum of `query`. Empty ranges sum
/// to zero; even moduli are rejected (the Jacobi twist is undefined there).
/// Accumulated roundoff stays below (number of terms) · 10^-12.
pub fn salie_sum(query: &ExpSumQuery) -> Result<Complex64> {
    let q = query.q;
    if q % 2 == 0 {
        return Err(Error::EvenModulus(q));
    }
    if q > MAX_TERMS {
        return Err(Error::DeskLimit {
            what: "modulus",
            got: q,
            limit: MAX_TERMS,
        });
    }
    let h_count = if query.h_max < 1.0 {
        0
    } else {
        query.h_max.floor() as u64
    };
    let k_count = if query.k_max <= 0.0 {
        0
    } else {
        query.k_max.ceil() as u64
    };
    if h_count == 0 || k_count == 0 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let max_arg = (query.lambda.abs() * h_count as f64).max(query.mu.abs() * k_count as f64);
    roundoff_guard(h_count.saturating_mul(k_count), max_arg)?;

    let table = PhaseTable::new(q);
    // k² mod q is h-independent
    let k_sq: Vec<u64> = (0..k_count).map(|k| (k % q) * (k % q) % q).collect();
    let mu_phase: Vec<Complex64> = (0..k_count).map(|k| e(query.mu * k as f64)).collect();
    let a_mod = query.a.rem_euclid(q as i64) as u64;

    let mut outer = KahanSum::new();
    for h in 1..=h_count {
        if h.gcd(&q) != 1 {
            continue;
        }
        let twist = jacobi(h as i64, q)? as f64;
        let h_bar = mod_inverse(h as i64, q)?;
        let c = a_mod * h_bar % q;
        let mut inner = KahanSum::new();
        for k in 0..k_count as usize {
            inner.add(mu_phase[k] * table.at(c * k_sq[k] % q));
        }
        outer.add(e(query.lambda * h as f64) * twist * inner.value());
    }
    Ok(outer.value())
}

/// The conjectured envelope
/// (H^(1/2)K^(1/2) + H^(3/4) + K + q^(-1/2)HK + q^(-1/2)K²) · q^ε.
pub fn conjectured_bound(h: f64, k: f64, q: u64, eps: f64) -> f64 {
    debug_assert!(h >= 1.0 && k >= 1.0 && q >= 2 && eps >= 0.0);
    let qf = q as f64;
    let base = (h * k).sqrt() + h.powf(0.75) + k + (h * k + k * k) / qf.sqrt();
    base * qf.powf(eps)
}

/// One evaluated probe query.
#[derive(Debug, Clone)]
pub struct ProbeRow {
    pub query: ExpSumQuery,
    pub abs_sum: f64,
    pub bound: f64,
    pub ratio: f64,
}

/// Probe outcome: evaluated rows in grid order plus the queries that were
/// skipped with the reason.
#[derive(Debug, Clone, Default)]
pub struct ProbeReport {
    pub rows: Vec<ProbeRow>,
    pub skipped: Vec<(ExpSumQuery, String)>,
}

impl ProbeReport {
    /// Largest |sum|/bound ratio with its row index.
    pub fn max_ratio(&self) -> Option<(usize, f64)> {
        self.rows
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.ratio.total_cmp(&b.1.ratio))
            .map(|(i, r)| (i, r.ratio))
    }
}

fn is_square(n: u64) -> bool {
    let s = (n as f64).sqrt() as u64;
    for c in s.saturating_sub(1)..=s + 1 {
        if c * c == n {
            return true;
        }
    }
    false
}

fn validate_probe_query(q: &ExpSumQuery) -> std::result::Result<(), String> {
    if q.q < 2 {
        return Err("q must be >= 2".into());
    }
    if q.q % 2 == 0 {
        return Err("q must be odd".into());
    }
    if is_square(q.q) {
        return Err("q must not be a perfect square".into());
    }
    if (q.a.rem_euclid(q.q as i64) as u64).gcd(&q.q) != 1 {
        return Err("a must be coprime to q".into());
    }
    if q.h_max < 1.0 || q.k_max < 1.0 {
        return Err("H and K must be >= 1".into());
    }
    Ok(())
}

/// Evaluate |Salié sum| / conjectured bound across a grid. Queries that
/// violate the conjecture's hypotheses are skipped and reported as such;
/// row order matches grid order whatever the worker count.
pub fn probe_conjecture(grid: &[ExpSumQuery], eps: f64) -> ProbeReport {
    enum Outcome {
        Row(ProbeRow),
        Skip(ExpSumQuery, String),
    }
    let outcomes: Vec<Outcome> = grid
        .par_iter()
        .map(|query| {
            if let Err(reason) = validate_probe_query(query) {
                return Outcome::Skip(query.clone(), reason);
            }
            match salie_sum(query) {
                Ok(v) => {
                    let bound = conjectured_bound(query.h_max, query.k_max, query.q, eps);
                    Outcome::Row(ProbeRow {
                        query: query.clone(),
                        abs_sum: v.norm(),
                        bound,
                        ratio: v.norm() / bound,
                    })
                }
                Err(err) => Outcome::Skip(query.clone(), err.to_string()),
            }
        })
        .collect();
    let mut report = ProbeReport::default();
    for o in outcomes {
        match o {
            Outcome::Row(r) => report.rows.push(r),
            Outcome::Skip(q, why) => report.skipped.push((q, why)),
        }
    }
    report
}

/// The default probe grid: odd non-square q up to q_max, twists a ≤ a_max
/// coprime to q, H and K spanning the √q / q / 2q regimes, and shifts
/// λ, μ ∈ {0, 0.3}.
pub fn default_probe_grid(q_max: u64, a_max: i64) -> Vec<ExpSumQuery> {
    let mut grid = Vec::new();
    let shifts = [0.0, 0.3];
    for q in (3..=q_max).step_by(2) {
        if is_square(q) {
            continue;
        }
        let sizes = [(q as f64).sqrt().ceil(), q as f64, 2.0 * q as f64];
        for a in 1..=a_max {
            if (a.rem_euclid(q as i64) as u64).gcd(&q) != 1 {
                continue;
            }
            for &h in &sizes {
                for &k in &sizes {
                    for &lambda in &shifts {
                        for &mu in &shifts {
                            grid.push(ExpSumQuery::new(a, q, h, k, lambda, mu));
                        }
                    }
                }
            }
        }
    }
    grid
}

/// Fejér coefficient c(h) = Δ·(sin(πΔh)/(πΔh))², with c(0) = Δ as the
/// limiting value.
pub fn fejer_coeff(delta: f64, h: i64) -> Result<f64> {
    if !(delta > 0.0 && delta < 0.5) {
        return Err(Error::InvalidInput(format!(
            "delta = {delta} must lie in (0, 1/2)"
        )));
    }
    if h == 0 {
        return Ok(delta);
    }
    let t = std::f64::consts::PI * delta * h as f64;
    let s = t.sin() / t;
    Ok(delta * s * s)
}

/// Width-Δ window shifted to λ on the unit circle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FejerWindow {
    pub delta: f64,
    pub lambda: f64,
}

impl FejerWindow {
    pub fn new(delta: f64, lambda: f64) -> Result<Self> {
        if !(delta > 0.0 && delta < 0.5) {
            return Err(Error::InvalidInput(format!(
                "delta = {delta} must lie in (0, 1/2)"
            )));
        }
        Ok(FejerWindow {
            delta,
            lambda: lambda.rem_euclid(1.0),
        })
    }

    pub fn coeff(&self, h: i64) -> f64 {
        fejer_coeff(self.delta, h).expect("delta validated at construction")
    }

    /// Unit triangle: 1 − |x| on [−1, 1], zero outside.
    pub fn triangle(x: f64) -> f64 {
        (1.0 - x.abs()).max(0.0)
    }

    /// Width-Δ tent: 1 − |x|/Δ on [−Δ, Δ], zero outside.
    pub fn tent(&self, x: f64) -> f64 {
        (1.0 - x.abs() / self.delta).max(0.0)
    }

    /// 1-periodization of the tent, shifted right by λ; peaks at x ≡ λ.
    pub fn periodic_tent(&self, x: f64) -> f64 {
        let u = x - self.lambda;
        self.tent(u - u.round())
    }

    /// Squared sinc (sin πy / πy)², the transform pairing the triangle.
    pub fn sinc_sq(y: f64) -> f64 {
        if y == 0.0 {
            return 1.0;
        }
        let t = std::f64::consts::PI * y;
        let s = t.sin() / t;
        s * s
    }
}

/// Selector for [`window_eval`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WindowKind {
    Triangle,
    Tent,
    PeriodicTent,
    SincSq,
}

pub fn window_eval(kind: WindowKind, w: &FejerWindow, x: f64) -> f64 {
    match kind {
        WindowKind::Triangle => FejerWindow::triangle(x),
        WindowKind::Tent => w.tent(x),
        WindowKind::PeriodicTent => w.periodic_tent(x),
        WindowKind::SincSq => FejerWindow::sinc_sq(x),
    }
}

/// Result of a fractional-part count.
#[derive(Debug, Clone, PartialEq)]
pub struct CountResult {
    pub count: u64,
    pub main_term: f64,
    pub n_max: u64,
    pub p: u64,
    pub q: u64,
}

/// Exact strict test for circle-distance(r/q, center) < radius. The center
/// is reduced mod 1 first; when the cross products could overflow i128 the
/// comparison falls back to big integers.
fn circle_dist_lt(r: u64, q: u64, center: Rational64, radius: Rational64) -> bool {
    let center = center - center.floor();
    let (cn, cd) = (*center.numer(), *center.denom());
    let (rn, rd) = (*radius.numer(), *radius.denom());
    debug_assert!(cn >= 0 && cd > 0 && rn > 0 && rd > 0);
    let bits = q.ilog2() + (cd as u64).ilog2() + (rd as u64).ilog2();
    if bits <= 120 {
        let den = q as i128 * cd as i128;
        let t = (r as i128 * cd as i128 - cn as i128 * q as i128).rem_euclid(den);
        let dist = t.min(den - t);
        dist * rd as i128 < rn as i128 * den
    } else {
        use num_bigint::BigInt;
        let den = BigInt::from(q) * cd;
        let t = (BigInt::from(r) * cd - BigInt::from(cn) * q).mod_floor(&den);
        let dist = t.clone().min(&den - &t);
        dist * rd < rn * den
    }
}

fn validate_count_args(p: u64, q: u64, delta: Rational64, n_max: u64) -> Result<()> {
    if q == 0 {
        return Err(Error::InvalidInput("modulus must be positive".into()));
    }
    if p.gcd(&q) != 1 {
        return Err(Error::InvalidInput(format!(
            "p = {p} and q = {q} must be coprime"
        )));
    }
    if !delta.is_positive() || delta > Rational64::new(1, 2) {
        return Err(Error::InvalidInput(format!(
            "delta = {delta} must lie in (0, 1/2]"
        )));
    }
    if n_max > MAX_COUNT {
        return Err(Error::DeskLimit {
            what: "count length",
            got: n_max,
            limit: MAX_COUNT,
        });
    }
    Ok(())
}

/// Count of 1 ≤ n ≤ N with {p·n²/q} in the open window (λ−Δ, λ+Δ) mod 1,
/// decided in exact rational arithmetic.
pub fn fractional_count(
    p: u64,
    q: u64,
    lambda: Rational64,
    delta: Rational64,
    n_max: u64,
) -> Result<CountResult> {
    validate_count_args(p, q, delta, n_max)?;
    let mut count = 0;
    for n in 1..=n_max {
        let nq = n % q;
        let r = (p as u128 * (nq as u128 * nq as u128 % q as u128) % q as u128) as u64;
        if circle_dist_lt(r, q, lambda, delta) {
            count += 1;
        }
    }
    Ok(CountResult {
        count,
        main_term: delta.to_f64().unwrap_or(f64::NAN) * n_max as f64,
        n_max,
        p,
        q,
    })
}

/// Both sides of the counting inequality 1 + 2S ≥ Σ_n f(n/N)·g_λ(p n²/q).
#[derive(Debug, Clone, PartialEq)]
pub struct CountingCheck {
    pub lhs: f64,
    pub rhs: f64,
    pub pass: bool,
}

/// The counting function S is exact, the smoothed side is a short double
/// sum in f64; pass means lhs ≥ rhs − 10^-9.
pub fn counting_inequality_check(
    p: u64,
    q: u64,
    lambda: Rational64,
    delta: Rational64,
    n_max: u64,
) -> Result<CountingCheck> {
    let s = fractional_count(p, q, lambda, delta, n_max)?.count;
    let lhs = 1.0 + 2.0 * s as f64;
    let window = FejerWindow::new(
        delta.to_f64().unwrap_or(0.25).min(0.5 - f64::EPSILON),
        lambda.to_f64().unwrap_or(0.0),
    )?;
    let mut rhs = 0.0;
    if n_max == 0 {
        rhs = window.periodic_tent(0.0);
    } else {
        for n in -(n_max as i64)..=n_max as i64 {
            let f = FejerWindow::triangle(n as f64 / n_max as f64);
            if f == 0.0 {
                continue;
            }
            let na = n.unsigned_abs() % q;
            let r = (p as u128 * (na as u128 * na as u128 % q as u128) % q as u128) as u64;
            rhs += f * window.periodic_tent(r as f64 / q as f64);
        }
    }
    Ok(CountingCheck {
        lhs,
        rhs,
        pass: lhs >= rhs - 1e-9,
    })
}

/// q = 2⌊√x⌋ + 1, bumped to 2⌊√x⌋ + 3 when that is a perfect square; the
/// result is always odd and never a square (consecutive odd squares are at
/// least 16 apart).
pub fn choose_modulus(x: &BigUint) -> Result<u64> {
    if x.is_zero() {
        return Err(Error::InvalidInput("x must be positive".into()));
    }
    let s = isqrt(x);
    let s = u64::try_from(&s).map_err(|_| Error::DeskLimit {
        what: "modulus",
        got: u64::MAX,
        limit: MAX_COUNT,
    })?;
    let q = 2 * s + 1;
    Ok(if is_square(q) { q + 2 } else { q })
}

/// Per-shift row of [`main_term_compare`].
#[derive(Debug, Clone, PartialEq)]
pub struct MainTermRow {
    pub lambda: Rational64,
    pub count: u64,
    pub quarter_main: f64,
    pub zero_hit: bool,
}

/// Report of the counting pipeline at one x.
#[derive(Debug, Clone, PartialEq)]
pub struct MainTermReport {
    pub q: u64,
    pub n_max: u64,
    pub delta: f64,
    pub rows: Vec<MainTermRow>,
}

/// The end-to-end counting pipeline: q = choose_modulus(x), N = ⌊x^θ⌋,
/// Δ = x^-(θ-2ε); for each λ count n ≤ N with {n²/q} in the window of
/// half-width Δ/2 around λ and compare against the ΔN/4 main term.
/// Membership is decided conservatively from certified enclosures of Δ.
pub fn main_term_compare(
    x: &BigUint,
    theta: Rational64,
    eps: Rational64,
    lambda_grid: &[Rational64],
) -> Result<MainTermReport> {
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
    let q = choose_modulus(x)?;
    let n_big = floor_pow_times(x, theta, Rational64::from_integer(1))?;
    let n_max = u64::try_from(&n_big).map_err(|_| Error::DeskLimit {
        what: "count length",
        got: u64::MAX,
        limit: MAX_COUNT,
    })?;
    if n_max > MAX_COUNT {
        return Err(Error::DeskLimit {
            what: "count length",
            got: n_max,
            limit: MAX_COUNT,
        });
    }
    if q <= 2 * n_max {
        return Err(Error::ModulusTooSmall {
            q,
            twice_n: 2 * n_max,
        });
    }
    // keep q·denominator(λ) comfortably inside i64 for the exact distances
    if q >= 1 << 40 {
        return Err(Error::DeskLimit {
            what: "modulus",
            got: q,
            limit: 1 << 40,
        });
    }
    if lambda_grid.iter().any(|l| *l.denom() > 1 << 20) {
        return Err(Error::InvalidInput(
            "lambda denominators above 2^20 are not supported".into(),
        ));
    }
    let delta = DecInterval::pow_rational(x, -(theta - eps * 2), SCALE)?;
    let half = delta.mul_rational(Rational64::new(1, 2));
    let delta_mid = delta.mid_f64();

    let rows = lambda_grid
        .iter()
        .map(|&lambda| {
            let reduced = lambda - lambda.floor();
            let mut count = 0u64;
            for n in 1..=n_max {
                let nq = n % q;
                let r = (nq as u128 * nq as u128 % q as u128) as u64;
                // exact circle distance |r/q − λ| as a rational
                let cd = *reduced.denom() as i128;
                let den = q as i128 * cd;
                let t = (r as i128 * cd - *reduced.numer() as i128 * q as i128).rem_euclid(den);
                let dist = t.min(den - t);
                let dist_iv =
                    DecInterval::from_rational(Rational64::new(dist as i64, den as i64), SCALE);
                if dist_iv.lt_with_margin(&half, MARGIN_DIGITS) {
                    count += 1;
                }
            }
            MainTermRow {
                lambda,
                count,
                quarter_main: delta_mid * n_max as f64 / 4.0,
                zero_hit: count == 0,
            }
        })
        .collect();
    Ok(MainTermReport {
        q,
        n_max,
        delta: delta_mid,
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const SQRT3: f64 = 1.7320508075688772;

    fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
        (a - b).norm() <= tol
    }

    #[test]
    fn gauss_hand_values() {
        assert!(close(
            gauss_sum(1, 0, 1).unwrap(),
            Complex64::new(1.0, 0.0),
            1e-14
        ));
        // G(1,0;3) = 1 + 2e(1/3) = i√3
        assert!(close(
            gauss_sum(1, 0, 3).unwrap(),
            Complex64::new(0.0, SQRT3),
            1e-12
        ));
        assert!((gauss_sum(2, 0, 5).unwrap().norm() - 5f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn gauss_magnitude_law_small() {
        // G(a,0;q) = ε_q √q (a/q), ε_q = 1 or i by q mod 4
        for q in (3u64..60).step_by(2) {
            let eps_q = if q % 4 == 1 {
                Complex64::new(1.0, 0.0)
            } else {
                Complex64::new(0.0, 1.0)
            };
            for a in 1..q {
                if a.gcd(&q) != 1 {
                    continue;
                }
                let expected = eps_q * (q as f64).sqrt() * jacobi(a as i64, q).unwrap() as f64;
                let got = gauss_sum(a as i64, 0, q).unwrap();
                assert!(close(got, expected, 1e-9), "a={a} q={q} got={got}");
            }
        }
    }

    #[test]
    fn completing_the_square_preserves_magnitude() {
        for (a, b, q) in [(1i64, 1i64, 9u64), (2, 3, 15), (4, 7, 21), (5, 11, 33)] {
            let with_b = gauss_sum(a, b, q).unwrap().norm();
            let without = gauss_sum(a, 0, q).unwrap().norm();
            assert!((with_b - without).abs() < 1e-9, "a={a} b={b} q={q}");
        }
    }

    #[test]
    fn salie_hand_values() {
        let v = salie_sum(&ExpSumQuery::new(1, 3, 2.0, 2.0, 0.0, 0.0)).unwrap();
        assert!(close(v, Complex64::new(0.0, SQRT3), 1e-12));

        let empty = salie_sum(&ExpSumQuery::new(1, 3, 0.5, 2.0, 0.0, 0.0)).unwrap();
        assert!(close(empty, Complex64::new(0.0, 0.0), 0.0));

        let single = salie_sum(&ExpSumQuery::new(1, 5, 1.0, 1.0, 0.0, 0.0)).unwrap();
        assert!(close(single, Complex64::new(1.0, 0.0), 1e-14));

        assert!(salie_sum(&ExpSumQuery::new(1, 4, 2.0, 2.0, 0.0, 0.0)).is_err());
    }

    #[test]
    fn salie_reduces_to_character_sum_at_k1() {
        // K = 1, λ = μ = 0: the sum collapses to Σ_{h≤H,(h,q)=1} (h/q)
        for q in [3u64, 7, 15, 21, 55] {
            for h_max in [1u64, 3, 10, 25] {
                let got =
                    salie_sum(&ExpSumQuery::new(2, q, h_max as f64, 1.0, 0.0, 0.0)).unwrap();
                let direct: f64 = (1..=h_max)
                    .filter(|h| h.gcd(&q) == 1)
                    .map(|h| jacobi(h as i64, q).unwrap() as f64)
                    .sum();
                assert!(
                    close(got, Complex64::new(direct, 0.0), 1e-10),
                    "q={q} H={h_max}"
                );
            }
        }
    }

    #[test]
    fn conjectured_bound_values() {
        assert!((conjectured_bound(1.0, 1.0, 2, 0.0) - (3.0 + 2f64.sqrt())).abs() < 1e-12);
        assert!((conjectured_bound(4.0, 4.0, 26, 0.0) - 17.104).abs() < 1e-3);
        // q^eps scaling
        let b0 = conjectured_bound(5.0, 7.0, 11, 0.0);
        let b1 = conjectured_bound(5.0, 7.0, 11, 0.1);
        assert!((b1 / b0 - 11f64.powf(0.1)).abs() < 1e-12);
    }

    #[test]
    fn probe_singleton_and_empty() {
        let report = probe_conjecture(&[ExpSumQuery::new(1, 3, 2.0, 2.0, 0.0, 0.0)], 0.0);
        assert_eq!(report.rows.len(), 1);
        let r = &report.rows[0];
        assert!((r.abs_sum - SQRT3).abs() < 1e-12);
        assert!((r.ratio - 0.168150559288582).abs() < 1e-9);

        let empty = probe_conjecture(&[], 0.1);
        assert!(empty.rows.is_empty() && empty.skipped.is_empty());
    }

    #[test]
    fn probe_skips_bad_queries() {
        let grid = vec![
            ExpSumQuery::new(1, 9, 3.0, 3.0, 0.0, 0.0),  // square q
            ExpSumQuery::new(3, 15, 3.0, 3.0, 0.0, 0.0), // gcd(a,q) > 1
            ExpSumQuery::new(1, 8, 3.0, 3.0, 0.0, 0.0),  // even q
            ExpSumQuery::new(1, 7, 3.0, 3.0, 0.0, 0.0),  // fine
        ];
        let report = probe_conjecture(&grid, 0.1);
        assert_eq!(report.rows.len(), 1);
        assert_eq!(report.skipped.len(), 3);
        assert_eq!(report.rows[0].query.q, 7);
    }

    #[test]
    fn default_grid_respects_hypotheses() {
        let grid = default_probe_grid(30, 5);
        assert!(!grid.is_empty());
        for q in &grid {
            assert!(q.q % 2 == 1 && !is_square(q.q));
            assert_eq!((q.a as u64).gcd(&q.q), 1);
            assert!(q.h_max >= 1.0 && q.k_max >= 1.0);
        }
        // probing it skips nothing
        let report = probe_conjecture(&grid, 0.1);
        assert!(report.skipped.is_empty());
        assert_eq!(report.rows.len(), grid.len());
    }

    #[test]
    fn fejer_coeff_values() {
        // sin(π·1) vanishes
        assert!(fejer_coeff(0.25, 4).unwrap().abs() < 1e-30);
        let c = fejer_coeff(0.25, 2).unwrap();
        assert!((c - 1.0 / (std::f64::consts::PI * std::f64::consts::PI)).abs() < 1e-15);
        assert_eq!(fejer_coeff(0.3, 0).unwrap(), 0.3);
        assert!(fejer_coeff(0.5, 1).is_err());
        assert!(fejer_coeff(0.0, 1).is_err());
    }

    #[test]
    fn fejer_tail_envelope() {
        // c(h) ≤ 1/(π²Δh²), from sin² ≤ 1
        for &delta in &[0.05, 0.1, 0.25, 0.4] {
            for h in 1..=1000i64 {
                let c = fejer_coeff(delta, h).unwrap();
                let envelope = 1.0 / (std::f64::consts::PI.powi(2) * delta * (h as f64).powi(2));
                assert!(c <= envelope * (1.0 + 1e-12), "delta={delta} h={h}");
            }
        }
    }

    #[test]
    fn window_values() {
        let w = FejerWindow::new(0.1, 0.3).unwrap();
        assert_eq!(FejerWindow::triangle(0.0), 1.0);
        assert_eq!(FejerWindow::triangle(1.0), 0.0);
        assert_eq!(FejerWindow::triangle(-1.0), 0.0);
        assert!((w.tent(0.05) - 0.5).abs() < 1e-15);
        assert_eq!(w.periodic_tent(0.3), 1.0);
        assert_eq!(w.periodic_tent(1.3), 1.0);
        let fh = FejerWindow::sinc_sq(0.5);
        assert!((fh - 4.0 / std::f64::consts::PI.powi(2)).abs() < 1e-15);
        assert_eq!(FejerWindow::sinc_sq(0.0), 1.0);
        assert_eq!(window_eval(WindowKind::Triangle, &w, 0.5), 0.5);
    }

    #[test]
    fn fourier_synthesis_converges() {
        // |g_λ(x) − Σ_{|h|≤M} c(h)e(−λh)e(hx)| ≤ Σ_{|h|>M} 1/(π²Δh²)
        let w = FejerWindow::new(0.1, 0.3).unwrap();
        let m = 100i64;
        let tail: f64 = (m + 1..m + 2_000_000)
            .map(|h| 1.0 / (std::f64::consts::PI.powi(2) * w.delta * (h as f64).powi(2)))
            .sum::<f64>()
            * 2.0;
        let mut worst: f64 = 0.0;
        for i in 0..1000 {
            let x = i as f64 / 1000.0;
            let mut acc = KahanSum::new();
            for h in -m..=m {
                let c = w.coeff(h);
                acc.add(e(-w.lambda * h as f64) * e(h as f64 * x) * c);
            }
            let err = (acc.value().re - w.periodic_tent(x)).abs();
            let imag = acc.value().im.abs();
            worst = worst.max(err).max(imag);
        }
        assert!(worst <= tail, "worst = {worst}, tail = {tail}");
    }

    #[test]
    fn fractional_count_examples() {
        let r = fractional_count(1, 5, Rational64::new(0, 1), Rational64::new(1, 10), 10).unwrap();
        assert_eq!(r.count, 2); // n = 5, 10
        assert!((r.main_term - 1.0).abs() < 1e-15);

        // Δ = 1/2: open window covers the circle minus one point
        let r = fractional_count(1, 3, Rational64::new(0, 1), Rational64::new(1, 2), 3).unwrap();
        assert_eq!(r.count, 3);

        let r = fractional_count(1, 7, Rational64::new(1, 2), Rational64::new(1, 20), 5).unwrap();
        assert_eq!(r.count, 0);

        assert!(fractional_count(2, 4, Rational64::new(0, 1), Rational64::new(1, 10), 5).is_err());
        assert!(fractional_count(1, 5, Rational64::new(0, 1), Rational64::new(3, 5), 5).is_err());
    }

    #[test]
    fn fractional_count_partition_sums_to_n() {
        // m shifted windows of half-width 1/(2m) tile the circle; the shift
        // 1/(4mq) keeps every residue k/q off the window endpoints
        for (q, m, n_max) in [(7u64, 5i64, 20u64), (13, 4, 50), (2001, 10, 47)] {
            let mut total = 0;
            for j in 0..m {
                let lambda =
                    Rational64::new(2 * j + 1, 2 * m) + Rational64::new(1, 4 * m * q as i64);
                let r = fractional_count(1, q, lambda, Rational64::new(1, 2 * m), n_max).unwrap();
                total += r.count;
            }
            assert_eq!(total, n_max, "q={q} m={m}");
        }
    }

    #[test]
    fn counting_inequality_examples() {
        let c =
            counting_inequality_check(1, 5, Rational64::new(0, 1), Rational64::new(1, 10), 10)
                .unwrap();
        assert_eq!(c.lhs, 5.0);
        assert!(c.pass);

        // N = 0: lhs = 1 ≥ rhs = g_λ(0)
        let c =
            counting_inequality_check(1, 5, Rational64::new(1, 4), Rational64::new(1, 10), 0)
                .unwrap();
        assert_eq!(c.lhs, 1.0);
        assert!(c.pass);

        // wide window: both sides near N
        let c =
            counting_inequality_check(3, 7, Rational64::new(0, 1), Rational64::new(49, 100), 25)
                .unwrap();
        assert!(c.pass);
    }

    #[test]
    fn choose_modulus_examples() {
        let nat = |v: u64| BigUint::from(v);
        assert_eq!(choose_modulus(&nat(100)).unwrap(), 21);
        assert_eq!(choose_modulus(&nat(12)).unwrap(), 7);
        // 2·4+1 = 9 is a square, so bump to 11
        assert_eq!(choose_modulus(&nat(16)).unwrap(), 11);
        assert_eq!(choose_modulus(&nat(1_000_000)).unwrap(), 2001);
    }

    #[test]
    fn main_term_pipeline() {
        let x = BigUint::from(1_000_000u64);
        let grid = [
            Rational64::new(0, 1),
            Rational64::new(1, 4),
            Rational64::new(1, 2),
            Rational64::new(3, 4),
        ];
        let report =
            main_term_compare(&x, Rational64::new(28, 100), Rational64::new(1, 100), &grid)
                .unwrap();
        assert_eq!(report.q, 2001);
        assert_eq!(report.n_max, 47);
        let counts: Vec<u64> = report.rows.iter().map(|r| r.count).collect();
        assert_eq!(counts, vec![6, 1, 1, 1]);
        assert!(report.rows.iter().all(|r| !r.zero_hit));

        // a λ sitting on a known hit always counts
        let hit = Rational64::new(4, 2001); // {2²/2001}
        let report =
            main_term_compare(&x, Rational64::new(28, 100), Rational64::new(1, 100), &[hit])
                .unwrap();
        assert!(report.rows[0].count >= 1);
    }

    #[test]
    fn main_term_rejects_small_modulus() {
        // x = 2: q = 3, N = ⌊2^0.3⌋ = 1, q ≤ 2N fails only for q ≤ 2; use
        // parameter checks instead
        let x = BigUint::from(1_000_000u64);
        assert!(main_term_compare(
            &x,
            Rational64::new(1, 4),
            Rational64::new(1, 100),
            &[Rational64::new(0, 1)]
        )
        .is_err());
        assert!(main_term_compare(
            &x,
            Rational64::new(28, 100),
            Rational64::new(0, 1),
            &[Rational64::new(0, 1)]
        )
        .is_err());
    }

    #[test]
    fn roundoff_guard_rejects_oversize() {
        assert!(matches!(
            gauss_sum(1, 0, MAX_TERMS + 1),
            Err(Error::DeskLimit { .. })
        ));
        // an enormous linear phase would not be trustworthy
        let q = ExpSumQuery::new(1, 3, 1e7, 2.0, 1e9, 0.0);
        assert!(matches!(salie_sum(&q), Err(Error::RoundoffBudget { .. })));
    }
}
