//! Deterministic row formatting for experiment output.
//!
//! Every experiment emits a headered CSV (numeric fields, no quoting) or a
//! JSON-lines mirror with the same field order. All floats print with
//! Rust's shortest-roundtrip formatting and all merges happen in input
//! order, so output bytes never depend on the worker count.

use num_rational::Rational64;

use crate::experiments::{GapRecord, ProductGapCheck, QuarterCheck, TwoSquaresNear};
use crate::expsum::{CountResult, MainTermReport, ProbeReport};
use crate::search::AlmostSquare;

/// Output encodings supported by the command-line front end.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

fn opt<T: std::fmt::Display>(v: &Option<T>) -> String {
    v.as_ref().map(|x| x.to_string()).unwrap_or_default()
}

fn opt_json<T: std::fmt::Display>(v: &Option<T>) -> String {
    v.as_ref()
        .map(|x| x.to_string())
        .unwrap_or_else(|| "null".into())
}

pub const FIND_HEADER: &str = "x,a,b,n,offset,mid,half";

pub fn find_row(hit: &AlmostSquare, format: Format) -> String {
    match format {
        Format::Csv => format!(
            "{},{},{},{},{},{},{}",
            hit.x,
            hit.a,
            hit.b,
            hit.n,
            hit.offset,
            opt(&hit.mid),
            opt(&hit.half)
        ),
        Format::Json => format!(
            "{{\"x\":{},\"a\":{},\"b\":{},\"n\":{},\"offset\":{},\"mid\":{},\"half\":{}}}",
            hit.x,
            hit.a,
            hit.b,
            hit.n,
            hit.offset,
            opt_json(&hit.mid),
            opt_json(&hit.half)
        ),
    }
}

pub const GAP_HEADER: &str = "experiment,x,offset,bound,pass";

pub fn scan_row(rec: &GapRecord, format: Format) -> String {
    match format {
        Format::Csv => format!("{},{},{},,", rec.meta, rec.x, rec.offset),
        Format::Json => format!(
            "{{\"experiment\":\"{}\",\"x\":{},\"offset\":{},\"bound\":null,\"pass\":null}}",
            rec.meta, rec.x, rec.offset
        ),
    }
}

pub fn quarter_row(check: &QuarterCheck, format: Format) -> String {
    match format {
        Format::Csv => format!(
            "quarter,{},{},{},{}",
            check.x, check.min_offset, check.bound, check.pass
        ),
        Format::Json => format!(
            "{{\"experiment\":\"quarter\",\"x\":{},\"offset\":{},\"bound\":{},\"pass\":{}}}",
            check.x, check.min_offset, check.bound, check.pass
        ),
    }
}

pub fn product_gap_row(check: &ProductGapCheck, format: Format) -> String {
    match format {
        Format::Csv => format!(
            "product-gap,{},{},{},{}",
            check.x, check.max_gap, check.floor, check.pass
        ),
        Format::Json => format!(
            "{{\"experiment\":\"product-gap\",\"x\":{},\"offset\":{},\"bound\":{},\"pass\":{}}}",
            check.x, check.max_gap, check.floor, check.pass
        ),
    }
}

pub const MULTTABLE_HEADER: &str = "n,count";

pub fn multtable_row(n: u64, count: u64, format: Format) -> String {
    match format {
        Format::Csv => format!("{n},{count}"),
        Format::Json => format!("{{\"n\":{n},\"count\":{count}}}"),
    }
}

pub const TWO_SQUARES_NEAR_HEADER: &str = "x,d,mid,n,offset";

pub fn two_squares_near_row(r: &TwoSquaresNear, format: Format) -> String {
    match format {
        Format::Csv => format!("{},{},{},{},{}", r.x, r.d, r.center, r.n, r.offset),
        Format::Json => format!(
            "{{\"x\":{},\"d\":{},\"mid\":{},\"n\":{},\"offset\":{}}}",
            r.x, r.d, r.center, r.n, r.offset
        ),
    }
}

pub const TWO_SQUARES_GAP_HEADER: &str = "lo,hi,gap,at";

pub fn two_squares_gap_row(lo: u64, hi: u64, gap: u64, at: u64, format: Format) -> String {
    match format {
        Format::Csv => format!("{lo},{hi},{gap},{at}"),
        Format::Json => format!("{{\"lo\":{lo},\"hi\":{hi},\"gap\":{gap},\"at\":{at}}}"),
    }
}

pub const PROBE_HEADER: &str = "a,q,H,K,lambda,mu,abs_sum,bound,ratio";

pub fn probe_rows(report: &ProbeReport, format: Format) -> Vec<String> {
    report
        .rows
        .iter()
        .map(|r| match format {
            Format::Csv => format!(
                "{},{},{},{},{},{},{},{},{}",
                r.query.a,
                r.query.q,
                r.query.h_max,
                r.query.k_max,
                r.query.lambda,
                r.query.mu,
                r.abs_sum,
                r.bound,
                r.ratio
            ),
            Format::Json => format!(
                "{{\"a\":{},\"q\":{},\"H\":{},\"K\":{},\"lambda\":{},\"mu\":{},\"abs_sum\":{},\"bound\":{},\"ratio\":{}}}",
                r.query.a,
                r.query.q,
                r.query.h_max,
                r.query.k_max,
                r.query.lambda,
                r.query.mu,
                r.abs_sum,
                r.bound,
                r.ratio
            ),
        })
        .collect()
}

pub const FRACTIONAL_HEADER: &str = "p,q,lambda,delta,n,count,main_term";

pub fn fractional_row(
    r: &CountResult,
    lambda: Rational64,
    delta: Rational64,
    format: Format,
) -> String {
    match format {
        Format::Csv => format!(
            "{},{},{},{},{},{},{}",
            r.p, r.q, lambda, delta, r.n_max, r.count, r.main_term
        ),
        Format::Json => format!(
            "{{\"p\":{},\"q\":{},\"lambda\":\"{}\",\"delta\":\"{}\",\"n\":{},\"count\":{},\"main_term\":{}}}",
            r.p, r.q, lambda, delta, r.n_max, r.count, r.main_term
        ),
    }
}

pub const MAIN_TERM_HEADER: &str = "lambda,q,n,count,quarter_main,zero_hit";

pub fn main_term_rows(report: &MainTermReport, format: Format) -> Vec<String> {
    report
        .rows
        .iter()
        .map(|r| match format {
            Format::Csv => format!(
                "{},{},{},{},{},{}",
                r.lambda, report.q, report.n_max, r.count, r.quarter_main, r.zero_hit
            ),
            Format::Json => format!(
                "{{\"lambda\":\"{}\",\"q\":{},\"n\":{},\"count\":{},\"quarter_main\":{},\"zero_hit\":{}}}",
                r.lambda, report.q, report.n_max, r.count, r.quarter_main, r.zero_hit
            ),
        })
        .collect()
}

pub const FIT_HEADER: &str = "slope,intercept,count";

pub fn fit_row(slope: f64, intercept: f64, count: usize, format: Format) -> String {
    match format {
        Format::Csv => format!("{slope},{intercept},{count}"),
        Format::Json => {
            format!("{{\"slope\":{slope},\"intercept\":{intercept},\"count\":{count}}}")
        }
    }
}
