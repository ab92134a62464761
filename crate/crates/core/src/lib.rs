//! Almost squares in short intervals: exact searches and exponential-sum
//! experiments.
//!
//! An "almost square" near x is an integer n = a·b whose factors both lie
//! within c·x^θ of √x. Writing a = D − d, b = D + d turns the search into a
//! question about how close √(x + d²) comes to an integer, which this crate
//! probes three ways:
//!
//! - [`search`] — exact window searches: an exhaustive factor-pair oracle, a
//!   pigeonhole scan over the shift d, and a conditional variant that drives
//!   the scan through equidistribution of d²/(2√x) mod 1.
//! - [`experiments`] — gap statistics at desk scale: adversarial lower-bound
//!   checks at quarter points, product-gap floors, multiplication-table
//!   density, and sums of two squares.
//! - [`expsum`] — the analytic machinery behind the conditional results:
//!   quadratic Gauss sums, twisted incomplete Salié sums with a conjectured
//!   bound to probe, Fejér windows, and the fractional-part counter they
//!   control.
//!
//! All accept/reject decisions run on exact integers ([`arith`], [`fixed`]);
//! floating point appears only in sums that are explicitly compensated and
//! in report output.

pub mod arith;
pub mod error;
pub mod experiments;
pub mod expsum;
pub mod fixed;
pub mod report;
pub mod search;

pub use error::{Error, Result};
pub use fixed::{parse_rational, DecInterval, FixedPoint};
