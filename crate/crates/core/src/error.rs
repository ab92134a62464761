use thiserror::Error;

/// Errors shared across the search, experiment and exponential-sum kernels.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A parameter violated an operation's precondition.
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// Jacobi symbols and Salié sums are only defined for odd moduli.
    #[error("modulus {0} must be odd")]
    EvenModulus(u64),
    /// Modular inverse requested for non-coprime arguments.
    #[error("{0} is not invertible modulo {1}")]
    NotInvertible(i64, u64),
    /// Window rounded to the empty set of integers.
    #[error("search window around x = {0} contains no integers")]
    EmptyWindow(String),
    /// The fractional-part scan found no qualifying shift d.
    #[error("no candidate d in [0, {0}] hits the target window")]
    NoCandidate(u64),
    /// Exponent fitting needs at least two nonzero offsets.
    #[error("need at least 2 records with offset >= 1, got {0}")]
    InsufficientData(usize),
    /// Requested size exceeds the configured desk-scale limit.
    #[error("{what} = {got} exceeds the desk-scale limit {limit}")]
    DeskLimit {
        what: &'static str,
        got: u64,
        limit: u64,
    },
    /// The counting pipeline needs q > 2N.
    #[error("modulus q = {q} must exceed 2N = {twice_n}")]
    ModulusTooSmall { q: u64, twice_n: u64 },
    /// Predicted floating-point roundoff would exceed the trust budget.
    #[error("sum of {terms} terms exceeds the roundoff budget")]
    RoundoffBudget { terms: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
