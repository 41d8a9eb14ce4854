use thiserror::Error;

/// Errors produced by the exact-arithmetic operations.
///
/// Every operation is total on its documented domain; these variants cover
/// the explicit failure modes (budgets, violated hypotheses, malformed
/// input data). Arithmetic itself never overflows silently.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An enumeration oracle would exceed its element-pair budget.
    #[error("enumeration budget exceeded: {required} element-pairs needed, budget is {budget}")]
    BoundExceeded { required: u128, budget: u64 },

    /// A hypothesis of the completion splitting fails for the given input.
    #[error("completion splitting hypothesis fails: {0}")]
    HypothesisViolated(String),

    /// A denominator prime lies outside the supplied prime set.
    #[error("denominator prime {prime} lies outside the given prime set")]
    PrimeOutsideSet { prime: u64 },

    /// A number supplied as a prime is not prime.
    #[error("{0} is not a prime number")]
    NotPrime(u64),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("out of range: {0}")]
    OutOfRange(String),

    /// A chart request would materialize too many cells.
    #[error("chart budget exceeded: {cells} cells requested, limit is {limit}")]
    ChartBudgetExceeded { cells: u128, limit: u64 },

    #[error("invalid group data: {0}")]
    InvalidGroup(String),

    #[error("invalid matrix data: {0}")]
    InvalidMatrix(String),
}

pub type Result<T> = std::result::Result<T, Error>;
