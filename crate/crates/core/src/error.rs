use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong in the library. Precondition failures are
/// reported here; none of the operations wrap around or truncate silently.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator set is empty")]
    EmptyGenerators,

    #[error("generator {0} is not a positive integer")]
    NonPositiveGenerator(i64),

    #[error("gcd(A)={0}, not a numerical semigroup")]
    NotNumericalSemigroup(u64),

    #[error("invalid pair ({a}, {b}): {reason}")]
    InvalidPair { a: u64, b: u64, reason: &'static str },

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("semigroup table needs {cells} cells, limit is {limit}")]
    TableTooLarge { cells: u64, limit: u64 },

    #[error("the zero polynomial has no {0}")]
    ZeroPolynomial(&'static str),

    #[error("S(A) has no gaps, so F(A) is not a polynomial degree")]
    GapFree,

    #[error("{n} is not in S({a}, {b})")]
    NotInSemigroup { n: u64, a: u64, b: u64 },

    #[error("truncation order {order} is below the required {required}")]
    OrderTooSmall { order: usize, required: usize },

    #[error("identity violated: {0}")]
    IdentityViolated(String),
}
