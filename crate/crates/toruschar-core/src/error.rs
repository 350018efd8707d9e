use core::fmt;

/// Errors shared by every module of the core crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// m = 1 or n = 1: the group degenerates to ℤ (the unknot), which the
    /// census formulas do not cover.
    UnknotRejected { m: u64, n: u64 },
    /// gcd(m, n) ≠ 1 (this also catches zero parameters).
    NotCoprime { m: u64, n: u64 },
    /// Censuses and closed-form classes are implemented for ranks 2 and 3 only.
    UnsupportedRank(u32),
    /// An enumeration would exceed the configured work budget.
    BudgetExceeded { needed: u128, budget: u128 },
    /// Recovery from a K-class hit a non-integer intermediate value.
    NonIntegralSolution(&'static str),
    /// Recovery from a K-class found no pair (m, n) reproducing the input.
    NoValidFactorization,
    /// Boundary-curve index k is a multiple of m or of n.
    InvalidCurveIndex { k: i64, m: u64, n: u64 },
    /// Twisted-Alexander bookkeeping produced a negative net multiplicity,
    /// meaning the supplied label was not a valid irreducible SL(2) label.
    NegativeMultiplicity { exp: u64, order: u64 },
    /// An eigenvalue label violates a structural invariant.
    InvalidLabel(&'static str),
    /// Numeric guard (singular matrix, vanishing denominator, ...).
    NumericGuard(&'static str),
    /// A numeric routine exhausted its retry budget on degenerate samples.
    DegenerateSample,
    /// An internal consistency check failed; indicates a bug, not bad input.
    Internal(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::UnknotRejected { m, n } => write!(
                f,
                "parameters ({m},{n}) describe the unknot; both m and n must be at least 2"
            ),
            Error::NotCoprime { m, n } => {
                write!(f, "parameters ({m},{n}) are not coprime")
            }
            Error::UnsupportedRank(r) => write!(f, "rank {r} not supported (use 2 or 3)"),
            Error::BudgetExceeded { needed, budget } => write!(
                f,
                "enumeration needs {needed} steps, exceeding the budget of {budget}"
            ),
            Error::NonIntegralSolution(what) => {
                write!(f, "recovery failed: non-integral value for {what}")
            }
            Error::NoValidFactorization => {
                write!(f, "recovery failed: no coprime pair reproduces this class")
            }
            Error::InvalidCurveIndex { k, m, n } => write!(
                f,
                "curve index {k} is a multiple of m = {m} or n = {n}; no boundary curve there"
            ),
            Error::NegativeMultiplicity { exp, order } => write!(
                f,
                "negative net multiplicity at root exp {exp}/{order}; label is not a valid \
                 irreducible SL(2) label"
            ),
            Error::InvalidLabel(what) => write!(f, "invalid eigenvalue label: {what}"),
            Error::NumericGuard(what) => write!(f, "numeric guard tripped: {what}"),
            Error::DegenerateSample => {
                write!(f, "all numeric samples were degenerate; retry budget exhausted")
            }
            Error::Internal(what) => write!(f, "internal error: {what}"),
        }
    }
}

impl core::error::Error for Error {}
