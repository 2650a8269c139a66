use thiserror::Error;

/// Errors produced by the arithmetic, code and enumeration layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus {0} is not a supported prime")]
    NotPrime(u64),

    #[error("division by zero")]
    DivisionByZero,

    #[error("operands live over different fields (q={left} vs q={right})")]
    ParamMismatch { left: u32, right: u32 },

    #[error("evaluation point {0} is not a root of v^3 - v")]
    InvalidEvaluationPoint(u32),

    #[error("operation requires an odd characteristic (2 must be invertible)")]
    CharacteristicTwoUnsupported,

    #[error("search space of {required} exceeds budget {budget}")]
    SearchSpaceTooLarge { required: u128, budget: u128 },

    #[error("code has no nonzero codeword")]
    EmptyCode,

    #[error("shape error: {0}")]
    Shape(String),

    #[error("polynomial does not divide x^{n} - 1")]
    NotADivisor { n: usize },

    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },

    #[error("MacWilliams transform is inconsistent: {0}")]
    TransformInconsistent(String),

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Fails with `SearchSpaceTooLarge` unless `required <= budget`.
pub(crate) fn check_budget(required: u128, budget: u128) -> Result<()> {
    if required > budget {
        Err(Error::SearchSpaceTooLarge { required, budget })
    } else {
        Ok(())
    }
}

/// `base^exp` as u128, or `None` on overflow.
pub(crate) fn checked_pow(base: u32, exp: usize) -> Option<u128> {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base as u128)?;
    }
    Some(acc)
}

/// `base^exp`, saturating to `u128::MAX` so it always fails a budget check.
pub(crate) fn saturating_pow(base: u32, exp: usize) -> u128 {
    checked_pow(base, exp).unwrap_or(u128::MAX)
}
