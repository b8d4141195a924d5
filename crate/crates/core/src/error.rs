use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("divisor does not divide the polynomial")]
    NotDivisible,
    #[error("division needs a non-integral coefficient")]
    NonIntegralDivision,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("24 does not divide {ell}^2 - 1")]
    InvalidEll { ell: u64 },
    #[error("gcd(24, {ell}) != 1, no residue delta exists")]
    NoDelta { ell: u64 },
    #[error("n = {n} exceeds the enumeration bound {bound}")]
    BoundExceeded { n: u64, bound: u64 },
    #[error("statistic undefined for the empty partition")]
    EmptyPartition,
    #[error("invalid crank spec: {0}")]
    InvalidSpec(String),
    #[error("invalid k = {k}: {reason}")]
    InvalidK { k: u32, reason: &'static str },
    #[error("invalid congruence case: {0}")]
    InvalidCase(String),
    #[error("hypotheses not met: {0}")]
    HypothesisViolation(String),
    #[error("unknown claim id {0:?}")]
    UnknownClaim(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
