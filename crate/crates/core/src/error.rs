use thiserror::Error;

use crate::arithmetic::Nat;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Zero, a negative number, or text that is not a decimal integer.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("{divisor} does not divide {dividend}")]
    NotDivisible { dividend: Nat, divisor: Nat },

    #[error("{value} is not a perfect power of degree {degree}")]
    NotPerfectPower { value: Nat, degree: u32 },

    /// A decomposition was called on inputs that do not satisfy its hypotheses.
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    /// A parameter tuple breaks one of its family's gcd side conditions.
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("not a solution: {0}")]
    NotASolution(String),

    /// The general-k extractor only covers coprime (x, y).
    #[error(
        "gcd(x, y) = {gcd} > 1: the family x = k1*t1^n, y = k2*t2^n is only complete \
         over coprime pairs (x, y); use the xy = z^n families for the general case"
    )]
    NotCoprime { gcd: Nat },

    /// An exact step failed on an input that passed every precondition check.
    #[error("internal contract violation: {0}")]
    InternalContractViolation(String),

    #[error("bound too large: projected {projected} solutions exceeds the cap of {cap}")]
    BoundTooLarge { projected: u128, cap: u64 },
}

impl Error {
    /// Re-labels exactness failures raised after preconditions have been
    /// verified; at that point they can only come from a broken chain.
    pub(crate) fn into_contract(self, step: &str) -> Error {
        match self {
            e @ (Error::NotDivisible { .. }
            | Error::NotPerfectPower { .. }
            | Error::PreconditionViolated(_)) => {
                Error::InternalContractViolation(format!("{step}: {e}"))
            }
            other => other,
        }
    }
}
