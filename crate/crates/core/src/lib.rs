//! Exact arithmetic for the unicritical family `f_c(z) = z^d + c`: totally
//! real parabolic and postcritically finite parameters, capacity bounds and
//! the finite certificates that pin them down.

pub mod algebraic;
pub mod capacity;
pub mod certificates;
pub mod dynamics;
pub mod exact;
pub mod parabolic;
pub mod par;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("undefined resultant: zero polynomial input")]
    UndefinedResultant,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("instance too large: {0}")]
    InstanceTooLarge(String),
}
