//! Exact integer number theory: roots, perfect powers, primality,
//! factorization and the quantities built on them (radicals, ABC quality,
//! distinct prime counts).
//!
//! Integers are `num_bigint::BigInt`; rationals are `num_rational::BigRational`
//! and are always kept in lowest terms with a positive denominator.

mod factor;
mod float;
mod powers;
mod primes;
mod roots;

pub use factor::{
    abc_quality, distinct_prime_count, distinct_prime_count_bounded, factor, radical,
    sixth_power_free, CofactorStatus, FactorBudget, Factorization, LengthVerdict, VerdictKind,
};
pub use float::{ln_abs, ln_rational};
pub use powers::{
    is_perfect_power, min_successive_gap, perfect_powers, power_gap_pairs, PowerEntry,
};
pub use primes::{is_probable_prime, primes_up_to, DETERMINISTIC_MR_LIMIT};
pub use roots::{exact_sqrt, icbrt, isqrt, nth_root};

/// Arbitrary-magnitude signed integer.
pub type ExactInt = num_bigint::BigInt;
/// Rational number in lowest terms, positive denominator.
pub type ExactRational = num_rational::BigRational;
