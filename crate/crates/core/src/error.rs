use thiserror::Error;

use crate::arith::ExactInt;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{op}: input must be non-negative, got {value}")]
    NegativeInput { op: &'static str, value: ExactInt },

    #[error("{op}: input must be non-zero")]
    ZeroInput { op: &'static str },

    #[error("{op}: {reason}")]
    Domain { op: &'static str, reason: String },

    #[error("factorization budget exhausted; unresolved composite cofactor {cofactor}")]
    BudgetExhausted { cofactor: ExactInt },

    #[error("not enough perfect powers up to the limit: have {have}, need more than {need}")]
    InsufficientTerms { have: usize, need: usize },

    #[error("curve {0} is singular (discriminant 0)")]
    SingularCurve(String),

    #[error("point {point} is not on curve {curve}")]
    NotOnCurve { point: String, curve: String },

    #[error("{0}: operand is the point at infinity")]
    InfinityOperand(&'static str),

    #[error("point {0} does not have the shape (A/B^2, C/B^3); the model is not integral")]
    NonIntegralModel(String),

    #[error("x^3 + d is not a perfect square for d = {d}, x = {x}")]
    NoWitness { d: ExactInt, x: ExactInt },

    #[error("cannot normalize by h_E = log|discriminant| = 0")]
    ZeroNormalization,

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
