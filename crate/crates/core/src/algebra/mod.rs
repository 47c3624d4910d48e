//! Scalars, number fields and the polynomial rings the rest of the crate computes in.

mod expr;
mod linalg;
mod multi;
mod poly;
mod quadratic;
mod rational;
mod ring;
mod scalar;

use thiserror::Error;

pub use expr::{parse_expr, Expr};
pub use linalg::{determinant, solve_linear, solve_linear_symbolic};
pub use multi::{MultiPoly, Symbolic};
pub use poly::{CoeffNorm, Poly, RhoPoly, ZetaRhoPoly};
pub use quadratic::{QCosPi8, QSqrt2};
pub use rational::{format_rational, int, rat, rational_sqrt, Rational};
pub use ring::{Field, Ring, ScalarRing};
pub use scalar::{round_sig15, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("divisor is not monic in the main variable")]
    NonMonicDivisor,
    #[error("no exact square root of {0} in the supported fields")]
    NoExactSqrt(String),
    #[error("square root of negative value {0}")]
    NegativeSqrt(String),
    #[error("singular linear system")]
    Singular,
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("operation needs a constant, got an expression in the variables")]
    NotConstant,
}
