//! Exact arithmetic: rationals, Laurent polynomials over named variables, and rational
//! functions whose denominators are kept as products of binomials `(1 - m)`.

mod json;
pub mod linalg;
mod monomial;
mod poly;
mod ratfunc;
mod rational;

pub use json::{LaurentPolyJson, RatFuncJson};
pub use monomial::{Monomial, Vars};
pub use poly::{latex_var, LaurentPoly};
pub use ratfunc::{Binding, RatFunc};
pub use rational::Rational;

#[allow(unused_imports)]
pub(crate) use poly::{accum_add, Accum};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("mismatched variable contexts: {left} vs {right}")]
    ContextMismatch { left: String, right: String },
    #[error("unknown variable {0}")]
    UnknownVariable(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole hit: {0}")]
    PoleHit(String),
    #[error("malformed input: {0}")]
    Malformed(String),
}
