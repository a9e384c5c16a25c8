//! Exact arithmetic kernel: Gaussian rationals, multivariate polynomials,
//! rational functions, formal derivations and linear solving over the
//! rational-function field.
//!
//! All values are immutable after construction and all operations are pure,
//! so values may be freely shared between threads. The coefficient field is
//! Q(i) throughout; the term order is graded lexicographic with respect to a
//! fixed registry order of indeterminate names, so canonical forms are
//! reproducible across runs.

mod derivation;
mod gaussrat;
mod linsolve;
mod parse;
mod poly;
mod ratfun;

pub use derivation::DerivationSpec;
pub use gaussrat::GaussRat;
pub use linsolve::{solve_linear, LinearSolution};
pub use parse::parse_expr;
pub use poly::{MultiPoly, Ring};
pub use ratfun::RatFun;

use thiserror::Error;

/// Errors of the exact layer.
#[derive(Debug, Error)]
pub enum ExactError {
    #[error("division by zero rational function")]
    DivisionByZero,
    #[error("rings do not match: {0} vs {1}")]
    RingMismatch(String, String),
    #[error("denominator vanishes identically after substitution: {0}")]
    PoleInSubstitution(String),
    #[error("indeterminate {0} is not covered by the derivation")]
    UncoveredIndeterminate(String),
    #[error("unknown {0} occurs nonlinearly")]
    NonLinearUnknown(String),
    #[error("unknown indeterminate {0}")]
    UnknownIndeterminate(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type ExactResult<T> = Result<T, ExactError>;
