//! Exact arithmetic: big rationals, sparse integer polynomials, resultants
//! and gcd-based cleanup.

mod cleanup;
mod poly;
mod rational;
mod resultant;
mod slope;

pub(crate) use cleanup::content_in;
pub use cleanup::{content, gcd, poly_cleanup, primitive_part, squarefree_part, CleanupMode};
pub use poly::{var_rank, MultiPoly};
pub use rational::{rational_arithmetic, ArithOp, Rational};
pub use resultant::{poly_resultant, resultant_subresultant, resultant_sylvester, ResultantMethod};
pub use slope::Slope;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("variable `{0}` does not occur in either polynomial")]
    MissingVariable(alloc::string::String),
    #[error("operation is undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("cannot parse rational `{0}`")]
    Parse(alloc::string::String),
}
