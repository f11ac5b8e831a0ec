use thiserror::Error;

use crate::cyclo::CycloElem;

/// Errors raised by the exact-arithmetic kernel and the evaluation routes.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix is not lower Hessenberg: entry ({row}, {col}) is nonzero")]
    ShapeViolation { row: usize, col: usize },
    #[error("constant term of the series is not invertible")]
    NonInvertibleConstantTerm,
    #[error("series has the wrong constant term for {0}")]
    BadConstantTerm(&'static str),
    #[error("duplicate abscissa {0} in interpolation data")]
    DuplicateAbscissa(String),
    #[error("zero has no inverse")]
    ZeroInverse,
    #[error("cyclotomic element {0} is not rational")]
    NotRational(Box<CycloElem>),
    #[error("cannot mix elements of Q(zeta_{0}) and Q(zeta_{1})")]
    ContextMismatch(usize, usize),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("insufficient input: need {needed} terms, got {got}")]
    InsufficientInput { needed: usize, got: usize },
    #[error("degenerate Bernoulli numbers need lambda = 1/n in rational mode, got {0}")]
    UnsupportedLambda(String),
    #[error("brute-force evaluation needs {needed} tuples, budget is {budget}")]
    BudgetExceeded { needed: String, budget: u64 },
    #[error("no closed form for m = {m}, s = {s}")]
    UnsupportedClosedForm { m: usize, s: u32 },
    #[error("sampled values for (m, s) = ({m}, {s}) do not fit a polynomial of degree m*s (fitted degree {degree})")]
    DegreeMismatch { m: usize, s: u32, degree: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
