use thiserror::Error;

use crate::rational::Rational;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable {var} out of range 1..={n}")]
    VarOutOfRange { var: usize, n: usize },
    #[error("assignment has length {got}, expected {expected}")]
    LengthMismatch { got: usize, expected: usize },
    #[error("value {0} is not allowed in this assignment")]
    BadValue(i64),
    #[error("clause is empty")]
    EmptyClause,
    #[error("clause {0} repeats a variable; normalize the instance first")]
    NotNormalized(usize),
    #[error("division by zero")]
    DivisionByZero,
    #[error("malformed linear program: {0}")]
    MalformedLp(String),
    #[error("LP solve ended with status {0}")]
    LpNotOptimal(&'static str),
    #[error("block of {size} variables at value {value} has coefficient sum {sum}, expected 0")]
    NonZeroBlockSum { value: Rational, size: usize, sum: Rational },
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error("oracle cap exceeded: {what} is {got}, cap is {cap}")]
    CapExceeded { what: &'static str, got: usize, cap: usize },
}
