use thiserror::Error;

use crate::element::Element;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Binary operation a candidate sublattice failed to be closed under.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosureOp {
    Implies,
    Meet,
}

impl std::fmt::Display for ClosureOp {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ClosureOp::Implies => f.write_str("→"),
            ClosureOp::Meet => f.write_str("∧"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("empty set of elements: every implication sublattice contains 1")]
    Empty,
    #[error("not closed: {x} {op} {y} = {result} is missing")]
    NotClosed { op: ClosureOp, x: Element, y: Element, result: Element },
    #[error("context mismatch: {left} atoms vs {right} atoms")]
    ContextMismatch { left: usize, right: usize },
    #[error("lower bound is not contained in upper bound")]
    NotComparable,
    #[error("interval endpoint is not a fixed point of the closure")]
    NotClosedEndpoint,
    #[error("atom {atom} is not below the base")]
    AtomNotBelowBase { atom: usize },
    #[error("atom index {atom} out of range for {n} atoms")]
    AtomOutOfRange { atom: usize, n: usize },
    #[error("at most {max} atoms are supported, got {n}")]
    TooManyAtoms { n: usize, max: usize },
    #[error("invalid sublattice: {0}")]
    InvalidLattice(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("non-integer result {0}")]
    NonIntegerResult(String),
}
