use crate::matroids::MatroidKind;
use thiserror::Error;

/// Errors surfaced by oracle constructors, exact evaluators and the solver.
#[derive(Debug, Error)]
pub enum Error {
    #[error("ground set must contain at least one element")]
    EmptyGroundSet,

    #[error("ground set too large for exhaustive enumeration: n = {n}, limit = {limit}")]
    GroundSetTooLarge { n: usize, limit: usize },

    #[error("element {element} out of range for ground set of size {n}")]
    ElementOutOfRange { element: usize, n: usize },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("function has no positive singleton marginal (d_upper = 0)")]
    DegenerateFunction,

    #[error("polytope membership has no closed-form check for {0:?} matroids")]
    UnsupportedMembership(MatroidKind),

    #[error("invalid instance: {0}")]
    InvalidInstance(String),
}

pub type Result<T> = std::result::Result<T, Error>;
