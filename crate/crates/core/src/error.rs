use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("empty input: at least one facet is required")]
    EmptyInput,
    #[error("bad vertex label {0}: labels must be positive integers")]
    BadLabel(i64),
    #[error("{0:?} is not a face of the complex")]
    NotAFace(Vec<u32>),
    #[error("link condition violated for edge {0:?}: contraction would change topology")]
    LinkConditionViolated(Vec<u32>),
    #[error("the complex is a full simplex on its vertex set")]
    IsSimplex,
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("too few vertices: n = {n} but the construction needs n >= {min}")]
    TooFewVertices { n: usize, min: usize },
    #[error("polynomial is not symmetric about degree {0}/2")]
    NotSymmetric(i64),
    #[error("polynomial degree {deg} exceeds the bound {max}")]
    DegreeTooHigh { deg: usize, max: usize },
    #[error("complex is not in the required family: {0}")]
    NotInFamily(String),
    #[error("enumeration bounds exceed the desk-scale guard (pass the override to proceed)")]
    ScaleGuard,
    #[error("MPW recurrence and closed form disagree at k={k}, d={d}")]
    RecurrenceClosedFormMismatch { k: usize, d: usize },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
