use thiserror::Error;

/// Errors raised by validation and exact arithmetic.
///
/// Every index carried by a variant is 1-based, matching the cyclic labels
/// `v_1, …, v_d` and `σ_i = cone(v_i, v_{i+1})` used throughout the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("integer overflow")]
    Overflow,
    #[error("a fan needs at least 3 rays, got {0}")]
    TooFewRays(usize),
    #[error("NonPrimitiveRay({0}): ray is zero or not primitive")]
    NonPrimitiveRay(usize),
    #[error("DuplicateRay({0}): ray repeats an earlier ray")]
    DuplicateRay(usize),
    #[error("NotCounterclockwise({0}): det(v_i, v_(i+1)) <= 0")]
    NotCounterclockwise(usize),
    #[error("BadWinding: rays wind {0} times around the origin")]
    BadWinding(usize),
    #[error("NotStrictlyConvex({0}): vertex is not extreme")]
    NotStrictlyConvex(usize),
    #[error("ConeSingular({0}): cone has determinant >= 2")]
    ConeSingular(usize),
    #[error("index {index} out of range 1..={d}")]
    IndexOutOfRange { index: usize, d: usize },
    #[error("vectors are linearly dependent")]
    DegenerateBasis,
    #[error("invalid parameters for {family}: violates {constraint}")]
    InvalidParams { family: String, constraint: String },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("cannot parse vertex token {token:?}: {reason}")]
    Parse { token: String, reason: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
