use thiserror::Error;

use crate::pdiv::Violation;
use crate::rat::LatticeVec;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected rank {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("zero vector given as a cone generator")]
    ZeroRay,
    #[error("{op} is not supported in rank {rank} (maximum {max})")]
    UnsupportedRank { op: &'static str, rank: usize, max: usize },
    #[error("tail cones differ")]
    TailMismatch,
    #[error("weight lies outside the weight cone: negative pairing with tail ray {ray}")]
    NotInWeightCone { ray: LatticeVec },
    #[error("operation undefined on an affine curve model")]
    AffineCurve,
    #[error("divisor is not integral")]
    NonIntegralDivisor,
    #[error("divisor has nonzero degree")]
    NonZeroDegree,
    #[error("point is not on the curve")]
    PointNotOnCurve,
    #[error("point does not belong to this curve model")]
    PointKindMismatch,
    #[error("wrong shape: {0}")]
    WrongShape(String),
    #[error("polyhedral divisor is not proper: {0}")]
    NotProper(String),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("integer overflow converting an exact value to machine size")]
    Overflow,
    #[error("invalid input: {0:?}")]
    Invalid(Vec<Violation>),
    #[error("parse error at line {line}, column {column}: {msg}")]
    Parse { msg: String, line: usize, column: usize },
    #[error("semantic error: {0}")]
    Semantic(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
