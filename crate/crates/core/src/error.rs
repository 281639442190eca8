use thiserror::Error;

use crate::algebra::GeneratorId;
use crate::module::Weight;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("SL(2) parameters have determinant {0}, expected 1")]
    Determinant(String),

    #[error("rational weight function is singular at weight {weight}: {detail}")]
    WeightSingularity { weight: Weight, detail: String },

    #[error("vector outside the operator domain: {0}")]
    Domain(String),

    #[error("bracket [{x}, {y}] is not represented by the action matrices")]
    StructureViolation { x: GeneratorId, y: GeneratorId },

    #[error("invalid parameters: {0}")]
    Parameter(String),

    #[error("subspace is not invariant: {0}")]
    Invariance(String),

    #[error("automorphism does not extend: {0}")]
    NoExtension(String),

    #[error("charge matrix needs an irrational number: {0}")]
    IrrationalEigenvalue(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
