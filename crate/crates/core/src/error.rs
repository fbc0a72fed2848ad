use thiserror::Error;

use crate::laurent::LaurentError;
use crate::rootsys::{RootSystemError, Weight};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Laurent(#[from] LaurentError),
    #[error(transparent)]
    RootSystem(#[from] RootSystemError),
    #[error("straightening of {weight} did not terminate: {detail}")]
    NonTermination { weight: Weight, detail: String },
    #[error("operands belong to different root systems ({0} and {1})")]
    MixedRootSystems(String, String),
    #[error("bar involution is not unitriangular at {column}: {detail}")]
    TriangularityViolation { column: Weight, detail: String },
    #[error("v^(-a) with a = {0}/2 is not an integral power")]
    NonIntegralExponent(i64),
    #[error("{0} positive roots exceed the subset-enumeration cap of 12")]
    TooManyRoots(usize),
    #[error("malformed JSON: {0}")]
    Json(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
