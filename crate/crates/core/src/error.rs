use thiserror::Error;

use crate::cobordism::{ArityError, ParseError};
use crate::C64;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown builtin category `{0}`")]
    UnknownCategory(String),

    #[error("invalid parameter for `{family}`: {reason}")]
    InvalidParameter { family: String, reason: String },

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("operands belong to different categories")]
    CategoryMismatch,

    #[error("s-matrix is singular (|det| = {det:e}); the category is not modular")]
    SingularS { det: f64 },

    #[error("S_0{label} vanishes; the genus formula is undefined")]
    ZeroSEntry { label: usize },

    #[error("global dimension {0} is not a positive real number")]
    NonRealGlobalDim(C64),

    #[error("size guard exceeded: {0}")]
    SizeGuard(String),

    #[error("invalid Frobenius variant {0} (expected 1 or 2)")]
    InvalidVariant(u8),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("category is not multiplicity-free: N_{{{i},{j}}}^{k} = {value}")]
    NotMultiplicityFree { i: usize, j: usize, k: usize, value: u32 },

    #[error("missing F/R data for `{0}`")]
    MissingFr(String),

    #[error("unsupported boundary object: {0}")]
    UnsupportedBoundary(String),

    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error(transparent)]
    Arity(#[from] ArityError),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
