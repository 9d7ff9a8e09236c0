use thiserror::Error;

use crate::clifford::Signature;

/// Errors raised by algebra and spinor operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("signature mismatch: {left} vs {right}")]
    SignatureMismatch { left: Signature, right: Signature },

    #[error("tensor factor lists differ")]
    FactorMismatch,

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("unsupported signature {0} for this operation")]
    UnsupportedSignature(Signature),

    #[error("{what} out of range: {value}")]
    OutOfRange { what: &'static str, value: i64 },

    #[error("series did not converge (residual {residual:e})")]
    NonConvergence { residual: f64 },

    #[error("input has odd-grade terms")]
    OddGrade,

    #[error("matrix is not unitary (residual {residual:e})")]
    NotUnitary { residual: f64 },

    #[error("matrix shape mismatch: {0}")]
    Shape(String),

    #[error("element is not in the left ideal (residual {residual:e})")]
    NotInIdeal { residual: f64 },

    #[error("state has no nonzero component")]
    ZeroState,
}

pub type Result<T> = std::result::Result<T, Error>;
