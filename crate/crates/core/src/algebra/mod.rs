//! Exact integer and rational arithmetic: polynomials in one variable, dense
//! matrices, determinants and interpolation.

mod interp;
mod matrix;
mod poly;

pub use interp::{interpolate, Interpolation};
pub use matrix::{IntMatrix, Matrix, PolyMatrix, RatMatrix};
pub use poly::{IntPoly, RatPoly};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("shape mismatch in {op}: {left:?} vs {right:?}")]
    Shape { op: &'static str, left: (usize, usize), right: (usize, usize) },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("rows have different lengths")]
    Ragged,
    #[error("matrix is singular")]
    Singular,
    #[error("modulus must be at least 2")]
    Modulus,
    #[error("polynomial division by zero")]
    DivisionByZero,
    #[error("polynomial division is not exact over the integers")]
    InexactDivision,
    #[error("degenerate interpolation nodes")]
    DegenerateNodes,
    #[error("interpolation needs at least one node")]
    NoNodes,
}
