//! Classical type-A computations that share no code with the
//! Lusztig–Shoji pipeline.
//!
//! Symmetric group characters come from rim-hook removal on diagrams,
//! Kostka–Foulkes polynomials from the charge statistic on semistandard
//! tableaux, and geometric counts from brute force over `GL_n(F_p)`.

use thiserror::Error;

mod gl;
mod green_poly;
mod mn;
mod tableau;

pub use gl::{flag_fixed_points, gl_enumerate, FpMatrix, GlInventory, UnipotentInventory};
pub use green_poly::{calibrated_convention, green_matrix, green_polynomial, green_polynomial_poly, Convention};
pub use mn::mn_character;
pub use tableau::{kostka_foulkes, semistandard_tableaux, word_charge, Tableau};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("partition sizes differ: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("oracle convention mismatch")]
    ConventionMismatch,
    #[error("size bounds exceeded: {0}")]
    Bounds(String),
    #[error("matrix is not unipotent")]
    NotUnipotent,
}
