//! The orthogonality matrix `Ω` and its unique block factorization
//! `P^tr Λ P = Ω`, polynomial reconstruction of `p_{E',E}` and the mod-`r`
//! comparison of two solutions.

use thiserror::Error;

mod modr;
mod omega;
mod pi;
mod solve;

pub use modr::{compare_mod_r, ModrReport, Violation};
pub use omega::{block_order, build_omega, build_omega_with_order, index_product, omega_tilde, OmegaMatrix};
pub use pi::{auto_sample_points, reconstruct_pi, reconstruct_pi_auto, PiMatrix};
pub use solve::{check_shape, solve_blocks, solve_p_lambda, PSolution};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("{0}")]
    Inadmissible(String),
    #[error("bad block order: {0}")]
    Order(String),
    #[error("omega integrality violation: {0}")]
    OmegaIntegrality(String),
    #[error("degenerate block {0}")]
    DegenerateBlock(usize),
    #[error("shape contradiction at block ({row_block}, {col_block})")]
    ShapeContradiction { row_block: usize, col_block: usize },
    #[error("P^tr Lambda P does not reproduce Omega")]
    Reconstruction,
    #[error("integrality violation in {0}")]
    Integrality(&'static str),
    #[error("insufficient sample points: {0}")]
    InsufficientSamples(String),
    #[error("block structures differ")]
    BlockMismatch,
    #[error("no single polynomial: the sign of {0} depends on the residue of q")]
    Porc(String),
}
