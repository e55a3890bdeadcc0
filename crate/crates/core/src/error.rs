use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::arith::NotPrimePower;
use crate::lusztig_shoji::SolveError;
use crate::oracles::OracleError;
use crate::orders::OrderError;
use crate::springer::PackError;
use crate::weyl::WeylError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Weyl(#[from] WeylError),
    #[error(transparent)]
    Order(#[from] OrderError),
    #[error(transparent)]
    Pack(#[from] PackError),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    PrimePower(#[from] NotPrimePower),
    #[error("pack is for {found}, expected {expected}")]
    WrongPackType { expected: String, found: String },
    #[error("compute budget exceeded: about {digits} digits needed, limit {limit}")]
    Budget { digits: usize, limit: usize },
    #[error("could not start the sweep: {0}")]
    Sweep(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
