//! Weyl groups of the supported types: element enumeration, lengths, the
//! Frobenius twist γ, γ-conjugacy classes and σ-twisted character tables.

mod chars;
mod datum;
mod group;

pub use chars::{char_poly, character_table, cycle_type, expected_labels, mn_value, SigmaCharTable, SigmaRows};
pub use datum::{finite_order_inverse, mat_mul, CartanDatum, LatticeFlavor, LatticeMatrix, TypeLabel};
pub use group::{gamma_conjugacy_classes, Element, GammaClass, WeylGroup};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeylError {
    #[error("unsupported type label {0:?}")]
    Unsupported(String),
    #[error("inconsistent root datum: {0}")]
    BadDatum(String),
    #[error("twisted character data absent")]
    TwistedDataAbsent,
    #[error("character table check failed: {0}")]
    CharacterTable(String),
}
