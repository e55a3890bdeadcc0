//! Unipotent classes, the Springer correspondence, signs `δ_E` and
//! Y-functions, loaded from data packs or generated for type A.

mod component;
mod pack;
mod type_a;

pub use component::ComponentGroup;
pub use pack::{
    dump_pack, load_pack, parse_pack, Column, DataPack, GfClass, ResidueSign, SpringerEntry, UnipotentClass,
    STABILITY_PRIMES,
};
pub use type_a::{centralizer_poly, type_a_springer};

use crate::weyl::TypeLabel;

/// Canonical text of the pack shipped for `label`, if any. Type A data is
/// generated instead.
pub fn embedded_pack_text(label: TypeLabel) -> Option<&'static str> {
    match label {
        TypeLabel::B2 => Some(include_str!("../../packs/b2.pack")),
        TypeLabel::G2 => Some(include_str!("../../packs/g2.pack")),
        TypeLabel::TwistedA(2) => Some(include_str!("../../packs/2a2.pack")),
        TypeLabel::TwistedA(3) => Some(include_str!("../../packs/2a3.pack")),
        _ => None,
    }
}

/// The validated data for `label`: an embedded pack, or generated type-A data.
pub fn default_pack(label: TypeLabel) -> Result<DataPack, PackError> {
    match (label, embedded_pack_text(label)) {
        (_, Some(text)) => load_pack(text),
        (TypeLabel::A(n), None) => type_a_springer(n + 1),
        (other, None) => Err(PackError::Type(format!("no data for {other}"))),
    }
}

/// File name used for `label` in a pack directory.
pub fn pack_file_name(label: TypeLabel) -> String {
    format!("{}.pack", label.to_string().to_lowercase())
}

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PackError {
    #[error("schema violation: {0}")]
    Schema(String),
    #[error("unsupported type: {0}")]
    Type(String),
    #[error("label mismatch: {0}")]
    Label(String),
    #[error("inconsistent class data: {0}")]
    ClassData(String),
    #[error("invalid component-group character: {0}")]
    Character(String),
    #[error("Springer map is not injective at {0}")]
    NotInjective(String),
    #[error("d mismatch for {char_label}: expected {expected}, found {found}")]
    DMismatch { char_label: String, expected: usize, found: usize },
    #[error("sign-stability violation for {char_label}: residue {residue}, r = {r}")]
    SignStability { char_label: String, residue: u64, r: u64 },
    #[error("Y-functions are linearly dependent")]
    YDependent,
    #[error("class sizes sum to {0}, not q^(2N)")]
    UnipotentCount(String),
    #[error("sigma table: {0}")]
    Sigma(String),
    #[error("residue {residue} is not covered by the sign table of {char_label}")]
    ResidueNotCovered { char_label: String, residue: u64 },
    #[error("q = {q} is not admissible for {label}")]
    Inadmissible { label: String, q: String },
}

impl PackError {
    /// Stable machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            PackError::Schema(_) => "E_SCHEMA",
            PackError::Type(_) => "E_TYPE",
            PackError::Label(_) => "E_LABEL",
            PackError::ClassData(_) => "E_CLASS",
            PackError::Character(_) => "E_CHARACTER",
            PackError::NotInjective(_) => "E_INJECTIVE",
            PackError::DMismatch { .. } => "E_D_MISMATCH",
            PackError::SignStability { .. } => "E_SIGN_STABILITY",
            PackError::YDependent => "E_Y_RANK",
            PackError::UnipotentCount(_) => "E_UNIPOTENT_COUNT",
            PackError::Sigma(_) => "E_SIGMA",
            PackError::ResidueNotCovered { .. } => "E_RESIDUE",
            PackError::Inadmissible { .. } => "E_INADMISSIBLE",
        }
    }
}
