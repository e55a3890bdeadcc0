//! Everything about one type that does not depend on `q`.

use crate::error::{Error, Result};
use crate::orders::OrderData;
use crate::springer::{default_pack, DataPack};
use crate::weyl::{character_table, CartanDatum, SigmaCharTable, TypeLabel, WeylGroup};

/// Weyl group, σ-character table, order polynomials and Springer data of one
/// type, cross-checked against each other.
#[derive(Clone, Debug)]
pub struct GroupData {
    pub weyl: WeylGroup,
    pub chars: SigmaCharTable,
    pub orders: OrderData,
    pub pack: DataPack,
    /// `d_E` in character-table order.
    pub d: Vec<usize>,
    /// Index into `pack.springer` in character-table order.
    pub entry: Vec<usize>,
}

impl GroupData {
    pub fn load(label: TypeLabel) -> Result<Self> {
        Self::with_pack(default_pack(label)?)
    }

    pub fn with_pack(pack: DataPack) -> Result<Self> {
        let weyl = WeylGroup::new(CartanDatum::new(pack.label)?)?;
        pack.validate_with(&weyl)?;
        let chars = character_table(&weyl, pack.sigma.as_ref())?;
        let orders = OrderData::new(&weyl)?;
        let mut d = Vec::new();
        let mut entry = Vec::new();
        for label in chars.labels() {
            let k = pack
                .springer
                .iter()
                .position(|e| &e.char_label == label)
                .ok_or_else(|| crate::springer::PackError::Label(format!("no Springer entry for {label}")))?;
            d.push(pack.springer[k].d);
            entry.push(k);
        }
        Ok(GroupData { weyl, chars, orders, pack, d, entry })
    }

    /// Like [`GroupData::with_pack`] but rejects a pack for a different type.
    pub fn with_pack_for(label: TypeLabel, pack: DataPack) -> Result<Self> {
        if pack.label != label {
            return Err(Error::WrongPackType { expected: label.to_string(), found: pack.label.to_string() });
        }
        Self::with_pack(pack)
    }

    pub fn label(&self) -> TypeLabel {
        self.pack.label
    }

    /// Class label `C(E)` for the character at table index `e`.
    pub fn class_label(&self, e: usize) -> &str {
        &self.pack.springer[self.entry[e]].class_label
    }
}
