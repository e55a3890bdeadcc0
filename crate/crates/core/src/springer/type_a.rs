use num_traits::One;

use super::{ComponentGroup, DataPack, GfClass, PackError, ResidueSign, SpringerEntry, UnipotentClass};
use crate::algebra::IntPoly;
use crate::orders::group_order_poly;
use crate::partition::Partition;
use crate::weyl::{CartanDatum, TypeLabel, WeylGroup};

/// `|Z_{GL_n}(u_λ)| = q^{Σ λ'_i^2} Π_i Π_{j ≤ m_i} (1 - q^{-j})`, cleared of
/// negative powers.
pub fn centralizer_poly(lambda: &Partition) -> IntPoly {
    let conj = lambda.conjugate();
    let top: usize = conj.parts().iter().map(|c| c * c).sum();
    let mult = lambda.multiplicities();
    let shift: usize = mult.iter().map(|m| m * (m + 1) / 2).sum();
    let mut out = IntPoly::monomial(1, top - shift);
    for &m in mult.iter().skip(1) {
        for j in 1..=m {
            out = &out * &(&IntPoly::monomial(1, j) - &IntPoly::one());
        }
    }
    out
}

/// Generated Springer data for `GL_n`, `2 <= n <= 5`.
pub fn type_a_springer(n: usize) -> Result<DataPack, PackError> {
    if !(2..=5).contains(&n) {
        return Err(PackError::Type(format!("GL_{n} is outside the supported range 2..=5")));
    }
    let label = TypeLabel::A(n - 1);
    let w = WeylGroup::new(CartanDatum::new(label).map_err(|e| PackError::Type(e.to_string()))?)
        .map_err(|e| PackError::Type(e.to_string()))?;
    let order = group_order_poly(w.datum(), &w);
    let mut classes = Vec::new();
    let mut springer = Vec::new();
    for lam in Partition::all(n) {
        let conj_sq: usize = lam.conjugate().parts().iter().map(|c| c * c).sum();
        let size = order.div_exact(&centralizer_poly(&lam)).map_err(|_| PackError::ClassData(format!("centralizer of {lam}")))?;
        classes.push(UnipotentClass {
            label: lam.to_string(),
            dim: n * n - conj_sq,
            component_group: ComponentGroup::Trivial,
            gf_classes: vec![GfClass { a_label: "1".into(), size: size.to_rat() }],
        });
        springer.push(SpringerEntry {
            char_label: lam.to_string(),
            class_label: lam.to_string(),
            a_character: vec![1],
            d: lam.n(),
            delta: ResidueSign::constant(1),
        });
    }
    let pack = DataPack {
        label,
        provenance: format!("generated: GL_{n}, Jordan types, chi^lambda -> class lambda, d = n(lambda)"),
        bad_characteristics: vec![],
        classes,
        springer,
        sigma: None,
    };
    pack.validate_with(&w)?;
    Ok(pack)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::PrimePower;
    use num_bigint::BigInt;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn gl2_classes() {
        let pack = type_a_springer(2).unwrap();
        let reg = &pack.classes[0];
        assert_eq!((reg.label.as_str(), reg.dim), ("2", 2));
        assert_eq!(reg.gf_classes[0].size, p(&[-1, 0, 1]).to_rat());
        assert_eq!(pack.classes[1].gf_classes[0].size, p(&[1]).to_rat());
        assert_eq!(pack.springer[0].d, 0);
        assert_eq!(pack.springer[1].d, 1);
        let q2 = PrimePower::new(2).unwrap();
        assert_eq!(pack.class_size(&pack.columns()[1], &q2).unwrap(), BigInt::from(3));
    }

    #[test]
    fn gl3_d_values() {
        let pack = type_a_springer(3).unwrap();
        let d: Vec<usize> = pack.springer.iter().map(|e| e.d).collect();
        assert_eq!(d, vec![0, 1, 3]);
    }

    #[test]
    fn identity_centralizer_is_the_group() {
        let w = WeylGroup::new(CartanDatum::new(TypeLabel::A(1)).unwrap()).unwrap();
        assert_eq!(centralizer_poly(&"11".parse().unwrap()), group_order_poly(w.datum(), &w));
        assert_eq!(centralizer_poly(&"2".parse().unwrap()), p(&[0, -1, 1]));
    }

    #[test]
    fn range() {
        assert!(type_a_springer(1).is_err());
        assert!(type_a_springer(6).is_err());
        for n in 2..=5 {
            type_a_springer(n).unwrap();
        }
    }
}
