use std::collections::BTreeMap;

use greenfun::arith::PrimePower;
use greenfun::springer::{
    default_pack, dump_pack, embedded_pack_text, load_pack, parse_pack, type_a_springer, DataPack, PackError,
    ResidueSign,
};
use greenfun::weyl::TypeLabel;
use serde_json::{json, Value};

fn pp(q: u64) -> PrimePower {
    PrimePower::new(q).unwrap()
}

fn raw(label: TypeLabel) -> Value {
    serde_json::from_str(embedded_pack_text(label).unwrap()).unwrap()
}

fn load(v: &Value) -> Result<DataPack, PackError> {
    load_pack(&serde_json::to_string(v).unwrap())
}

fn code(v: &Value) -> &'static str {
    load(v).expect_err("pack should be rejected").code()
}

fn signs(m: u64, table: &[(u64, i8)]) -> ResidueSign {
    ResidueSign::new(m, table.iter().copied().collect::<BTreeMap<_, _>>()).unwrap()
}

#[test]
fn embedded_packs_round_trip() {
    for label in [TypeLabel::B2, TypeLabel::G2, TypeLabel::TwistedA(2), TypeLabel::TwistedA(3)] {
        let text = embedded_pack_text(label).unwrap();
        let pack = load_pack(text).unwrap();
        assert_eq!(pack.label, label);
        assert!(!pack.provenance.is_empty());
        assert_eq!(dump_pack(&pack), text, "{label}");
    }
}

#[test]
fn generated_type_a_round_trips() {
    for n in 2..=5 {
        let pack = type_a_springer(n).unwrap();
        assert_eq!(load_pack(&dump_pack(&pack)).unwrap(), pack);
        assert_eq!(default_pack(TypeLabel::A(n - 1)).unwrap(), pack);
    }
}

#[test]
fn sign_stability_fixtures() {
    // sign 1 iff q = 1 mod 3
    let example = signs(3, &[(1, 1), (2, -1)]);
    assert_eq!(example.stability_violation(1), None);
    assert_eq!(signs(4, &[(1, 1), (3, -1)]).stability_violation(1), None);
    // 2^3 = 3 mod 5 changes sign
    assert_eq!(signs(5, &[(1, 1), (2, -1), (3, 1), (4, -1)]).stability_violation(1), Some((2, 3)));
    assert_eq!(ResidueSign::constant(-1).stability_violation(2), None);
}

#[test]
fn residue_sign_fixture_in_a_pack() {
    let mut v = raw(TypeLabel::G2);
    v["springer"][2]["delta"] = json!({"modulus": 3, "signs": [[1, 1], [2, -1]]});
    let pack = load(&v).unwrap();
    let y = |q: u64| pack.y_value("phi1,3'", "G2(a1)", "1", &pp(q)).unwrap();
    assert_eq!((y(7), y(5)), (2, -2));
    // the residue of q^r agrees with q
    for (q, r) in [(5u64, 5u32), (7, 7), (4, 11)] {
        assert_eq!(y(q), pack.y_value("phi1,3'", "G2(a1)", "1", &pp(q).pow(r)).unwrap());
    }
}

#[test]
fn each_error_code_is_reachable() {
    let b2 = raw(TypeLabel::B2);
    let mutate = |f: &dyn Fn(&mut Value)| {
        let mut v = b2.clone();
        f(&mut v);
        code(&v)
    };
    assert_eq!(mutate(&|v| v["colour"] = json!("red")), "E_SCHEMA");
    assert_eq!(mutate(&|v| v["provenance"] = json!(" ")), "E_SCHEMA");
    assert_eq!(mutate(&|v| v["bad_characteristics"] = json!([4])), "E_SCHEMA");
    assert_eq!(mutate(&|v| v["type"] = json!("C7")), "E_TYPE");
    assert_eq!(mutate(&|v| v["springer"][0]["char_label"] = json!("x")), "E_LABEL");
    assert_eq!(mutate(&|v| v["springer"][0]["class_label"] = json!("nowhere")), "E_LABEL");
    assert_eq!(mutate(&|v| v["classes"][0]["dim"] = json!(7)), "E_CLASS");
    assert_eq!(mutate(&|v| v["classes"][1]["gf_classes"][1]["a_label"] = json!("h")), "E_CLASS");
    assert_eq!(mutate(&|v| v["springer"][0]["a_character"] = json!([3])), "E_CHARACTER");
    assert_eq!(
        mutate(&|v| {
            let first = v["springer"][0].clone();
            v["springer"][1]["class_label"] = first["class_label"].clone();
            v["springer"][1]["a_character"] = first["a_character"].clone();
        }),
        "E_INJECTIVE"
    );
    assert_eq!(mutate(&|v| v["springer"][0]["d"] = json!(3)), "E_D_MISMATCH");
    assert_eq!(
        mutate(&|v| v["springer"][0]["delta"] = json!({"modulus": 5, "signs": [[1, 1], [2, -1], [3, 1], [4, -1]]})),
        "E_SIGN_STABILITY"
    );
    // q = 3 is admissible for B2, so residue 0 mod 3 must be covered
    assert_eq!(mutate(&|v| v["springer"][0]["delta"] = json!({"modulus": 3, "signs": [[1, 1], [2, -1]]})), "E_RESIDUE");
    assert_eq!(mutate(&|v| v["classes"][2]["gf_classes"][0]["size_poly"] = json!([0, 0, 0, 0, 1])), "E_UNIPOTENT_COUNT");

    let mut twisted = raw(TypeLabel::TwistedA(2));
    twisted.as_object_mut().unwrap().remove("sigma_table");
    assert_eq!(code(&twisted), "E_SIGMA");
    let mut untwisted = raw(TypeLabel::TwistedA(2));
    untwisted["type"] = json!("A2");
    assert!(matches!(code(&untwisted), "E_SIGMA" | "E_LABEL"));

    let pack = load(&b2).unwrap();
    assert_eq!(pack.check_admissible(&pp(4)).unwrap_err().code(), "E_INADMISSIBLE");
    assert!(pack.check_admissible(&pp(9)).is_ok());
}

#[test]
fn parse_pack_skips_semantics() {
    let mut v = raw(TypeLabel::B2);
    v["springer"][0]["d"] = json!(3);
    let text = serde_json::to_string(&v).unwrap();
    let pack = parse_pack(&text).unwrap();
    assert_eq!(pack.validate().unwrap_err().code(), "E_D_MISMATCH");
}

#[test]
fn reachable_residues() {
    let b2 = default_pack(TypeLabel::B2).unwrap();
    assert_eq!(b2.reachable_residues(4).collect::<Vec<_>>(), vec![1, 3]);
    assert_eq!(b2.reachable_residues(3).collect::<Vec<_>>(), vec![0, 1, 2]);
    let g2 = default_pack(TypeLabel::G2).unwrap();
    assert_eq!(g2.reachable_residues(6).collect::<Vec<_>>(), vec![1, 5]);
}
