use greenfun::arith::PrimePower;
use greenfun::green::table_polynomials;
use greenfun::group_data::GroupData;
use greenfun::oracles::{calibrated_convention, green_polynomial_poly, Convention};
use greenfun::partition::Partition;
use greenfun::weyl::{cycle_type, TypeLabel};

fn pp(q: u64) -> PrimePower {
    PrimePower::new(q).unwrap()
}

fn admissible(n: usize, g: &GroupData) -> (Vec<PrimePower>, Vec<PrimePower>) {
    let qs: Vec<PrimePower> = g.pack.admissible_prime_powers().take(n + 2).collect();
    (qs[..n].to_vec(), qs[n..].to_vec())
}

#[test]
fn calibration_picks_one_convention() {
    assert_eq!(calibrated_convention(), Ok(Convention::Reversed));
}

/// Entries of the computed tables are the oracle's polynomials and have
/// degree at most the number of positive roots.
#[test]
fn type_a_tables_are_green_polynomials() {
    for rank in 1..=4 {
        let g = GroupData::load(TypeLabel::A(rank)).unwrap();
        let npos = g.weyl.positive_root_count();
        let (samples, held) = admissible(npos + 1, &g);
        let polys = table_polynomials(&g, &samples, &held).unwrap();
        let columns = g.pack.columns();
        for (i, class) in g.weyl.classes().iter().enumerate() {
            let rho = cycle_type(&g.weyl, class.rep);
            for (j, col) in columns.iter().enumerate() {
                let lambda: Partition = col.label.parse().unwrap();
                let p = &polys[(i, j)];
                assert!(p.degree().unwrap_or(0) <= npos, "A{rank} ({}, {})", class.label, col.label);
                assert_eq!(*p, green_polynomial_poly(&lambda, &rho).unwrap(), "A{rank} ({}, {})", class.label, col.label);
            }
        }
    }
}

#[test]
fn residue_dependent_signs_have_no_polynomial() {
    let text = greenfun::springer::embedded_pack_text(TypeLabel::G2).unwrap();
    let mut v: serde_json::Value = serde_json::from_str(text).unwrap();
    v["springer"][2]["delta"] = serde_json::json!({"modulus": 3, "signs": [[1, 1], [2, -1]]});
    let pack = greenfun::springer::load_pack(&v.to_string()).unwrap();
    let g = GroupData::with_pack_for(TypeLabel::G2, pack).unwrap();
    let err = table_polynomials(&g, &[pp(5), pp(7)], &[pp(11)]).unwrap_err();
    assert!(err.to_string().contains("depends on the residue of q"), "{err}");
}
