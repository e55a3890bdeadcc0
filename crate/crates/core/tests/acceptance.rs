//! The acceptance suite: one PASS/FAIL line per criterion, exit status 1 if
//! any criterion fails. Every comparison is exact.

use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;

use greenfun::arith::PrimePower;
use greenfun::congruence::{self, SweepItem, DEFAULT_BUDGET_DIGITS, SWEEP_PRIMES};
use greenfun::green::{compute, orthogonality_check};
use greenfun::group_data::GroupData;
use greenfun::lusztig_shoji::{check_shape, index_product, omega_tilde, reconstruct_pi_auto};
use greenfun::oracles::{flag_fixed_points, gl_enumerate, green_matrix, FpMatrix};
use greenfun::partition::Partition;
use greenfun::springer::{centralizer_poly, embedded_pack_text, load_pack, ResidueSign};
use greenfun::weyl::{cycle_type, TypeLabel};

const GRID: [u64; 7] = [2, 3, 4, 5, 7, 8, 9];

type Outcome = Result<String, String>;

fn pp(q: u64) -> PrimePower {
    PrimePower::new(q).expect("grid values are prime powers")
}

fn load(label: TypeLabel) -> Result<GroupData, String> {
    GroupData::load(label).map_err(|e| format!("{label}: {e}"))
}

fn type_a() -> impl Iterator<Item = TypeLabel> {
    (1..=4).map(TypeLabel::A)
}

fn oracle_equivalence() -> Outcome {
    let mut entries = 0usize;
    for label in type_a() {
        let g = load(label)?;
        let rows: Vec<Partition> = g.weyl.classes().iter().map(|c| cycle_type(&g.weyl, c.rep)).collect();
        for q in GRID {
            let t = compute(&g, &pp(q)).map_err(|e| format!("{label} q={q}: {e}"))?.table;
            let cols: Vec<Partition> =
                t.columns.iter().map(|c| c.label.parse().map_err(|e| format!("column {}: {e:?}", c.label))).collect::<Result<_, _>>()?;
            let oracle = green_matrix(&rows, &cols, &BigInt::from(q)).map_err(|e| e.to_string())?;
            if oracle != t.values {
                return Err(format!("{label} q={q}: pipeline table differs from the Hall-Littlewood table"));
            }
            entries += rows.len() * cols.len();
        }
    }
    Ok(format!("GL_2..GL_5 over {} values of q, {entries} entries", GRID.len()))
}

fn geometric_anchor() -> Outcome {
    let mut checked = 0;
    for label in (1..=3).map(TypeLabel::A) {
        let g = load(label)?;
        let n = g.weyl.datum().rank + 1;
        let id = g.weyl.classes().iter().position(|c| c.rep == 0).ok_or("no identity class")?;
        for q in [2u64, 3] {
            let t = compute(&g, &pp(q)).map_err(|e| e.to_string())?.table;
            for (j, col) in t.columns.iter().enumerate() {
                let lambda: Partition = col.label.parse().map_err(|e| format!("{e:?}"))?;
                let flags = flag_fixed_points(&FpMatrix::unipotent(&lambda, q as u8), n, q).map_err(|e| e.to_string())?;
                if t.values[id][j] != BigInt::from(flags) {
                    return Err(format!("GL_{n}({q}) u={lambda}: Q_1 = {}, flags = {flags}", t.values[id][j]));
                }
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} Jordan types for n <= 4, q in {{2, 3}}"))
}

fn determinant_identity() -> Outcome {
    for label in TypeLabel::ALL {
        let g = load(label)?;
        for q in GRID {
            let q = pp(q);
            let det = omega_tilde(&g, &q).det().map_err(|e| e.to_string())?;
            if !det.is_integer() || det.to_integer() != index_product(&g, &q) {
                return Err(format!("{label} q={q}: det = {det}"));
            }
        }
    }
    Ok(format!("{} types at every grid q", TypeLabel::ALL.len()))
}

/// Admissible grid values of `q` for each type.
fn admissible_grid() -> Result<Vec<(GroupData, Vec<PrimePower>)>, String> {
    TypeLabel::ALL
        .iter()
        .map(|&label| {
            let g = load(label)?;
            let qs = GRID.iter().map(|&q| pp(q)).filter(|q| g.pack.is_admissible(q)).collect();
            Ok((g, qs))
        })
        .collect()
}

fn orthogonality() -> Outcome {
    let mut runs = 0;
    for (g, qs) in admissible_grid()? {
        for q in qs {
            let label = g.label();
            let t = compute(&g, &q).map_err(|e| format!("{label} q={q}: {e}"))?.table;
            let bad = orthogonality_check(&t, &g).map_err(|e| e.to_string())?;
            if let Some(m) = bad.first() {
                return Err(format!("{label} q={q} ({}, {}): {} vs {}", m.row, m.col, m.found, m.expected));
            }
            runs += 1;
        }
    }
    Ok(format!("{runs} (type, q) tables"))
}

fn integrality_and_shape() -> Outcome {
    let mut runs = 0;
    for (g, qs) in admissible_grid()? {
        for q in qs {
            let label = g.label();
            let run = compute(&g, &q).map_err(|e| format!("{label} q={q}: {e}"))?;
            if let Some(v) = check_shape(&run.solution).first() {
                return Err(format!("{label} q={q}: {v}"));
            }
            runs += 1;
        }
    }
    Ok(format!("{runs} factorizations"))
}

fn congruence_condition() -> Outcome {
    let labels = TypeLabel::ALL.to_vec();
    let items: Vec<SweepItem> = congruence::sweep_items(&labels, &[2, 3, 4, 5], &SWEEP_PRIMES);
    let reports = congruence::sweep(&items, 0, DEFAULT_BUDGET_DIGITS).map_err(|e| e.to_string())?;
    let mut met = 0;
    for (it, rep) in items.iter().zip(reports) {
        let rep = rep.map_err(|e| format!("{} q={} r={}: {e}", it.label, it.q, it.r))?;
        if !rep.hypotheses_met() {
            continue;
        }
        if !rep.passed() {
            return Err(format!("{} q={} r={}: {:?}", it.label, it.q, it.r, rep.violations));
        }
        if rep.witness.is_none() {
            return Err(format!("{} q={} r={}: no witness", it.label, it.q, it.r));
        }
        met += 1;
    }
    Ok(format!("{met} of {} runs met the hypotheses and passed with witnesses", items.len()))
}

fn polynomial_reconstruction() -> Outcome {
    let labels = [TypeLabel::A(1), TypeLabel::A(2), TypeLabel::A(3), TypeLabel::A(4), TypeLabel::TwistedA(2), TypeLabel::TwistedA(3), TypeLabel::B2, TypeLabel::G2];
    for label in labels {
        let g = load(label)?;
        if g.pack.springer.iter().any(|e| !e.delta.is_constant()) {
            continue;
        }
        let pi = reconstruct_pi_auto(&g).map_err(|e| format!("{label}: {e}"))?;
        if pi.held_out.len() < 2 {
            return Err(format!("{label}: only {} held-out points", pi.held_out.len()));
        }
        for q in pi.samples.iter().chain(&pi.held_out) {
            let p = compute(&g, q).map_err(|e| e.to_string())?.solution.p;
            if pi.eval(q) != p {
                return Err(format!("{label}: pi does not reproduce P at q = {q}"));
            }
        }
    }
    Ok("type A, 2A, B2 and G2 with two held-out q each".into())
}

fn enumeration_concordance() -> Outcome {
    let cases = [(2usize, 2u64), (2, 3), (3, 2), (3, 3), (4, 2)];
    for (n, q) in cases {
        let inv = gl_enumerate(n, q).map_err(|e| e.to_string())?;
        let g = load(TypeLabel::A(n - 1))?;
        let qq = pp(q);
        if BigInt::from(inv.group_order) != g.orders.group_order(qq.value()) {
            return Err(format!("|GL_{n}({q})| = {} by enumeration", inv.group_order));
        }
        let columns = g.pack.columns();
        if columns.len() != inv.unipotent.len() {
            return Err(format!("GL_{n}({q}): {} unipotent classes enumerated", inv.unipotent.len()));
        }
        for u in &inv.unipotent {
            let col = columns
                .iter()
                .find(|c| c.label == u.jordan_type.to_string())
                .ok_or_else(|| format!("no column for {}", u.jordan_type))?;
            let size = g.pack.class_size(col, &qq).map_err(|e| e.to_string())?;
            let cent = centralizer_poly(&u.jordan_type).eval(qq.value());
            if size != BigInt::from(u.class_size) || cent != BigInt::from(u.centralizer_order) {
                return Err(format!("GL_{n}({q}) u={}: size {size} centralizer {cent} vs {u:?}", u.jordan_type));
            }
        }
    }
    Ok(format!("{} groups GL_n(q)", cases.len()))
}

/// Independent check of `sign(q^r) = sign(q)^r` for one table.
fn stable(sign: &ResidueSign, twist_order: u64) -> Result<(), String> {
    let m = sign.modulus();
    for r in [3u64, 5, 7, 11] {
        if m.is_multiple_of(r) || (r - 1) % twist_order != 0 {
            continue;
        }
        for (&res, &s) in sign.signs() {
            let image = (0..r).fold(1 % m, |acc, _| acc * res % m);
            let expect = if r % 2 == 1 { s } else { 1 };
            if sign.at_residue(image) != Some(expect) {
                return Err(format!("residue {res} mod {m}, r = {r}"));
            }
        }
    }
    Ok(())
}

fn delta_stability() -> Outcome {
    let mut tables = 0;
    for label in TypeLabel::ALL {
        let g = load(label)?;
        let d = u64::from(g.weyl.datum().twist_order);
        for e in &g.pack.springer {
            stable(&e.delta, d).map_err(|v| format!("{label} {}: {v}", e.char_label))?;
            tables += 1;
        }
    }
    let mut v: serde_json::Value =
        serde_json::from_str(embedded_pack_text(TypeLabel::G2).ok_or("no G2 pack")?).map_err(|e| e.to_string())?;
    v["springer"][2]["delta"] = serde_json::json!({"modulus": 3, "signs": [[1, 1], [2, -1]]});
    let fixture = load_pack(&v.to_string()).map_err(|e| format!("mod 3 fixture rejected: {e}"))?;
    stable(&fixture.springer[2].delta, 1)?;
    Ok(format!("{tables} shipped tables and the mod 3 fixture"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("oracle equivalence", oracle_equivalence),
        ("geometric anchor", geometric_anchor),
        ("determinant identity", determinant_identity),
        ("orthogonality", orthogonality),
        ("integrality and shape", integrality_and_shape),
        ("congruence condition", congruence_condition),
        ("polynomial reconstruction", polynomial_reconstruction),
        ("enumeration concordance", enumeration_concordance),
        ("delta stability", delta_stability),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {} ({name}): {detail} [{secs:.1}s]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {} ({name}): {detail} [{secs:.1}s]", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
