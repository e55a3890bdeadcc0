//! End-to-end check of `Q_w(u) at q ≡ Q_w(u) at q^r (mod r)` together with
//! the intermediate congruences for orders, `ω`, `p`, `λ` and `Y`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use rayon::prelude::*;

use crate::arith::{is_prime, PrimePower};
use crate::error::{Error, Result};
use crate::green::{compute, GreenRun};
use crate::group_data::GroupData;
use crate::lusztig_shoji::compare_mod_r;
use crate::weyl::TypeLabel;

/// Primes tried by a default sweep.
pub const SWEEP_PRIMES: [u64; 4] = [5, 7, 11, 13];

/// Default cap on the decimal size of intermediate integers.
pub const DEFAULT_BUDGET_DIGITS: usize = 10_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypotheses {
    pub r_prime: bool,
    /// `r ≡ 1 mod d` for the twist order `d`.
    pub r_in_m: bool,
    /// `r ∤ |G^{F^r}|`.
    pub r_coprime_to_order: bool,
    /// The pack applies in the characteristic of `q`.
    pub admissible: bool,
}

impl Hypotheses {
    pub fn all(&self) -> bool {
        self.r_prime && self.r_in_m && self.r_coprime_to_order && self.admissible
    }

    fn lines(&self) -> [(&'static str, bool); 4] {
        [
            ("r prime", self.r_prime),
            ("r = 1 mod d", self.r_in_m),
            ("r does not divide |G^(F^r)|", self.r_coprime_to_order),
            ("q admissible for the pack", self.admissible),
        ]
    }
}

pub fn check_hypotheses(g: &GroupData, q: &PrimePower, r: u64) -> Hypotheses {
    let r_prime = is_prime(r);
    let d = u64::from(g.weyl.datum().twist_order);
    let r_coprime_to_order = r >= 2 && {
        let order = g.orders.group_order(q.pow(r as u32).value());
        !order.mod_floor(&BigInt::from(r)).is_zero()
    };
    Hypotheses { r_prime, r_in_m: r >= 1 && (r - 1).is_multiple_of(d), r_coprime_to_order, admissible: g.pack.is_admissible(q) }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Violated,
    NotAsserted,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Holds => "holds",
            Verdict::Violated => "VIOLATED",
            Verdict::NotAsserted => "not asserted",
        })
    }
}

fn verdict(ok: bool) -> Verdict {
    if ok {
        Verdict::Holds
    } else {
        Verdict::Violated
    }
}

fn congruent(a: &BigInt, b: &BigInt, r: u64) -> bool {
    (a - b).mod_floor(&BigInt::from(r)).is_zero()
}

/// `|G^{F^r}| ≡ |G^F|` and `|T_w^{F^r}| ≡ |T_w^F|` mod `r`, with any
/// violations described.
pub fn verify_orders(g: &GroupData, q: &PrimePower, r: u64) -> (Verdict, Vec<String>) {
    let qr = q.pow(r as u32);
    let mut bad = Vec::new();
    let (a, b) = (g.orders.group.eval(q.value()), g.orders.group.eval(qr.value()));
    if !congruent(&a, &b, r) {
        bad.push(format!("orders: |G| {a} vs {b}"));
    }
    for (c, t) in g.orders.torus.iter().enumerate() {
        let (a, b) = (t.eval(q.value()), t.eval(qr.value()));
        if !congruent(&a, &b, r) {
            bad.push(format!("orders: |T_w| at {} {a} vs {b}", g.weyl.classes()[c].label));
        }
    }
    (verdict(bad.is_empty()), bad)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceReport {
    pub label: TypeLabel,
    pub q: PrimePower,
    pub r: u64,
    pub hypotheses: Hypotheses,
    /// `r ∤ det Ω`, known once the `q` pipeline has run.
    pub r_coprime_to_det: Option<bool>,
    /// `(name, verdict)` in a fixed order.
    pub verdicts: Vec<(&'static str, Verdict)>,
    pub violations: Vec<String>,
    /// An entry whose unreduced values differ.
    pub witness: Option<String>,
}

impl CongruenceReport {
    pub fn hypotheses_met(&self) -> bool {
        self.hypotheses.all() && self.r_coprime_to_det != Some(false)
    }

    pub fn passed(&self) -> bool {
        self.hypotheses_met() && self.violations.is_empty() && self.verdicts.iter().all(|v| v.1 != Verdict::Violated)
    }

    fn not_asserted(label: TypeLabel, q: &PrimePower, r: u64, hypotheses: Hypotheses, det: Option<bool>) -> Self {
        CongruenceReport {
            label,
            q: q.clone(),
            r,
            hypotheses,
            r_coprime_to_det: det,
            verdicts: VERDICT_NAMES.iter().map(|&n| (n, Verdict::NotAsserted)).collect(),
            violations: Vec::new(),
            witness: None,
        }
    }
}

const VERDICT_NAMES: [&str; 8] = ["orders", "omega", "p", "lambda", "Y", "q^d", "delta stability", "Q"];

impl fmt::Display for CongruenceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "type: {}", self.label)?;
        writeln!(f, "q: {}", self.q)?;
        writeln!(f, "r: {}", self.r)?;
        for (name, ok) in self.hypotheses.lines() {
            writeln!(f, "hypothesis {name}: {}", if ok { "holds" } else { "fails" })?;
        }
        if let Some(ok) = self.r_coprime_to_det {
            writeln!(f, "hypothesis r does not divide det Omega: {}", if ok { "holds" } else { "fails" })?;
        }
        for (name, v) in &self.verdicts {
            writeln!(f, "{name}: {v}")?;
        }
        for v in &self.violations {
            writeln!(f, "violation: {v}")?;
        }
        if let Some(w) = &self.witness {
            writeln!(f, "witness: {w}")?;
        }
        if !self.hypotheses_met() {
            writeln!(f, "HYPOTHESES NOT MET")
        } else if self.passed() {
            writeln!(f, "ALL CONGRUENCES HOLD")
        } else {
            writeln!(f, "CONGRUENCE VIOLATIONS: {}", self.violations.len())
        }
    }
}

/// Rough decimal size of the largest intermediate at `q^r`.
pub fn estimated_digits(g: &GroupData, q: &PrimePower, r: u64) -> usize {
    let degree = g.orders.group.degree().unwrap_or(0);
    q.digits() * r as usize * (degree + 1)
}

/// Runs the pipeline independently at `q` and at `q^r` and compares.
pub fn verify_full(g: &GroupData, q: &PrimePower, r: u64, budget_digits: usize) -> Result<CongruenceReport> {
    let label = g.label();
    let hyp = check_hypotheses(g, q, r);
    if !hyp.all() {
        return Ok(CongruenceReport::not_asserted(label, q, r, hyp, None));
    }
    let digits = estimated_digits(g, q, r);
    if digits > budget_digits {
        return Err(Error::Budget { digits, limit: budget_digits });
    }
    let qr = q.pow(r as u32);
    let base = compute(g, q)?;
    let rb = BigInt::from(r);
    let det_ok = !base.solution.omega.det_scaled().mod_floor(&rb).is_zero();
    if !det_ok {
        return Ok(CongruenceReport::not_asserted(label, q, r, hyp, Some(false)));
    }
    let lifted = compute(g, &qr)?;
    let mut report = CongruenceReport {
        label,
        q: q.clone(),
        r,
        hypotheses: hyp,
        r_coprime_to_det: Some(true),
        verdicts: Vec::new(),
        violations: Vec::new(),
        witness: None,
    };
    compare_runs(g, &base, &lifted, &mut report)?;
    Ok(report)
}

fn compare_runs(g: &GroupData, a: &GreenRun, b: &GreenRun, rep: &mut CongruenceReport) -> Result<()> {
    let r = rep.r;
    let (q, qr) = (&a.solution.omega.q, &b.solution.omega.q);

    let (v, bad) = verify_orders(g, q, r);
    rep.verdicts.push(("orders", v));
    rep.violations.extend(bad);

    let (oa, ob) = (&a.solution.omega, &b.solution.omega);
    let mut bad = Vec::new();
    for i in 0..oa.labels.len() {
        for j in 0..oa.labels.len() {
            let (x, y) = (oa.scaled[(i, j)].to_integer(), ob.scaled[(i, j)].to_integer());
            if !congruent(&x, &y, r) {
                bad.push(format!("omega[{}, {}]: {x} vs {y}", oa.labels[i], oa.labels[j]));
            }
        }
    }
    rep.verdicts.push(("omega", verdict(bad.is_empty())));
    rep.violations.extend(bad);

    let m = compare_mod_r(&a.solution, &b.solution, r)?;
    let name = |v: &crate::lusztig_shoji::Violation| {
        format!("{}[{}, {}]: {} vs {}", v.family, oa.labels[v.row], oa.labels[v.col], v.left, v.right)
    };
    let as_verdict = |o: Option<bool>| o.map_or(Verdict::NotAsserted, verdict);
    rep.verdicts.push(("p", as_verdict(m.p_holds)));
    rep.verdicts.push(("lambda", as_verdict(m.lambda_holds)));
    rep.violations.extend(m.violations.iter().filter(|v| v.family != "omega").map(name));

    let ya = g.pack.y_matrix(&oa.labels, q)?;
    let yb = g.pack.y_matrix(&oa.labels, qr)?;
    let mut bad = Vec::new();
    for (i, (ra, rb)) in ya.iter().zip(&yb).enumerate() {
        for (j, (x, y)) in ra.iter().zip(rb).enumerate() {
            if x != y {
                bad.push(format!("Y[{}, {}]: {x} vs {y}", oa.labels[i], a.almost.columns[j].label));
            }
        }
    }
    rep.verdicts.push(("Y", verdict(bad.is_empty())));
    rep.violations.extend(bad);

    let mut bad = Vec::new();
    for (e, &d) in oa.labels.iter().zip(&oa.d) {
        let (x, y) = (q.value().pow(d as u32), qr.value().pow(d as u32));
        if !congruent(&x, &y, r) {
            bad.push(format!("q^d for {e}: {x} vs {y}"));
        }
    }
    rep.verdicts.push(("q^d", verdict(bad.is_empty())));
    rep.violations.extend(bad);

    let residue_dependent: Vec<_> = g.pack.springer.iter().filter(|e| e.delta.modulus() > 1).collect();
    if residue_dependent.is_empty() {
        rep.verdicts.push(("delta stability", Verdict::NotAsserted));
    } else {
        let mut bad = Vec::new();
        for e in residue_dependent {
            let (s, sr) = (e.delta.at(q), e.delta.at(qr));
            let expect = s.map(|s| if r.is_multiple_of(2) { 1 } else { s });
            if sr != expect {
                bad.push(format!("delta of {}: {s:?} at q, {sr:?} at q^r", e.char_label));
            }
        }
        rep.verdicts.push(("delta stability", verdict(bad.is_empty())));
        rep.violations.extend(bad);
    }

    let (ta, tb) = (&a.table, &b.table);
    let mut bad = Vec::new();
    for (i, (ra, rb)) in ta.values.iter().zip(&tb.values).enumerate() {
        for (j, (x, y)) in ra.iter().zip(rb).enumerate() {
            let at = format!("Q[{}, {}]", ta.rows[i], ta.columns[j].label);
            if !congruent(x, y, r) {
                bad.push(format!("{at}: {x} vs {y}"));
            } else if x != y && rep.witness.is_none() {
                rep.witness = Some(format!("{at}: {x} at q, {y} at q^r"));
            }
        }
    }
    rep.verdicts.push(("Q", verdict(bad.is_empty())));
    rep.violations.extend(bad);
    Ok(())
}

/// One sweep task.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepItem {
    pub label: TypeLabel,
    pub q: u64,
    pub r: u64,
}

/// All `(type, q, r)` combinations in a fixed order.
pub fn sweep_items(labels: &[TypeLabel], qs: &[u64], rs: &[u64]) -> Vec<SweepItem> {
    let mut out = Vec::new();
    for &label in labels {
        for &q in qs {
            for &r in rs {
                out.push(SweepItem { label, q, r });
            }
        }
    }
    out
}

/// Runs the sweep on `jobs` threads (0 = default); results keep input order.
pub fn sweep(items: &[SweepItem], jobs: usize, budget_digits: usize) -> Result<Vec<Result<CongruenceReport>>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Sweep(e.to_string()))?;
    let groups: Vec<(TypeLabel, Result<GroupData>)> = {
        let mut labels: Vec<TypeLabel> = items.iter().map(|i| i.label).collect();
        labels.dedup();
        labels.into_iter().map(|l| (l, GroupData::load(l))).collect()
    };
    let find = |l: TypeLabel| groups.iter().find(|g| g.0 == l).map(|g| &g.1).expect("loaded");
    Ok(pool.install(|| {
        items
            .par_iter()
            .map(|it| {
                let g = find(it.label).as_ref().map_err(Clone::clone)?;
                let q = PrimePower::new(it.q)?;
                verify_full(g, &q, it.r, budget_digits)
            })
            .collect()
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup(label: TypeLabel) -> GroupData {
        GroupData::load(label).unwrap()
    }

    #[test]
    fn gl2_hypotheses() {
        let g = setup(TypeLabel::A(1));
        let q = PrimePower::new(2).unwrap();
        assert!(check_hypotheses(&g, &q, 5).all());
        assert!(!check_hypotheses(&g, &q, 2).r_coprime_to_order);
        // f(2^31) = f(2) = 6 mod 31
        assert!(check_hypotheses(&g, &q, 31).all());
        // f(8) = 8 * 49 * 9 and f(4^5) = f(4) = 4 * 9 * 5 mod 5
        assert!(!check_hypotheses(&g, &PrimePower::new(2).unwrap(), 3).r_coprime_to_order);
        assert!(!check_hypotheses(&g, &PrimePower::new(4).unwrap(), 5).r_coprime_to_order);
    }

    #[test]
    fn gl2_q2_r5() {
        let g = setup(TypeLabel::A(1));
        let q = PrimePower::new(2).unwrap();
        let rep = verify_full(&g, &q, 5, DEFAULT_BUDGET_DIGITS).unwrap();
        assert!(rep.passed(), "{rep}");
        assert_eq!(rep.witness.as_deref(), Some("Q[1, 11]: 3 at q, 33 at q^r"));
        assert!(rep.to_string().ends_with("ALL CONGRUENCES HOLD\n"));
    }

    #[test]
    fn failed_hypotheses_assert_nothing() {
        let g = setup(TypeLabel::A(1));
        let rep = verify_full(&g, &PrimePower::new(4).unwrap(), 5, DEFAULT_BUDGET_DIGITS).unwrap();
        assert!(!rep.hypotheses_met());
        assert!(rep.verdicts.iter().all(|v| v.1 == Verdict::NotAsserted));
        assert!(rep.to_string().ends_with("HYPOTHESES NOT MET\n"));
    }

    #[test]
    fn budget() {
        let g = setup(TypeLabel::A(1));
        let err = verify_full(&g, &PrimePower::new(2).unwrap(), 5, 3).unwrap_err();
        assert!(matches!(err, Error::Budget { .. }));
    }
}
