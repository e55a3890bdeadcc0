use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::{PSolution, SolveError};
use crate::algebra::{IntMatrix, RatMatrix};
use crate::arith::is_prime;

/// One failed congruence, with its position in block order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub family: &'static str,
    pub row: usize,
    pub col: usize,
    pub left: BigInt,
    pub right: BigInt,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{},{}]: {} vs {}", self.family, self.row, self.col, self.left, self.right)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModrReport {
    pub r: u64,
    /// `(name, holds)` for each hypothesis.
    pub hypotheses: Vec<(&'static str, bool)>,
    /// `None` when a hypothesis fails.
    pub p_holds: Option<bool>,
    pub lambda_holds: Option<bool>,
    pub violations: Vec<Violation>,
}

impl ModrReport {
    pub fn hypotheses_met(&self) -> bool {
        self.hypotheses.iter().all(|h| h.1)
    }

    pub fn passed(&self) -> bool {
        self.hypotheses_met() && self.violations.is_empty()
    }
}

pub(crate) fn congruent(a: &BigInt, b: &BigInt, r: &BigInt) -> bool {
    (a - b).mod_floor(r).is_zero()
}

pub(crate) fn int_violations(family: &'static str, a: &IntMatrix, b: &IntMatrix, r: u64) -> Vec<Violation> {
    let rb = BigInt::from(r);
    a.entries()
        .filter(|(i, j, v)| !congruent(v, &b[(*i, *j)], &rb))
        .map(|(i, j, v)| Violation { family, row: i, col: j, left: v.clone(), right: b[(i, j)].clone() })
        .collect()
}

fn rat_to_int(m: &RatMatrix) -> IntMatrix {
    m.to_int().expect("validated integral")
}

/// Checks `p^{(r)} ≡ p` and `λ^{(r)} ≡ λ` mod `r`, gated on `r` prime,
/// `r ∤ det Ω` and `ω^{(r)} ≡ ω`.
pub fn compare_mod_r(sol_q: &PSolution, sol_qr: &PSolution, r: u64) -> Result<ModrReport, SolveError> {
    let (a, b) = (&sol_q.omega, &sol_qr.omega);
    if a.labels != b.labels || a.blocks != b.blocks || a.d != b.d {
        return Err(SolveError::BlockMismatch);
    }
    let rb = BigInt::from(r);
    let det_ok = r >= 2 && !a.det_scaled().mod_floor(&rb).is_zero();
    let omega_viol = if r >= 2 { int_violations("omega", &rat_to_int(&a.scaled), &rat_to_int(&b.scaled), r) } else { vec![] };
    let hypotheses = vec![
        ("r prime", is_prime(r)),
        ("r does not divide det Omega", det_ok),
        ("omega congruent mod r", r >= 2 && omega_viol.is_empty()),
    ];
    let mut report = ModrReport { r, hypotheses, p_holds: None, lambda_holds: None, violations: Vec::new() };
    if !report.hypotheses_met() {
        return Ok(report);
    }
    let pv = int_violations("p", &sol_q.p, &sol_qr.p, r);
    let lv = int_violations("lambda", &sol_q.lambda, &sol_qr.lambda, r);
    report.p_holds = Some(pv.is_empty());
    report.lambda_holds = Some(lv.is_empty());
    report.violations.extend(pv);
    report.violations.extend(lv);
    Ok(report)
}

impl fmt::Display for ModrReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "r = {}", self.r)?;
        for (name, ok) in &self.hypotheses {
            writeln!(f, "hypothesis {name}: {}", if *ok { "holds" } else { "FAILS" })?;
        }
        let verdict = |v: Option<bool>| match v {
            None => "not asserted",
            Some(true) => "holds",
            Some(false) => "VIOLATED",
        };
        writeln!(f, "p congruence: {}", verdict(self.p_holds))?;
        writeln!(f, "lambda congruence: {}", verdict(self.lambda_holds))?;
        for v in &self.violations {
            writeln!(f, "violation {v}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::PrimePower;
    use crate::group_data::GroupData;
    use crate::lusztig_shoji::{build_omega, solve_p_lambda};
    use crate::weyl::TypeLabel;

    fn solve(g: &GroupData, q: u64) -> PSolution {
        solve_p_lambda(&build_omega(g, &PrimePower::new(q).unwrap()).unwrap()).unwrap()
    }

    #[test]
    fn gl2_q2_r5() {
        let g = GroupData::load(TypeLabel::A(1)).unwrap();
        let (a, b) = (solve(&g, 2), solve(&g, 32));
        assert_eq!(b.lambda[(1, 1)], BigInt::from(1023));
        let rep = compare_mod_r(&a, &b, 5).unwrap();
        assert!(rep.passed(), "{rep}");
        assert_eq!(rep.p_holds, Some(true));
    }

    #[test]
    fn identical_inputs() {
        let g = GroupData::load(TypeLabel::A(2)).unwrap();
        let a = solve(&g, 3);
        for r in [5, 7, 11] {
            assert!(compare_mod_r(&a, &a, r).unwrap().passed());
        }
    }

    #[test]
    fn hypothesis_gate() {
        let g = GroupData::load(TypeLabel::A(1)).unwrap();
        let a = solve(&g, 2);
        // det Ω = q^2 - 1 = 3 at q = 2
        let rep = compare_mod_r(&a, &a, 3).unwrap();
        assert!(!rep.hypotheses_met());
        assert_eq!(rep.p_holds, None);
        assert!(rep.violations.is_empty());
    }

    #[test]
    fn mismatch() {
        let a = solve(&GroupData::load(TypeLabel::A(1)).unwrap(), 2);
        let b = solve(&GroupData::load(TypeLabel::A(2)).unwrap(), 2);
        assert_eq!(compare_mod_r(&a, &b, 5), Err(SolveError::BlockMismatch));
    }
}
