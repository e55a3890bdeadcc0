use std::collections::HashMap;
use std::sync::Mutex;

use num_traits::Zero;

use crate::algebra::{IntPoly, PolyMatrix};
use crate::partition::Partition;

use super::datum::LatticeFlavor;
use super::group::WeylGroup;
use super::{TypeLabel, WeylError};

/// The σ-twisted character table `Tr(σ_E ∘ w, E)` of `W`, one row per
/// γ-stable irreducible character, one column per element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaCharTable {
    labels: Vec<String>,
    degrees: Vec<i64>,
    values: Vec<Vec<i64>>,
}

/// A twisted table supplied as labelled rows over the canonical element order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaRows {
    pub rows: Vec<(String, Vec<i64>)>,
}

impl SigmaCharTable {
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn degree(&self, e: usize) -> i64 {
        self.degrees[e]
    }

    pub fn value(&self, e: usize, w: usize) -> i64 {
        self.values[e][w]
    }

    pub fn row(&self, e: usize) -> &[i64] {
        &self.values[e]
    }

    /// Values at the γ-class representatives, `x[e][c]`.
    pub fn class_values(&self, w: &WeylGroup) -> Vec<Vec<i64>> {
        self.values.iter().map(|row| w.classes().iter().map(|c| row[c.rep]).collect()).collect()
    }

    /// Checks integrality-adjacent structure: constancy on γ-classes, the
    /// label count, and the twisted first orthogonality relation
    /// `Σ_E x_E(w) x_E(w') = |C_W^γ(w)| δ`.
    pub fn verify(&self, w: &WeylGroup) -> Result<(), WeylError> {
        let fail = |msg: String| Err(WeylError::CharacterTable(msg));
        if self.labels.len() != w.classes().len() {
            return fail(format!(
                "{} characters for {} gamma-classes",
                self.labels.len(),
                w.classes().len()
            ));
        }
        for (e, row) in self.values.iter().enumerate() {
            if row.len() != w.order() {
                return fail(format!("row {} has {} entries", self.labels[e], row.len()));
            }
            for c in w.classes() {
                if c.members.iter().any(|&m| row[m] != row[c.rep]) {
                    return fail(format!("{} is not constant on class {}", self.labels[e], c.label));
                }
            }
        }
        let x = self.class_values(w);
        for (i, ci) in w.classes().iter().enumerate() {
            for j in 0..w.classes().len() {
                let s: i64 = x.iter().map(|row| row[i] * row[j]).sum();
                let expect = if i == j { w.gamma_centralizer_order(ci.rep) as i64 } else { 0 };
                if s != expect {
                    return fail(format!("column orthogonality fails at ({i},{j}): {s} != {expect}"));
                }
            }
        }
        Ok(())
    }
}

/// Builds the σ-twisted character table. Untwisted types need no extra data;
/// twisted types take their rows from `twisted`.
pub fn character_table(w: &WeylGroup, twisted: Option<&SigmaRows>) -> Result<SigmaCharTable, WeylError> {
    let datum = w.datum();
    let table = match datum.label {
        TypeLabel::A(n) => {
            let parts = Partition::all(n + 1);
            let cycle: Vec<Partition> = (0..w.order()).map(|e| cycle_type(w, e)).collect();
            let values: Vec<Vec<i64>> =
                parts.iter().map(|lam| cycle.iter().map(|rho| mn_value(lam, rho)).collect()).collect();
            SigmaCharTable {
                labels: parts.iter().map(ToString::to_string).collect(),
                degrees: values.iter().map(|r| r[0]).collect(),
                values,
            }
        }
        TypeLabel::B2 | TypeLabel::G2 => dihedral_table(w),
        TypeLabel::TwistedA(n) => {
            let rows = twisted.ok_or(WeylError::TwistedDataAbsent)?;
            let mut labels = Vec::new();
            let mut values = Vec::new();
            for lam in Partition::all(n + 1) {
                let label = lam.to_string();
                let (_, row) = rows.rows.iter().find(|(l, _)| *l == label).ok_or(WeylError::TwistedDataAbsent)?;
                labels.push(label);
                values.push(row.clone());
            }
            if rows.rows.len() != labels.len() {
                return Err(WeylError::CharacterTable("unexpected twisted character labels".into()));
            }
            SigmaCharTable { labels, degrees: values.iter().map(|r| r[0].abs()).collect(), values }
        }
    };
    table.verify(w)?;
    Ok(table)
}

/// Labels expected for `Irr(W)^γ`.
pub fn expected_labels(label: TypeLabel) -> Vec<String> {
    match label {
        TypeLabel::A(n) | TypeLabel::TwistedA(n) => Partition::all(n + 1).iter().map(ToString::to_string).collect(),
        TypeLabel::B2 => ["2.", "11.", "1.1", ".2", ".11"].map(String::from).to_vec(),
        TypeLabel::G2 => ["phi1,0", "phi1,6", "phi1,3'", "phi1,3''", "phi2,1", "phi2,2"].map(String::from).to_vec(),
    }
}

fn dihedral_table(w: &WeylGroup) -> SigmaCharTable {
    let n = w.order();
    // linear characters from the parity of each generator in a reduced word;
    // generator 0 is long, generator 1 short
    let linear = |long: i64, short: i64| -> Vec<i64> {
        w.elements()
            .iter()
            .map(|e| {
                e.word
                    .iter()
                    .map(|&g| if g == 0 { long } else { short })
                    .product()
            })
            .collect()
    };
    let trace: Vec<i64> = w.elements().iter().map(|e| e.matrix[0][0] + e.matrix[1][1]).collect();
    let det: Vec<i64> = w.elements().iter().map(|e| if e.word.len() % 2 == 0 { 1 } else { -1 }).collect();
    let refl = trace.clone();
    let mut labels = Vec::new();
    let mut values = Vec::new();
    match w.datum().label {
        TypeLabel::B2 => {
            for (l, row) in [
                ("2.", linear(1, 1)),
                ("11.", linear(-1, 1)),
                ("1.1", refl),
                (".2", linear(1, -1)),
                (".11", linear(-1, -1)),
            ] {
                labels.push(l.to_string());
                values.push(row);
            }
        }
        _ => {
            let second: Vec<i64> = (0..n).map(|k| if det[k] == 1 { trace[k] * trace[k] - 2 } else { 0 }).collect();
            for (l, row) in [
                ("phi1,0", linear(1, 1)),
                ("phi1,6", linear(-1, -1)),
                ("phi1,3'", linear(-1, 1)),
                ("phi1,3''", linear(1, -1)),
                ("phi2,1", refl),
                ("phi2,2", second),
            ] {
                labels.push(l.to_string());
                values.push(row);
            }
        }
    }
    SigmaCharTable { labels, degrees: values.iter().map(|r| r[0]).collect(), values }
}

/// Cycle type of `w` for a type-A Weyl group acting on coordinates.
/// For the adjoint lattice it is read off from the characteristic polynomial.
pub fn cycle_type(w: &WeylGroup, e: usize) -> Partition {
    let datum = w.datum();
    let m = &w.element(e).matrix;
    match datum.flavor {
        LatticeFlavor::GeneralLinear => {
            let n = m.len();
            let target: Vec<usize> = (0..n).map(|j| (0..n).find(|&i| m[i][j] != 0).expect("permutation")).collect();
            let mut seen = vec![false; n];
            let mut parts = Vec::new();
            for s in 0..n {
                let mut len = 0;
                let mut k = s;
                while !seen[k] {
                    seen[k] = true;
                    k = target[k];
                    len += 1;
                }
                if len > 0 {
                    parts.push(len);
                }
            }
            Partition::new(parts)
        }
        LatticeFlavor::Adjoint => {
            let charpoly = char_poly(m);
            let q_minus_one = IntPoly::from_i64s(&[-1, 1]);
            let full = &charpoly * &q_minus_one;
            Partition::all(datum.rank + 1)
                .into_iter()
                .find(|rho| {
                    let p = rho
                        .parts()
                        .iter()
                        .fold(IntPoly::constant(1), |acc, &k| &acc * &(&IntPoly::monomial(1, k) - &IntPoly::constant(1)));
                    p == full
                })
                .expect("characteristic polynomial of a permutation")
        }
    }
}

/// `det(q I - m)`.
pub fn char_poly(m: &[Vec<i64>]) -> IntPoly {
    let n = m.len();
    PolyMatrix::from_fn(n, n, |i, j| {
        let diag = if i == j { IntPoly::q() } else { IntPoly::zero() };
        &diag - &IntPoly::constant(m[i][j])
    })
    .det_by_minors()
    .expect("square")
}

type MnKey = (Vec<usize>, Vec<usize>);

fn mn_cache() -> &'static Mutex<HashMap<MnKey, i64>> {
    static CACHE: std::sync::OnceLock<Mutex<HashMap<MnKey, i64>>> = std::sync::OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `χ^λ(ρ)` by the Murnaghan–Nakayama rule on beta-sets, memoized on `(λ, ρ)`.
pub fn mn_value(lambda: &Partition, rho: &Partition) -> i64 {
    assert_eq!(lambda.size(), rho.size(), "partitions of different sizes");
    mn_rec(lambda.parts(), rho.parts())
}

fn mn_rec(lambda: &[usize], rho: &[usize]) -> i64 {
    if rho.is_empty() {
        return 1;
    }
    let key = (lambda.to_vec(), rho.to_vec());
    if let Some(&v) = mn_cache().lock().expect("cache").get(&key) {
        return v;
    }
    let r = rho[0];
    let len = lambda.len();
    let beta: Vec<usize> = lambda.iter().enumerate().map(|(i, &p)| p + len - 1 - i).collect();
    let mut total = 0;
    for (i, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let height = beta.iter().filter(|&&x| x > b - r && x < b).count();
        let mut nb = beta.clone();
        nb[i] = b - r;
        nb.sort_unstable_by(|a, c| c.cmp(a));
        let m = nb.len();
        let parts: Vec<usize> =
            nb.iter().enumerate().map(|(k, &x)| x - (m - 1 - k)).filter(|&p| p > 0).collect();
        let sign = if height % 2 == 0 { 1 } else { -1 };
        total += sign * mn_rec(&parts, &rho[1..]);
    }
    mn_cache().lock().expect("cache").insert(key, total);
    total
}
