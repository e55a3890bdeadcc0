//! Almost characters on unipotent elements and the Green-function table
//! `Q_w(u) = Σ_{E',E} x_E(w) q^{d_E} p_{E',E} Y_{E'}(u)`.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::algebra::{interpolate, IntPoly, Matrix};
use crate::arith::PrimePower;
use crate::error::{Error, Result};
use crate::group_data::GroupData;
use crate::lusztig_shoji::{build_omega, solve_p_lambda, PSolution, SolveError};
use crate::springer::Column;
use crate::weyl::TypeLabel;

/// `R_E(u)` with rows in the block order of the solution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlmostCharacters {
    pub labels: Vec<String>,
    pub columns: Vec<Column>,
    pub values: Vec<Vec<BigInt>>,
}

pub fn almost_character_unipotent(g: &GroupData, sol: &PSolution) -> Result<AlmostCharacters> {
    let om = &sol.omega;
    let q = &om.q;
    let y = g.pack.y_matrix(&om.labels, q)?;
    let columns = g.pack.columns();
    let n = om.labels.len();
    let values = (0..n)
        .map(|e| {
            let scale = q.value().pow(om.d[e] as u32);
            (0..columns.len())
                .map(|u| {
                    let s: BigInt = (0..n).map(|e2| &sol.p[(e2, e)] * BigInt::from(y[e2][u])).sum();
                    s * &scale
                })
                .collect()
        })
        .collect();
    Ok(AlmostCharacters { labels: om.labels.clone(), columns, values })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreenTable {
    pub label: TypeLabel,
    pub q: PrimePower,
    pub provenance: String,
    /// γ-class labels and representatives.
    pub rows: Vec<String>,
    pub reps: Vec<usize>,
    pub columns: Vec<Column>,
    pub values: Vec<Vec<BigInt>>,
    /// Character blocks in solve order, one line each.
    pub blocks: Vec<String>,
    /// Residue used for each sign that depends on `q`.
    pub residues: Vec<String>,
}

impl GreenTable {
    pub fn column_labels(&self) -> Vec<&str> {
        self.columns.iter().map(|c| c.label.as_str()).collect()
    }

    pub fn value(&self, row: &str, col: &str) -> Option<&BigInt> {
        let i = self.rows.iter().position(|r| r == row)?;
        let j = self.columns.iter().position(|c| c.label == col)?;
        Some(&self.values[i][j])
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("w");
        for c in &self.columns {
            out.push(',');
            out.push_str(&c.label);
        }
        out.push('\n');
        for (label, row) in self.rows.iter().zip(&self.values) {
            out.push_str(label);
            for v in row {
                write!(out, ",{v}").expect("string write");
            }
            out.push('\n');
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "type: {}", self.label).ok();
        writeln!(out, "q: {}", self.q).ok();
        writeln!(out, "provenance: {}", self.provenance).ok();
        for b in &self.blocks {
            writeln!(out, "block: {b}").ok();
        }
        for r in &self.residues {
            writeln!(out, "residue: {r}").ok();
        }
        writeln!(out, "columns: {}", self.column_labels().join(" ")).ok();
        for (label, row) in self.rows.iter().zip(&self.values) {
            let vals: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(out, "Q[{label}]: {}", vals.join(" ")).ok();
        }
        out
    }
}

pub fn green_table(g: &GroupData, sol: &PSolution, r: &AlmostCharacters) -> GreenTable {
    let w = &g.weyl;
    let x = g.chars.class_values(w);
    let om = &sol.omega;
    let values = (0..w.classes().len())
        .map(|c| {
            (0..r.columns.len())
                .map(|u| {
                    (0..om.labels.len())
                        .map(|e| BigInt::from(x[om.perm[e]][c]) * &r.values[e][u])
                        .sum()
                })
                .collect()
        })
        .collect();
    let residues = g
        .pack
        .springer
        .iter()
        .filter(|e| !e.delta.is_constant())
        .map(|e| format!("{} uses q mod {} = {}", e.char_label, e.delta.modulus(), om.q.residue(e.delta.modulus())))
        .collect();
    GreenTable {
        label: g.label(),
        q: om.q.clone(),
        provenance: g.pack.provenance.clone(),
        rows: w.classes().iter().map(|c| c.label.clone()).collect(),
        reps: w.classes().iter().map(|c| c.rep).collect(),
        columns: r.columns.clone(),
        values,
        blocks: om.block_summary(),
        residues,
    }
}

/// The whole pipeline at one `q`.
#[derive(Clone, Debug)]
pub struct GreenRun {
    pub solution: PSolution,
    pub almost: AlmostCharacters,
    pub table: GreenTable,
}

pub fn compute(g: &GroupData, q: &PrimePower) -> Result<GreenRun> {
    let solution = solve_p_lambda(&build_omega(g, q)?)?;
    let almost = almost_character_unipotent(g, &solution)?;
    let table = green_table(g, &solution, &almost);
    Ok(GreenRun { solution, almost, table })
}

/// A failed inner-product identity at `(row, col)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub row: String,
    pub col: String,
    pub found: BigInt,
    pub expected: BigInt,
}

/// `Σ_u |u| Q_w(u) Q_{w'}(u)` against `[G^F:T_w^F] |C_W^γ(w)|` or zero.
pub fn orthogonality_check(table: &GreenTable, g: &GroupData) -> Result<Vec<Mismatch>> {
    let sizes = class_sizes(g, &table.columns, &table.q)?;
    let w = &g.weyl;
    let mut out = Vec::new();
    for (i, ri) in table.values.iter().enumerate() {
        for (j, rj) in table.values.iter().enumerate() {
            let found: BigInt = (0..sizes.len()).map(|u| &sizes[u] * &ri[u] * &rj[u]).sum();
            let expected = if i == j {
                g.orders.index[i].eval(table.q.value()) * BigInt::from(w.gamma_centralizer_order(table.reps[i]))
            } else {
                BigInt::from(0)
            };
            if found != expected {
                out.push(Mismatch { row: table.rows[i].clone(), col: table.rows[j].clone(), found, expected });
            }
        }
    }
    Ok(out)
}

/// `Σ_u |u| R_{E'}(u) R_E(u)` against `ω̃_{E',E}`.
pub fn almost_orthogonality_check(r: &AlmostCharacters, sol: &PSolution, g: &GroupData) -> Result<Vec<Mismatch>> {
    let sizes = class_sizes(g, &r.columns, &sol.omega.q)?;
    let mut out = Vec::new();
    for (a, ra) in r.values.iter().enumerate() {
        for (b, rb) in r.values.iter().enumerate() {
            let found: BigInt = (0..sizes.len()).map(|u| &sizes[u] * &ra[u] * &rb[u]).sum();
            let expected = sol.omega.tilde[(a, b)].to_integer();
            if found != expected {
                out.push(Mismatch { row: r.labels[a].clone(), col: r.labels[b].clone(), found, expected });
            }
        }
    }
    Ok(out)
}

/// `λ_{E',E} = Σ_u |u| Y_{E'}(u) Y_E(u)` against the solved `Λ`.
pub fn lambda_gram_check(g: &GroupData, sol: &PSolution) -> Result<Vec<Mismatch>> {
    let om = &sol.omega;
    let y = g.pack.y_matrix(&om.labels, &om.q)?;
    let sizes = class_sizes(g, &g.pack.columns(), &om.q)?;
    let mut out = Vec::new();
    for (a, ya) in y.iter().enumerate() {
        for (b, yb) in y.iter().enumerate() {
            let found: BigInt = (0..sizes.len()).map(|u| &sizes[u] * BigInt::from(ya[u] * yb[u])).sum();
            if found != sol.lambda[(a, b)] {
                out.push(Mismatch {
                    row: om.labels[a].clone(),
                    col: om.labels[b].clone(),
                    found,
                    expected: sol.lambda[(a, b)].clone(),
                });
            }
        }
    }
    Ok(out)
}

fn class_sizes(g: &GroupData, columns: &[Column], q: &PrimePower) -> Result<Vec<BigInt>> {
    columns.iter().map(|c| g.pack.class_size(c, q).map_err(Error::from)).collect()
}

/// Entrywise polynomials through the tables at `samples`, checked at
/// `held_out`. Refused when some sign depends on the residue of `q`.
pub fn table_polynomials(g: &GroupData, samples: &[PrimePower], held_out: &[PrimePower]) -> Result<Matrix<IntPoly>> {
    if let Some(e) = g.pack.springer.iter().find(|e| !e.delta.is_constant()) {
        return Err(SolveError::Porc(e.char_label.clone()).into());
    }
    if samples.is_empty() {
        return Err(SolveError::InsufficientSamples("no sample points".into()).into());
    }
    let tables = samples.iter().map(|q| compute(g, q).map(|r| r.table)).collect::<Result<Vec<_>>>()?;
    let (nr, nc) = (tables[0].rows.len(), tables[0].columns.len());
    let mut polys = Matrix::from_fn(nr, nc, |_, _| IntPoly::default());
    for i in 0..nr {
        for j in 0..nc {
            let pts: Vec<(BigInt, BigRational)> = samples
                .iter()
                .zip(&tables)
                .map(|(q, t)| (q.value().clone(), BigRational::from_integer(t.values[i][j].clone())))
                .collect();
            let interp = interpolate(&pts)?;
            polys[(i, j)] = interp.int_poly().ok_or_else(|| {
                SolveError::InsufficientSamples(format!("entry ({i}, {j}) is not an integer polynomial"))
            })?;
        }
    }
    for q in held_out {
        let t = compute(g, q)?.table;
        for i in 0..nr {
            for j in 0..nc {
                if polys[(i, j)].eval(q.value()) != t.values[i][j] {
                    return Err(SolveError::InsufficientSamples(format!("held-out check failed at q = {q}")).into());
                }
            }
        }
    }
    Ok(polys)
}
