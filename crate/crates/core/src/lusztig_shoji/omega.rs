use std::ops::Range;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::SolveError;
use crate::algebra::RatMatrix;
use crate::arith::PrimePower;
use crate::group_data::GroupData;

/// `Ω̃` and `Ω` at one `q`, rows and columns in block order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaMatrix {
    pub q: PrimePower,
    /// Character labels in block order.
    pub labels: Vec<String>,
    /// Character-table index of each position.
    pub perm: Vec<usize>,
    pub d: Vec<usize>,
    pub class_labels: Vec<String>,
    /// Row ranges of the blocks `𝓘_1, ..., 𝓘_h`.
    pub blocks: Vec<Range<usize>>,
    pub tilde: RatMatrix,
    pub scaled: RatMatrix,
}

impl OmegaMatrix {
    pub fn block_d(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| self.d[b.start]).collect()
    }

    /// `det Ω`, an integer for valid data.
    pub fn det_scaled(&self) -> BigInt {
        self.scaled.det().expect("square").to_integer()
    }

    pub fn det_tilde(&self) -> BigRational {
        self.tilde.det().expect("square")
    }

    /// One line per block giving `d`, the class and the characters.
    pub fn block_summary(&self) -> Vec<String> {
        self.blocks
            .iter()
            .map(|b| {
                format!(
                    "d={} class={} chars={}",
                    self.d[b.start],
                    self.class_labels[b.start],
                    self.labels[b.clone()].join(" ")
                )
            })
            .collect()
    }
}

/// `ω̃_{E',E} = |W|^{-1} Σ_w [G^F:T_w^F] x_{E'}(w) x_E(w)` in character-table
/// order. Needs no Springer data, so it exists at every prime power.
pub fn omega_tilde(g: &GroupData, q: &PrimePower) -> RatMatrix {
    let w = &g.weyl;
    let x = g.chars.class_values(w);
    let weights: Vec<BigInt> = w
        .classes()
        .iter()
        .zip(&g.orders.index)
        .map(|(c, idx)| idx.eval(q.value()) * BigInt::from(c.members.len()))
        .collect();
    let order = BigRational::from_integer(BigInt::from(w.order()));
    let n = g.chars.len();
    RatMatrix::from_fn(n, n, |a, b| {
        let s: BigInt = (0..weights.len())
            .map(|c| &weights[c] * BigInt::from(x[a][c] * x[b][c]))
            .sum();
        BigRational::from_integer(s) / &order
    })
}

/// Character-table indices sorted by decreasing `d`, then class label, then
/// table position.
pub fn block_order(g: &GroupData) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.chars.len()).collect();
    order.sort_by(|&a, &b| {
        g.d[b]
            .cmp(&g.d[a])
            .then_with(|| g.class_label(a).cmp(g.class_label(b)))
            .then_with(|| a.cmp(&b))
    });
    order
}

pub fn build_omega(g: &GroupData, q: &PrimePower) -> Result<OmegaMatrix, SolveError> {
    g.pack.check_admissible(q).map_err(|e| SolveError::Inadmissible(e.to_string()))?;
    build_omega_with_order(g, q, &block_order(g))
}

/// As [`build_omega`] with a caller-chosen order, which must keep equal
/// classes contiguous and `d` non-increasing.
pub fn build_omega_with_order(g: &GroupData, q: &PrimePower, perm: &[usize]) -> Result<OmegaMatrix, SolveError> {
    let base = omega_tilde(g, q);
    let tilde = base.permute_symmetric(perm);
    let d: Vec<usize> = perm.iter().map(|&e| g.d[e]).collect();
    let class_labels: Vec<String> = perm.iter().map(|&e| g.class_label(e).to_string()).collect();
    if d.windows(2).any(|w| w[0] < w[1]) {
        return Err(SolveError::Order("d must be non-increasing".into()));
    }
    let mut blocks: Vec<Range<usize>> = Vec::new();
    for i in 0..perm.len() {
        match blocks.last_mut() {
            Some(b) if class_labels[b.start] == class_labels[i] => b.end = i + 1,
            _ => {
                if blocks.iter().any(|b| class_labels[b.start] == class_labels[i]) {
                    return Err(SolveError::Order(format!("class {} is not contiguous", class_labels[i])));
                }
                blocks.push(i..i + 1);
            }
        }
    }
    if !tilde.is_integral() {
        return Err(SolveError::OmegaIntegrality("tilde entry is not an integer".into()));
    }
    let qv = q.value();
    let mut scaled = tilde.clone();
    for a in 0..perm.len() {
        for b in 0..perm.len() {
            let den = qv.pow((d[a] + d[b]) as u32);
            let v = tilde[(a, b)].to_integer();
            if !(&v % &den).is_zero() {
                return Err(SolveError::OmegaIntegrality(format!(
                    "q^{} does not divide entry ({}, {})",
                    d[a] + d[b],
                    a,
                    b
                )));
            }
            scaled[(a, b)] = BigRational::from_integer(v / den);
        }
    }
    debug_assert!(tilde.is_symmetric());
    Ok(OmegaMatrix {
        q: q.clone(),
        labels: perm.iter().map(|&e| g.chars.labels()[e].clone()).collect(),
        perm: perm.to_vec(),
        d,
        class_labels,
        blocks,
        tilde,
        scaled,
    })
}

/// `Π_w [G^F:T_w^F]` over γ-class representatives.
pub fn index_product(g: &GroupData, q: &PrimePower) -> BigInt {
    g.orders.index.iter().map(|p| p.eval(q.value())).product()
}
