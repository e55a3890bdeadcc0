use std::ops::Range;

use num_traits::Zero;

use super::{OmegaMatrix, SolveError};
use crate::algebra::{IntMatrix, RatMatrix};

/// The factorization `P^tr Λ P = Ω`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PSolution {
    pub omega: OmegaMatrix,
    pub p: IntMatrix,
    pub lambda: IntMatrix,
}

impl PSolution {
    pub fn block_sizes(&self) -> Vec<usize> {
        self.omega.blocks.iter().map(Range::len).collect()
    }

    pub fn lambda_block(&self, i: usize) -> IntMatrix {
        let b = &self.omega.blocks[i];
        self.lambda.block(b.clone(), b.clone()).expect("block in range")
    }
}

/// Block solve of `P^tr Λ P = Ω` in the order given by `omega.blocks`.
pub fn solve_p_lambda(omega: &OmegaMatrix) -> Result<PSolution, SolveError> {
    let d = omega.block_d();
    let (p, lambda) = solve_blocks(&omega.scaled, &omega.blocks, &d)?;
    Ok(PSolution { omega: omega.clone(), p, lambda })
}

/// The factorization for an arbitrary symmetric matrix with block ranges
/// `blocks` carrying non-increasing weights `d`. Blocks of equal weight get
/// forced-zero coupling, and their residual must vanish.
pub fn solve_blocks(
    omega: &RatMatrix,
    blocks: &[Range<usize>],
    d: &[usize],
) -> Result<(IntMatrix, IntMatrix), SolveError> {
    let n = omega.rows();
    if !omega.is_square() || blocks.len() != d.len() || blocks.last().map_or(0, |b| b.end) != n {
        return Err(SolveError::Order("block structure does not cover the matrix".into()));
    }
    let h = blocks.len();
    let sub = |m: &RatMatrix, i: usize, j: usize| m.block(blocks[i].clone(), blocks[j].clone()).expect("in range");
    let mut p = RatMatrix::identity(n);
    let mut lam = RatMatrix::zeros(n, n);
    let mut lam_blocks: Vec<RatMatrix> = Vec::with_capacity(h);

    // Σ_{k<i} P_{k,a}^tr Λ_k P_{k,b}
    let correction = |p: &RatMatrix, lam_blocks: &[RatMatrix], i: usize, a: usize, b: usize| -> RatMatrix {
        let mut acc = RatMatrix::zeros(blocks[a].len(), blocks[b].len());
        for (k, lk) in lam_blocks.iter().enumerate().take(i) {
            let pka = sub(p, k, a);
            let pkb = sub(p, k, b);
            let term = pka.transpose().try_mul(lk).and_then(|t| t.try_mul(&pkb)).expect("conformable");
            acc = acc.try_add(&term).expect("conformable");
        }
        acc
    };

    for i in 0..h {
        let li = sub(omega, i, i).try_sub(&correction(&p, &lam_blocks, i, i, i)).expect("conformable");
        if !li.is_positive_definite() {
            return Err(SolveError::DegenerateBlock(i));
        }
        let li_inv = li.inverse().map_err(|_| SolveError::DegenerateBlock(i))?;
        for j in i + 1..h {
            let resid = sub(omega, i, j).try_sub(&correction(&p, &lam_blocks, i, i, j)).expect("conformable");
            if d[i] > d[j] {
                let pij = li_inv.try_mul(&resid).expect("conformable");
                p.set_block(blocks[i].start, blocks[j].start, &pij);
            } else if d[i] == d[j] {
                if resid.entries().any(|(_, _, v)| !v.is_zero()) {
                    return Err(SolveError::ShapeContradiction { row_block: i, col_block: j });
                }
            } else {
                return Err(SolveError::Order("d must be non-increasing".into()));
            }
        }
        lam.set_block(blocks[i].start, blocks[i].start, &li);
        lam_blocks.push(li);
    }

    let check = p.transpose().try_mul(&lam).and_then(|t| t.try_mul(&p)).expect("square");
    if &check != omega {
        return Err(SolveError::Reconstruction);
    }
    let pi = p.to_int().ok_or(SolveError::Integrality("P"))?;
    let li = lam.to_int().ok_or(SolveError::Integrality("Lambda"))?;
    Ok((pi, li))
}

/// Confirms the shape constraints, integrality and positivity of a solution.
pub fn check_shape(sol: &PSolution) -> Vec<String> {
    let mut out = Vec::new();
    let blocks = &sol.omega.blocks;
    let d = sol.omega.block_d();
    for (i, bi) in blocks.iter().enumerate() {
        for (j, bj) in blocks.iter().enumerate() {
            let pb = sol.p.block(bi.clone(), bj.clone()).expect("in range");
            let lb = sol.lambda.block(bi.clone(), bj.clone()).expect("in range");
            let zero_p = pb.entries().all(|(_, _, v)| v.is_zero());
            if i == j {
                if pb != IntMatrix::identity(bi.len()) {
                    out.push(format!("P diagonal block {i} is not the identity"));
                }
                if !lb.to_rat().is_positive_definite() {
                    out.push(format!("Lambda block {i} is not positive definite"));
                }
            } else {
                if !lb.entries().all(|(_, _, v)| v.is_zero()) {
                    out.push(format!("Lambda has a nonzero off-diagonal block ({i},{j})"));
                }
                if (i > j || d[i] <= d[j]) && !zero_p {
                    out.push(format!("P block ({i},{j}) should vanish"));
                }
            }
        }
    }
    if !sol.omega.scaled.is_integral() || !sol.omega.tilde.is_integral() {
        out.push("omega is not integral".into());
    }
    let check = sol
        .p
        .transpose()
        .try_mul(&sol.lambda)
        .and_then(|t| t.try_mul(&sol.p))
        .expect("square");
    if check.to_rat() != sol.omega.scaled {
        out.push("P^tr Lambda P differs from Omega".into());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::PrimePower;
    use crate::group_data::GroupData;
    use crate::lusztig_shoji::build_omega;
    use crate::weyl::TypeLabel;

    #[test]
    fn gl2_solution() {
        let g = GroupData::load(TypeLabel::A(1)).unwrap();
        for qv in [2i64, 3, 7] {
            let q = PrimePower::new(qv as u64).unwrap();
            let sol = solve_p_lambda(&build_omega(&g, &q).unwrap()).unwrap();
            assert_eq!(sol.p, IntMatrix::from_i64_rows(&[&[1, 1], &[0, 1]]));
            assert_eq!(sol.lambda, IntMatrix::from_i64_rows(&[&[1, 0], &[0, qv * qv - 1]]));
            assert!(check_shape(&sol).is_empty());
        }
    }

    #[test]
    fn one_by_one() {
        let m = RatMatrix::from_int_rows(&[&[7]]);
        let (p, l) = solve_blocks(&m, &[0..1], &[0]).unwrap();
        assert_eq!(p, IntMatrix::from_i64_rows(&[&[1]]));
        assert_eq!(l, IntMatrix::from_i64_rows(&[&[7]]));
    }

    #[test]
    fn failures() {
        let m = RatMatrix::from_int_rows(&[&[0]]);
        assert_eq!(solve_blocks(&m, &[0..1], &[0]), Err(SolveError::DegenerateBlock(0)));
        let m = RatMatrix::from_int_rows(&[&[1, 1], &[1, 3]]);
        assert_eq!(
            solve_blocks(&m, &[0..1, 1..2], &[1, 1]),
            Err(SolveError::ShapeContradiction { row_block: 0, col_block: 1 })
        );
        let m = RatMatrix::from_int_rows(&[&[2, 1], &[1, 3]]);
        assert_eq!(solve_blocks(&m, &[0..1, 1..2], &[1, 0]), Err(SolveError::Integrality("P")));
    }
}
