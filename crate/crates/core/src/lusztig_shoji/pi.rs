use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{build_omega, solve_p_lambda, PSolution, SolveError};
use crate::algebra::{interpolate, IntPoly, Matrix};
use crate::arith::PrimePower;
use crate::group_data::GroupData;

/// Polynomials `π_{E',E}` with `p_{E',E} = π_{E',E}(q)`, in block order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiMatrix {
    pub labels: Vec<String>,
    pub polys: Matrix<IntPoly>,
    pub samples: Vec<PrimePower>,
    pub held_out: Vec<PrimePower>,
}

impl PiMatrix {
    pub fn eval(&self, q: &PrimePower) -> Matrix<BigInt> {
        self.polys.map(|p| p.eval(q.value()))
    }
}

impl fmt::Display for PiMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[PrimePower]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        writeln!(f, "samples: {}", join(&self.samples))?;
        writeln!(f, "held out: {}", join(&self.held_out))?;
        for (i, a) in self.labels.iter().enumerate() {
            for (j, b) in self.labels.iter().enumerate() {
                writeln!(f, "pi[{a}, {b}] = {}", self.polys[(i, j)])?;
            }
        }
        Ok(())
    }
}

fn solve_at(g: &GroupData, q: &PrimePower) -> Result<PSolution, SolveError> {
    solve_p_lambda(&build_omega(g, q)?)
}

/// Interpolates every `p_{E',E}` through `samples` and checks the result
/// at every point of `held_out`.
pub fn reconstruct_pi(g: &GroupData, samples: &[PrimePower], held_out: &[PrimePower]) -> Result<PiMatrix, SolveError> {
    if samples.len() < 2 || held_out.is_empty() {
        return Err(SolveError::InsufficientSamples("need two samples and a held-out point".into()));
    }
    let sols = samples.iter().map(|q| solve_at(g, q)).collect::<Result<Vec<_>, _>>()?;
    let n = sols[0].p.rows();
    let mut polys = Matrix::from_fn(n, n, |_, _| IntPoly::default());
    for i in 0..n {
        for j in 0..n {
            let pts: Vec<(BigInt, BigRational)> = samples
                .iter()
                .zip(&sols)
                .map(|(q, s)| (q.value().clone(), BigRational::from_integer(s.p[(i, j)].clone())))
                .collect();
            let interp = interpolate(&pts).map_err(|e| SolveError::InsufficientSamples(e.to_string()))?;
            polys[(i, j)] = interp.int_poly().ok_or_else(|| {
                SolveError::InsufficientSamples(format!("entry ({i}, {j}) interpolates to a non-integral polynomial"))
            })?;
        }
    }
    let pi = PiMatrix { labels: sols[0].omega.labels.clone(), polys, samples: samples.to_vec(), held_out: held_out.to_vec() };
    for q in held_out {
        let s = solve_at(g, q)?;
        if pi.eval(q) != s.p {
            return Err(SolveError::InsufficientSamples(format!("held-out check failed at q = {q}")));
        }
    }
    Ok(pi)
}

/// First `count` admissible prime powers for the pack, starting above `from`.
pub fn auto_sample_points(g: &GroupData, from: u64, count: usize) -> Vec<PrimePower> {
    g.pack
        .admissible_prime_powers()
        .filter(|q| q.value() > &BigInt::from(from))
        .take(count)
        .collect()
}

/// `max d + 1` samples and two held-out points, adding samples until the
/// held-out check passes.
pub fn reconstruct_pi_auto(g: &GroupData) -> Result<PiMatrix, SolveError> {
    let base = g.d.iter().copied().max().unwrap_or(0) + 1;
    let mut last = None;
    for extra in 0..4 {
        let pts = auto_sample_points(g, 1, base.max(2) + extra + 2);
        let (samples, held) = pts.split_at(pts.len() - 2);
        match reconstruct_pi(g, samples, held) {
            Ok(pi) => return Ok(pi),
            Err(e @ SolveError::InsufficientSamples(_)) => last = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(last.expect("at least one attempt"))
}

#[cfg(test)]
mod tests {
    use num_traits::{One, Zero};

    use super::*;
    use crate::weyl::TypeLabel;

    fn pp(v: &[u64]) -> Vec<PrimePower> {
        v.iter().map(|&q| PrimePower::new(q).unwrap()).collect()
    }

    #[test]
    fn gl2_pi() {
        let g = GroupData::load(TypeLabel::A(1)).unwrap();
        let pi = reconstruct_pi(&g, &pp(&[2, 3]), &pp(&[5])).unwrap();
        assert!(pi.polys[(0, 0)].is_one() && pi.polys[(1, 1)].is_one());
        assert!(pi.polys[(0, 1)].is_one());
        assert!(pi.polys[(1, 0)].is_zero());
    }

    #[test]
    fn gl3_auto() {
        let g = GroupData::load(TypeLabel::A(2)).unwrap();
        let pi = reconstruct_pi_auto(&g).unwrap();
        assert_eq!(pi.held_out.len(), 2);
        for i in 0..pi.labels.len() {
            assert!(pi.polys[(i, i)].is_one());
        }
    }
}
