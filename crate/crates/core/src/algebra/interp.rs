use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{AlgebraError, IntPoly, RatPoly};

/// Result of Lagrange interpolation over exact rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interpolation {
    pub poly: RatPoly,
    pub integral: bool,
}

impl Interpolation {
    pub fn int_poly(&self) -> Option<IntPoly> {
        self.poly.to_int_poly()
    }
}

/// The unique polynomial of degree below `points.len()` through all points.
pub fn interpolate(points: &[(BigInt, BigRational)]) -> Result<Interpolation, AlgebraError> {
    if points.is_empty() {
        return Err(AlgebraError::NoNodes);
    }
    let distinct: BTreeSet<&BigInt> = points.iter().map(|(x, _)| x).collect();
    if distinct.len() != points.len() {
        return Err(AlgebraError::DegenerateNodes);
    }
    let mut acc = RatPoly::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut basis = RatPoly::one();
        let mut denom = BigRational::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            let xj = BigRational::from_integer(xj.clone());
            basis = &basis * &RatPoly::from_coeffs(vec![-xj.clone(), BigRational::one()]);
            denom *= BigRational::from_integer(xi.clone()) - xj;
        }
        acc = &acc + &basis.scale(&(yi / denom));
    }
    let integral = acc.is_integral();
    Ok(Interpolation { poly: acc, integral })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(v: &[(i64, i64, i64)]) -> Vec<(BigInt, BigRational)> {
        v.iter()
            .map(|&(x, n, d)| (BigInt::from(x), BigRational::new(n.into(), d.into())))
            .collect()
    }

    #[test]
    fn linear_and_square() {
        let lin = interpolate(&pts(&[(2, 3, 1), (3, 4, 1), (5, 6, 1)])).unwrap();
        assert_eq!(lin.int_poly().unwrap(), IntPoly::from_i64s(&[1, 1]));
        let sq = interpolate(&pts(&[(2, 4, 1), (3, 9, 1), (4, 16, 1)])).unwrap();
        assert_eq!(sq.int_poly().unwrap(), IntPoly::from_i64s(&[0, 0, 1]));
    }

    #[test]
    fn single_rational_node() {
        let c = interpolate(&pts(&[(2, 7, 2)])).unwrap();
        assert!(!c.integral);
        assert_eq!(c.poly.coeff(0), BigRational::new(7.into(), 2.into()));
        assert_eq!(c.poly.degree(), Some(0));
    }

    #[test]
    fn degenerate_nodes() {
        assert_eq!(
            interpolate(&pts(&[(2, 1, 1), (2, 3, 1)])),
            Err(AlgebraError::DegenerateNodes)
        );
        assert_eq!(interpolate(&[]), Err(AlgebraError::NoNodes));
    }
}
