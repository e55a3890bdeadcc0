//! Order polynomials of twisted tori and of the finite group.

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::algebra::IntPoly;
use crate::weyl::{char_poly, finite_order_inverse, mat_mul, CartanDatum, WeylGroup};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderError {
    #[error("torus order does not divide group order")]
    NotDivisible,
}

/// `|T_w^F| = f_w(q)` with `f_w = det(q - (γ*)^{-1} w)` on the cocharacter lattice.
pub fn torus_order_poly(datum: &CartanDatum, w: &WeylGroup, e: usize) -> IntPoly {
    let inv = finite_order_inverse(&datum.twist);
    char_poly(&mat_mul(&inv, &w.element(e).matrix))
}

/// `|G^F| = f(q)` with `f = q^N f_1 Σ_{γ(w)=w} q^{l(w)}`.
pub fn group_order_poly(datum: &CartanDatum, w: &WeylGroup) -> IntPoly {
    let f1 = torus_order_poly(datum, w, 0);
    let mut poincare = IntPoly::zero();
    for e in 0..w.order() {
        if w.gamma(e) == e {
            poincare = &poincare + &IntPoly::monomial(1, w.length(e));
        }
    }
    &(&IntPoly::monomial(1, w.positive_root_count()) * &f1) * &poincare
}

/// `[G^F : T_w^F] = f / f_w`.
pub fn index_poly(datum: &CartanDatum, w: &WeylGroup, e: usize) -> Result<IntPoly, OrderError> {
    group_order_poly(datum, w)
        .div_exact(&torus_order_poly(datum, w, e))
        .map_err(|_| OrderError::NotDivisible)
}

/// Order polynomials at every γ-class representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderData {
    pub torus: Vec<IntPoly>,
    pub group: IntPoly,
    pub index: Vec<IntPoly>,
}

impl OrderData {
    pub fn new(w: &WeylGroup) -> Result<Self, OrderError> {
        let datum = w.datum();
        let group = group_order_poly(datum, w);
        let torus: Vec<IntPoly> = w.classes().iter().map(|c| torus_order_poly(datum, w, c.rep)).collect();
        let index = torus
            .iter()
            .map(|t| group.div_exact(t).map_err(|_| OrderError::NotDivisible))
            .collect::<Result<_, _>>()?;
        Ok(OrderData { torus, group, index })
    }

    pub fn group_order(&self, q: &BigInt) -> BigInt {
        self.group.eval(q)
    }

    /// `|G^F|` with the power of the characteristic removed.
    pub fn p_prime_part(&self, q: &BigInt) -> BigInt {
        let mut v = self.group.eval(q);
        while !v.is_zero() && (&v % q).is_zero() {
            v /= q;
        }
        v
    }
}
