//! Primes and prime powers.

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{0} is not a prime power greater than 1")]
pub struct NotPrimePower(pub u64);

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A field size `q = p^k`, kept as an arbitrary-precision integer so that
/// powers `q^r` stay exact.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PrimePower {
    value: BigInt,
    p: u64,
    k: u32,
}

impl PrimePower {
    pub fn new(q: u64) -> Result<Self, NotPrimePower> {
        if q < 2 {
            return Err(NotPrimePower(q));
        }
        let p = (2..=q).find(|d| q.is_multiple_of(*d)).expect("q >= 2 has a divisor");
        let mut rest = q;
        let mut k = 0;
        while rest.is_multiple_of(p) {
            rest /= p;
            k += 1;
        }
        if rest != 1 {
            return Err(NotPrimePower(q));
        }
        Ok(PrimePower { value: BigInt::from(q), p, k })
    }

    pub fn value(&self) -> &BigInt {
        &self.value
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn exponent(&self) -> u32 {
        self.k
    }

    /// `q^r`.
    pub fn pow(&self, r: u32) -> PrimePower {
        PrimePower { value: self.value.pow(r), p: self.p, k: self.k * r }
    }

    /// Residue of `q` modulo `m`.
    pub fn residue(&self, m: u64) -> u64 {
        let r = &self.value % BigInt::from(m);
        u64::try_from(r).expect("non-negative residue")
    }

    /// Rough decimal size of `q`, used for compute budgets.
    pub fn digits(&self) -> usize {
        self.value.to_string().len()
    }
}

impl fmt::Display for PrimePower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Prime powers `>= 2` in increasing order.
pub fn prime_powers() -> impl Iterator<Item = PrimePower> {
    (2u64..).filter_map(|q| PrimePower::new(q).ok())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        let ps: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(ps, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }

    #[test]
    fn prime_power_parsing() {
        let q = PrimePower::new(9).unwrap();
        assert_eq!((q.characteristic(), q.exponent()), (3, 2));
        assert!(PrimePower::new(6).is_err());
        assert!(PrimePower::new(1).is_err());
        assert_eq!(q.pow(7).to_string(), "4782969");
        assert_eq!(q.pow(7).exponent(), 14);
        assert_eq!(q.residue(4), 1);
        let first: Vec<u64> = prime_powers().take(8).map(|q| q.value().try_into().unwrap()).collect();
        assert_eq!(first, vec![2, 3, 4, 5, 7, 8, 9, 11]);
    }
}
