//! Brute force over `GL_n(F_p)` for tiny `n` and `p`.

use std::collections::{BTreeMap, BTreeSet};

use super::OracleError;
use crate::arith::is_prime;
use crate::partition::Partition;

/// Square matrix over `F_p`, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FpMatrix {
    n: usize,
    p: u8,
    data: Vec<u8>,
}

impl FpMatrix {
    pub fn from_rows(p: u8, rows: &[Vec<u8>]) -> Self {
        let n = rows.len();
        let data = rows.iter().flat_map(|r| r.iter().map(|&x| x % p)).collect();
        FpMatrix { n, p, data }
    }

    pub fn identity(n: usize, p: u8) -> Self {
        let mut data = vec![0; n * n];
        for i in 0..n {
            data[i * n + i] = 1;
        }
        FpMatrix { n, p, data }
    }

    /// `I + N` with `N` nilpotent of Jordan type `lambda`.
    pub fn unipotent(lambda: &Partition, p: u8) -> Self {
        let n = lambda.size();
        let mut m = Self::identity(n, p);
        let mut start = 0;
        for &b in lambda.parts() {
            for i in start..start + b - 1 {
                m.data[i * n + i + 1] = 1;
            }
            start += b;
        }
        m
    }

    /// Companion matrix of a monic polynomial, coefficients low to high
    /// without the leading 1.
    fn companion(coeffs: &[u8], p: u8) -> Self {
        let n = coeffs.len();
        let mut m = FpMatrix { n, p, data: vec![0; n * n] };
        for i in 1..n {
            m.data[i * n + i - 1] = 1;
        }
        for (i, &c) in coeffs.iter().enumerate() {
            m.data[i * n + n - 1] = (p - c % p) % p;
        }
        m
    }

    fn get(&self, i: usize, j: usize) -> u8 {
        self.data[i * self.n + j]
    }

    fn mul(&self, o: &FpMatrix) -> FpMatrix {
        let n = self.n;
        let p = u32::from(self.p);
        let mut data = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                let s: u32 = (0..n).map(|k| u32::from(self.get(i, k)) * u32::from(o.get(k, j))).sum();
                data[i * n + j] = (s % p) as u8;
            }
        }
        FpMatrix { n, p: self.p, data }
    }

    fn sub_identity(&self) -> FpMatrix {
        let mut m = self.clone();
        for i in 0..self.n {
            m.data[i * self.n + i] = (m.data[i * self.n + i] + self.p - 1) % self.p;
        }
        m
    }

    fn apply(&self, v: &[u8]) -> Vec<u8> {
        let p = u32::from(self.p);
        (0..self.n)
            .map(|i| ((0..self.n).map(|k| u32::from(self.get(i, k)) * u32::from(v[k])).sum::<u32>() % p) as u8)
            .collect()
    }

    pub fn rank(&self) -> usize {
        let (n, p) = (self.n, self.p);
        let mut a = self.data.clone();
        let mut rank = 0;
        for c in 0..n {
            let Some(r) = (rank..n).find(|&r| a[r * n + c] != 0) else { continue };
            for k in 0..n {
                a.swap(rank * n + k, r * n + k);
            }
            let inv = inverse_mod(a[rank * n + c], p);
            for k in 0..n {
                a[rank * n + k] = ((u32::from(a[rank * n + k]) * u32::from(inv)) % u32::from(p)) as u8;
            }
            for r2 in 0..n {
                if r2 != rank && a[r2 * n + c] != 0 {
                    let f = u32::from(a[r2 * n + c]);
                    for k in 0..n {
                        let v = u32::from(a[r2 * n + k]) + u32::from(p) * u32::from(p) - f * u32::from(a[rank * n + k]);
                        a[r2 * n + k] = (v % u32::from(p)) as u8;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    pub fn is_invertible(&self) -> bool {
        self.rank() == self.n
    }

    /// Jordan type of a unipotent matrix, `None` otherwise.
    pub fn jordan_type(&self) -> Option<Partition> {
        let nil = self.sub_identity();
        let mut ranks = vec![self.n];
        let mut power = nil.clone();
        for _ in 0..self.n {
            ranks.push(power.rank());
            power = power.mul(&nil);
        }
        if *ranks.last().expect("non-empty") != 0 {
            return None;
        }
        // number of blocks of size >= k is ranks[k-1] - ranks[k]
        let at_least: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
        let mut parts = Vec::new();
        for k in 1..=self.n {
            let exact = at_least[k - 1] - at_least.get(k).copied().unwrap_or(0);
            parts.extend(std::iter::repeat_n(k, exact));
        }
        Some(Partition::new(parts))
    }
}

fn inverse_mod(a: u8, p: u8) -> u8 {
    (1..p).find(|&x| (u32::from(a) * u32::from(x)) % u32::from(p) == 1).expect("nonzero mod a prime")
}

fn decode(mut code: usize, n: usize, p: u8) -> Vec<u8> {
    (0..n)
        .map(|_| {
            let d = (code % p as usize) as u8;
            code /= p as usize;
            d
        })
        .collect()
}

fn encode(v: &[u8], p: u8) -> usize {
    v.iter().rev().fold(0, |acc, &d| acc * p as usize + d as usize)
}

fn all_matrices(n: usize, p: u8) -> impl Iterator<Item = FpMatrix> {
    let total = (p as usize).pow((n * n) as u32);
    (0..total).map(move |code| FpMatrix { n, p, data: decode(code, n * n, p) })
}

/// The number of complete flags in `F_q^n` stabilised by `u`.
pub fn flag_fixed_points(u: &FpMatrix, n: usize, q: u64) -> Result<u64, OracleError> {
    if n > 4 || !(q == 2 || q == 3) {
        return Err(OracleError::Bounds(format!("flag enumeration needs n <= 4 and q in {{2, 3}}, got n = {n}, q = {q}")));
    }
    if u.n != n || u64::from(u.p) != q {
        return Err(OracleError::Bounds("matrix does not match n and q".into()));
    }
    if u.jordan_type().is_none() {
        return Err(OracleError::NotUnipotent);
    }
    let p = u.p;
    let size = (p as usize).pow(n as u32);
    let vectors: Vec<Vec<u8>> = (0..size).map(|c| decode(c, n, p)).collect();
    // a subspace is the bitmask of the codes of its elements
    let span_with = |sub: u128, v: &[u8]| -> u128 {
        let mut out = sub;
        for (c, w) in vectors.iter().enumerate() {
            if sub >> c & 1 == 1 {
                for t in 1..p {
                    let x: Vec<u8> = w.iter().zip(v).map(|(a, b)| (a + t * b) % p).collect();
                    out |= 1u128 << encode(&x, p);
                }
            }
        }
        out
    };
    let stable = |sub: u128| -> bool {
        (0..size).filter(|c| sub >> c & 1 == 1).all(|c| sub >> encode(&u.apply(&vectors[c]), p) & 1 == 1)
    };
    fn count(
        sub: u128,
        dim: usize,
        n: usize,
        vectors: &[Vec<u8>],
        span_with: &dyn Fn(u128, &[u8]) -> u128,
        stable: &dyn Fn(u128) -> bool,
    ) -> u64 {
        if dim == n {
            return 1;
        }
        let mut children = BTreeSet::new();
        for (c, v) in vectors.iter().enumerate() {
            if sub >> c & 1 == 0 {
                children.insert(span_with(sub, v));
            }
        }
        children
            .into_iter()
            .filter(|&ch| stable(ch))
            .map(|ch| count(ch, dim + 1, n, vectors, span_with, stable))
            .sum()
    }
    Ok(count(1, 0, n, &vectors, &span_with, &stable))
}

/// Unipotent class data found by enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnipotentInventory {
    pub jordan_type: Partition,
    pub class_size: u64,
    pub centralizer_order: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlInventory {
    pub n: usize,
    pub q: u64,
    pub group_order: u64,
    /// Ordered by Jordan type.
    pub unipotent: Vec<UnipotentInventory>,
    /// `|T_w^F|` as the centralizer order of a regular semisimple element
    /// whose characteristic polynomial has factor degrees given by the
    /// cycle type; only cycle types realizable over `F_q` appear.
    pub tori: Vec<(Partition, u64)>,
}

/// Exhaustive inventory of `GL_n(F_q)` for `q` prime and `q^{n²} <= 10^6`.
pub fn gl_enumerate(n: usize, q: u64) -> Result<GlInventory, OracleError> {
    if !is_prime(q) || q > 7 || n == 0 || (q as f64).powi((n * n) as i32) > 1.0e6 {
        return Err(OracleError::Bounds(format!("enumeration needs q prime and q^(n^2) <= 10^6, got n = {n}, q = {q}")));
    }
    let p = q as u8;
    let mut group_order = 0u64;
    let mut classes: BTreeMap<Partition, u64> = BTreeMap::new();
    let mut invertible = Vec::new();
    for m in all_matrices(n, p) {
        if !m.is_invertible() {
            continue;
        }
        group_order += 1;
        if let Some(j) = m.jordan_type() {
            *classes.entry(j).or_insert(0) += 1;
        }
        invertible.push(m);
    }
    let unipotent = classes
        .into_iter()
        .map(|(jordan_type, class_size)| UnipotentInventory {
            jordan_type,
            class_size,
            centralizer_order: group_order / class_size,
        })
        .collect();
    let irreducibles = monic_irreducibles(n, p);
    let mut tori = Vec::new();
    for rho in Partition::all(n) {
        if let Some(s) = regular_semisimple(&rho, &irreducibles, p) {
            let sm = s.clone();
            let c = invertible.iter().filter(|x| x.mul(&sm) == sm.mul(x)).count() as u64;
            tori.push((rho, c));
        }
    }
    Ok(GlInventory { n, q, group_order, unipotent, tori })
}

// Polynomials are low-to-high coefficient vectors including the leading 1.
fn monic(deg: usize, p: u8) -> impl Iterator<Item = Vec<u8>> {
    (0..(p as usize).pow(deg as u32)).map(move |code| {
        let mut f = decode(code, deg, p);
        f.push(1);
        f
    })
}

fn divides(g: &[u8], f: &[u8], p: u8) -> bool {
    let mut r: Vec<u32> = f.iter().map(|&c| u32::from(c)).collect();
    let dg = g.len() - 1;
    while r.len() > dg {
        let lead = r[r.len() - 1] % u32::from(p);
        let shift = r.len() - 1 - dg;
        for (i, &c) in g.iter().enumerate() {
            r[shift + i] = (r[shift + i] + u32::from(p) * u32::from(p) - lead * u32::from(c)) % u32::from(p);
        }
        r.pop();
    }
    r.iter().all(|&c| c % u32::from(p) == 0)
}

/// Monic irreducibles of degree `1..=max` other than `x`, by trial division.
fn monic_irreducibles(max: usize, p: u8) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    for deg in 1..=max {
        for f in monic(deg, p) {
            let reducible = (1..=deg / 2).any(|k| monic(k, p).any(|g| divides(&g, &f, p)));
            if !reducible && !(deg == 1 && f[0] == 0) {
                out.push(f);
            }
        }
    }
    out
}

/// Block-diagonal companion matrices of distinct irreducibles of degrees
/// `rho`, choosing the first available factors.
fn regular_semisimple(rho: &Partition, irreducibles: &[Vec<u8>], p: u8) -> Option<FpMatrix> {
    fn pick(rho: &[usize], irreducibles: &[Vec<u8>], used: &mut Vec<usize>) -> bool {
        let Some((&deg, rest)) = rho.split_first() else { return true };
        for (k, f) in irreducibles.iter().enumerate() {
            if f.len() - 1 == deg && !used.contains(&k) {
                used.push(k);
                if pick(rest, irreducibles, used) {
                    return true;
                }
                used.pop();
            }
        }
        false
    }
    let mut used = Vec::new();
    if !pick(rho.parts(), irreducibles, &mut used) {
        return None;
    }
    let n = rho.size();
    let mut m = FpMatrix { n, p, data: vec![0; n * n] };
    let mut start = 0;
    for &k in &used {
        let f = &irreducibles[k];
        let c = FpMatrix::companion(&f[..f.len() - 1], p);
        for i in 0..c.n {
            for j in 0..c.n {
                m.data[(start + i) * n + start + j] = c.get(i, j);
            }
        }
        start += c.n;
    }
    Some(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn jordan_types_round_trip() {
        for n in 1..=4 {
            for l in Partition::all(n) {
                assert_eq!(FpMatrix::unipotent(&l, 2).jordan_type(), Some(l.clone()));
                assert_eq!(FpMatrix::unipotent(&l, 3).jordan_type(), Some(l));
            }
        }
        let s = FpMatrix::from_rows(3, &[vec![2, 0], vec![0, 1]]);
        assert_eq!(s.jordan_type(), None);
    }

    #[test]
    fn flag_counts() {
        let one = |n: usize, q: u8| FpMatrix::unipotent(&Partition::new(vec![1; n]), q);
        assert_eq!(flag_fixed_points(&one(2, 2), 2, 2).unwrap(), 3);
        assert_eq!(flag_fixed_points(&one(3, 2), 3, 2).unwrap(), 21);
        assert_eq!(flag_fixed_points(&one(4, 3), 4, 3).unwrap(), 4 * 13 * 40);
        for n in 1..=4 {
            for q in [2u8, 3] {
                let reg = FpMatrix::unipotent(&Partition::new(vec![n]), q);
                assert_eq!(flag_fixed_points(&reg, n, u64::from(q)).unwrap(), 1);
            }
        }
        assert_eq!(flag_fixed_points(&FpMatrix::unipotent(&p("21"), 2), 3, 2).unwrap(), 5);
        assert!(flag_fixed_points(&one(2, 2), 5, 2).is_err());
    }

    #[test]
    fn small_inventories() {
        let g = gl_enumerate(2, 2).unwrap();
        assert_eq!(g.group_order, 6);
        assert_eq!(g.unipotent.iter().find(|u| u.jordan_type == p("2")).unwrap().class_size, 3);
        // over F_2 the split torus is trivial and has no regular element
        assert_eq!(g.tori, vec![(p("2"), 3)]);
        let g = gl_enumerate(2, 3).unwrap();
        assert_eq!(g.group_order, 48);
        assert_eq!(g.tori, vec![(p("2"), 8), (p("11"), 4)]);
        let g = gl_enumerate(3, 2).unwrap();
        assert_eq!(g.unipotent.len(), 3);
        assert_eq!(g.group_order, 168);
        assert!(gl_enumerate(4, 3).is_err());
    }

    #[test]
    fn irreducibles_over_f2() {
        let irr = monic_irreducibles(3, 2);
        let degs: Vec<usize> = irr.iter().map(|f| f.len() - 1).collect();
        assert_eq!(degs, vec![1, 2, 3, 3]);
    }
}
