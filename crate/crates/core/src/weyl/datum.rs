use std::fmt;
use std::str::FromStr;

use super::WeylError;

/// Supported group types. `A(n)` and `TwistedA(n)` carry the Weyl rank `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TypeLabel {
    A(usize),
    B2,
    G2,
    TwistedA(usize),
}

impl TypeLabel {
    pub const ALL: [TypeLabel; 8] = [
        TypeLabel::A(1),
        TypeLabel::A(2),
        TypeLabel::A(3),
        TypeLabel::A(4),
        TypeLabel::B2,
        TypeLabel::G2,
        TypeLabel::TwistedA(2),
        TypeLabel::TwistedA(3),
    ];

    pub fn rank(self) -> usize {
        match self {
            TypeLabel::A(n) | TypeLabel::TwistedA(n) => n,
            TypeLabel::B2 | TypeLabel::G2 => 2,
        }
    }

    pub fn is_type_a(self) -> bool {
        matches!(self, TypeLabel::A(_) | TypeLabel::TwistedA(_))
    }

    pub fn is_twisted(self) -> bool {
        matches!(self, TypeLabel::TwistedA(_))
    }

    fn check(self) -> Result<Self, WeylError> {
        match self {
            TypeLabel::A(1..=4) | TypeLabel::TwistedA(2..=3) | TypeLabel::B2 | TypeLabel::G2 => Ok(self),
            other => Err(WeylError::Unsupported(other.to_string())),
        }
    }
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TypeLabel::A(n) => write!(f, "A{n}"),
            TypeLabel::B2 => write!(f, "B2"),
            TypeLabel::G2 => write!(f, "G2"),
            TypeLabel::TwistedA(n) => write!(f, "2A{n}"),
        }
    }
}

impl FromStr for TypeLabel {
    type Err = WeylError;

    fn from_str(s: &str) -> Result<Self, WeylError> {
        let t = s.trim();
        let unsupported = || WeylError::Unsupported(t.to_string());
        let label = match t {
            "B2" => TypeLabel::B2,
            "G2" => TypeLabel::G2,
            _ => {
                let (twisted, rest) = match t.strip_prefix("2A") {
                    Some(rest) => (true, rest),
                    None => (false, t.strip_prefix('A').ok_or_else(unsupported)?),
                };
                let n: usize = rest.parse().map_err(|_| unsupported())?;
                if twisted {
                    TypeLabel::TwistedA(n)
                } else {
                    TypeLabel::A(n)
                }
            }
        };
        label.check()
    }
}

/// Which cocharacter lattice carries the torus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LatticeFlavor {
    /// `Z^n` with coordinate permutations (type A only): `GL_n`, or `GU_n` when twisted.
    GeneralLinear,
    /// Coweight lattice of the adjoint group.
    Adjoint,
}

pub type LatticeMatrix = Vec<Vec<i64>>;

/// Root datum data needed downstream: the Weyl group acting on the
/// cocharacter lattice together with the Frobenius twist.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanDatum {
    pub label: TypeLabel,
    pub flavor: LatticeFlavor,
    pub rank: usize,
    pub lattice_rank: usize,
    /// `cartan[i][j] = <α_j, α_i^∨>`.
    pub cartan: Vec<Vec<i64>>,
    /// Simple coroots in lattice coordinates.
    pub simple_coroots: Vec<Vec<i64>>,
    pub reflections: Vec<LatticeMatrix>,
    /// `γ*`, the twist of the Frobenius on the lattice.
    pub twist: LatticeMatrix,
    pub twist_order: u32,
}

fn cartan_matrix(label: TypeLabel) -> Vec<Vec<i64>> {
    match label {
        TypeLabel::A(n) | TypeLabel::TwistedA(n) => (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| match i.abs_diff(j) {
                        0 => 2,
                        1 => -1,
                        _ => 0,
                    })
                    .collect()
            })
            .collect(),
        // generator 0 is the long simple root
        TypeLabel::B2 => vec![vec![2, -1], vec![-2, 2]],
        TypeLabel::G2 => vec![vec![2, -1], vec![-3, 2]],
    }
}

pub fn identity(n: usize) -> LatticeMatrix {
    (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
}

pub fn mat_mul(a: &LatticeMatrix, b: &LatticeMatrix) -> LatticeMatrix {
    let n = a.len();
    let m = b.first().map_or(0, Vec::len);
    (0..n)
        .map(|i| (0..m).map(|j| (0..b.len()).map(|k| a[i][k] * b[k][j]).sum()).collect())
        .collect()
}

pub fn mat_vec(a: &LatticeMatrix, v: &[i64]) -> Vec<i64> {
    a.iter().map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum()).collect()
}

/// Inverse of a unimodular matrix of finite order, by repeated multiplication.
pub fn finite_order_inverse(a: &LatticeMatrix) -> LatticeMatrix {
    let id = identity(a.len());
    let mut prev = id.clone();
    let mut cur = a.clone();
    for _ in 0..64 {
        if cur == id {
            return prev;
        }
        prev = cur.clone();
        cur = mat_mul(&cur, a);
    }
    panic!("lattice map does not have small finite order");
}

impl CartanDatum {
    /// The datum the Green-function pipeline runs on: `GL_n` for `A_{n-1}`,
    /// `GU_n` for `2A_{n-1}`, and the adjoint group for `B2` and `G2`.
    pub fn new(label: TypeLabel) -> Result<Self, WeylError> {
        let label = label.check()?;
        if label.is_type_a() {
            Ok(Self::general_linear(label))
        } else {
            Self::adjoint(label)
        }
    }

    /// Adjoint datum on the coweight lattice. Not available for twisted labels.
    pub fn adjoint(label: TypeLabel) -> Result<Self, WeylError> {
        let label = label.check()?;
        if label.is_twisted() {
            return Err(WeylError::Unsupported(format!("adjoint datum for {label}")));
        }
        let cartan = cartan_matrix(label);
        let r = cartan.len();
        // α_j^∨ = Σ_i <α_i, α_j^∨> ω_i^∨, i.e. row j of the Cartan matrix
        let simple_coroots = cartan.clone();
        // s_i(ω_k^∨) = ω_k^∨ - δ_ik α_i^∨, stored with columns as images
        let reflections = (0..r)
            .map(|i| {
                let mut m = identity(r);
                for (row, &c) in m.iter_mut().zip(&cartan[i]) {
                    row[i] -= c;
                }
                m
            })
            .collect();
        Ok(CartanDatum {
            label,
            flavor: LatticeFlavor::Adjoint,
            rank: r,
            lattice_rank: r,
            cartan,
            simple_coroots,
            reflections,
            twist: identity(r),
            twist_order: 1,
        })
    }

    fn general_linear(label: TypeLabel) -> Self {
        let r = label.rank();
        let n = r + 1;
        let simple_coroots = (0..r)
            .map(|i| (0..n).map(|k| if k == i { 1 } else if k == i + 1 { -1 } else { 0 }).collect())
            .collect();
        let reflections = (0..r)
            .map(|i| {
                let mut m = identity(n);
                m.swap(i, i + 1);
                m
            })
            .collect();
        let (twist, twist_order) = if label.is_twisted() {
            // γ* = -w0
            let t = (0..n).map(|i| (0..n).map(|j| if i + j == n - 1 { -1 } else { 0 }).collect()).collect();
            (t, 2)
        } else {
            (identity(n), 1)
        };
        CartanDatum {
            label,
            flavor: LatticeFlavor::GeneralLinear,
            rank: r,
            lattice_rank: n,
            cartan: cartan_matrix(label),
            simple_coroots,
            reflections,
            twist,
            twist_order,
        }
    }

    /// Checks the structural invariants of the datum.
    pub fn validate(&self) -> Result<(), WeylError> {
        let id = identity(self.lattice_rank);
        let bad = |msg: &str| Err(WeylError::BadDatum(format!("{}: {msg}", self.label)));
        for (i, s) in self.reflections.iter().enumerate() {
            if mat_mul(s, s) != id {
                return bad("simple reflection is not an involution");
            }
            let image = mat_vec(s, &self.simple_coroots[i]);
            if image.iter().zip(&self.simple_coroots[i]).any(|(a, b)| *a != -b) {
                return bad("simple reflection does not negate its coroot");
            }
        }
        let mut t = id.clone();
        for _ in 0..self.twist_order {
            t = mat_mul(&t, &self.twist);
        }
        if t != id {
            return bad("twist order mismatch");
        }
        if self.twist_order == 1 && self.twist != id {
            return bad("untwisted datum with nontrivial twist");
        }
        let tinv = finite_order_inverse(&self.twist);
        for s in &self.reflections {
            let conj = mat_mul(&mat_mul(&self.twist, s), &tinv);
            if !self.reflections.contains(&conj) {
                return bad("twist does not normalize the simple reflections");
            }
        }
        Ok(())
    }

    /// Dimension of the algebraic group, given the number of positive roots.
    pub fn dim_group(&self, positive_roots: usize) -> usize {
        self.lattice_rank + 2 * positive_roots
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_round_trip() {
        for label in TypeLabel::ALL {
            assert_eq!(label.to_string().parse::<TypeLabel>().unwrap(), label);
        }
        assert!("A5".parse::<TypeLabel>().is_err());
        assert!("2A1".parse::<TypeLabel>().is_err());
        assert!("C2".parse::<TypeLabel>().is_err());
    }

    #[test]
    fn data_validate() {
        for label in TypeLabel::ALL {
            CartanDatum::new(label).unwrap().validate().unwrap();
            if !label.is_twisted() {
                CartanDatum::adjoint(label).unwrap().validate().unwrap();
            }
        }
    }

    #[test]
    fn twisted_gl_lattice() {
        let d = CartanDatum::new(TypeLabel::TwistedA(2)).unwrap();
        assert_eq!(d.lattice_rank, 3);
        assert_eq!(d.twist_order, 2);
        assert_eq!(d.twist[0][2], -1);
    }
}
