use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Range, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{AlgebraError, IntPoly};

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type RatMatrix = Matrix<BigRational>;
pub type IntMatrix = Matrix<BigInt>;
pub type PolyMatrix = Matrix<IntPoly>;

impl<T: Clone> Matrix<T> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, AlgebraError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(AlgebraError::Ragged);
        }
        Ok(Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &T)> {
        self.data.iter().enumerate().map(move |(k, v)| (k / self.cols, k % self.cols, v))
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn block(&self, rows: Range<usize>, cols: Range<usize>) -> Result<Self, AlgebraError> {
        if rows.end > self.rows || cols.end > self.cols || rows.start > rows.end || cols.start > cols.end {
            return Err(AlgebraError::Shape {
                op: "block",
                left: (self.rows, self.cols),
                right: (rows.end, cols.end),
            });
        }
        Ok(Matrix::from_fn(rows.len(), cols.len(), |i, j| {
            self[(rows.start + i, cols.start + j)].clone()
        }))
    }

    pub fn set_block(&mut self, row0: usize, col0: usize, b: &Matrix<T>) {
        for i in 0..b.rows {
            for j in 0..b.cols {
                self[(row0 + i, col0 + j)] = b[(i, j)].clone();
            }
        }
    }

    /// Reorder rows and columns simultaneously: `out[i][j] = self[perm[i]][perm[j]]`.
    pub fn permute_symmetric(&self, perm: &[usize]) -> Self {
        Matrix::from_fn(perm.len(), perm.len(), |i, j| self[(perm[i], perm[j])].clone())
    }

    pub fn map<U: Clone>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }
}

impl<T: Clone + Zero> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |_, _| T::zero())
    }
}

impl<T: Clone + Zero + One> Matrix<T> {
    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }
}

impl<T: Clone + PartialEq> Matrix<T> {
    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }
}

impl<T> Matrix<T>
where
    T: Clone + Zero,
    for<'a> &'a T: Mul<&'a T, Output = T>,
{
    pub fn try_mul(&self, rhs: &Matrix<T>) -> Result<Matrix<T>, AlgebraError> {
        if self.cols != rhs.rows {
            return Err(AlgebraError::Shape {
                op: "multiply",
                left: (self.rows, self.cols),
                right: (rhs.rows, rhs.cols),
            });
        }
        Ok(Matrix::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = T::zero();
            for k in 0..self.cols {
                acc = acc + &self[(i, k)] * &rhs[(k, j)];
            }
            acc
        }))
    }
}

impl<T> Matrix<T>
where
    T: Clone,
    for<'a> &'a T: Add<&'a T, Output = T> + Sub<&'a T, Output = T>,
{
    pub fn try_add(&self, rhs: &Matrix<T>) -> Result<Matrix<T>, AlgebraError> {
        self.zip(rhs, "add", |a, b| a + b)
    }

    pub fn try_sub(&self, rhs: &Matrix<T>) -> Result<Matrix<T>, AlgebraError> {
        self.zip(rhs, "subtract", |a, b| a - b)
    }

    fn zip(
        &self,
        rhs: &Matrix<T>,
        op: &'static str,
        f: impl Fn(&T, &T) -> T,
    ) -> Result<Matrix<T>, AlgebraError> {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(AlgebraError::Shape {
                op,
                left: (self.rows, self.cols),
                right: (rhs.rows, rhs.cols),
            });
        }
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| f(a, b)).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        &mut self.data[i * self.cols + j]
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(0);
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{:>width$}", cells[i * self.cols + j])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

impl IntMatrix {
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let rows = rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
        Matrix::from_rows(rows).expect("rectangular literal")
    }

    /// Least non-negative residues mod `r`.
    pub fn reduce_mod(&self, r: &BigInt) -> Result<IntMatrix, AlgebraError> {
        if r < &BigInt::from(2) {
            return Err(AlgebraError::Modulus);
        }
        Ok(self.map(|v| v.mod_floor(r)))
    }

    pub fn to_rat(&self) -> RatMatrix {
        self.map(|v| BigRational::from_integer(v.clone()))
    }
}

impl RatMatrix {
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        IntMatrix::from_i64_rows(rows).to_rat()
    }

    pub fn is_integral(&self) -> bool {
        self.data.iter().all(|v| v.is_integer())
    }

    pub fn to_int(&self) -> Option<IntMatrix> {
        self.is_integral().then(|| self.map(|v| v.to_integer()))
    }

    pub fn scale(&self, c: &BigRational) -> RatMatrix {
        self.map(|v| v * c)
    }

    /// Determinant by Gaussian elimination with exact rational pivots.
    pub fn det(&self) -> Result<BigRational, AlgebraError> {
        if !self.is_square() {
            return Err(AlgebraError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut det = BigRational::one();
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| !a[(r, col)].is_zero()) else {
                return Ok(BigRational::zero());
            };
            if piv != col {
                a.swap_rows(piv, col);
                det = -det;
            }
            let p = a[(col, col)].clone();
            det *= &p;
            for r in col + 1..n {
                if a[(r, col)].is_zero() {
                    continue;
                }
                let factor = &a[(r, col)] / &p;
                for c in col..n {
                    let delta = &factor * &a[(col, c)];
                    a[(r, c)] -= delta;
                }
            }
        }
        Ok(det)
    }

    /// Inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<RatMatrix, AlgebraError> {
        if !self.is_square() {
            return Err(AlgebraError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = RatMatrix::identity(n);
        for col in 0..n {
            let piv = (col..n).find(|&r| !a[(r, col)].is_zero()).ok_or(AlgebraError::Singular)?;
            a.swap_rows(piv, col);
            inv.swap_rows(piv, col);
            let p = a[(col, col)].recip();
            for c in 0..n {
                a[(col, c)] *= &p;
                inv[(col, c)] *= &p;
            }
            for r in 0..n {
                if r == col || a[(r, col)].is_zero() {
                    continue;
                }
                let factor = a[(r, col)].clone();
                for c in 0..n {
                    let da = &factor * &a[(col, c)];
                    let di = &factor * &inv[(col, c)];
                    a[(r, c)] -= da;
                    inv[(r, c)] -= di;
                }
            }
        }
        Ok(inv)
    }

    /// Rank by row reduction.
    pub fn rank(&self) -> usize {
        let mut a = self.clone();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(piv) = (rank..self.rows).find(|&r| !a[(r, col)].is_zero()) else {
                continue;
            };
            a.swap_rows(piv, rank);
            for r in rank + 1..self.rows {
                if a[(r, col)].is_zero() {
                    continue;
                }
                let factor = &a[(r, col)] / &a[(rank, col)];
                for c in col..self.cols {
                    let delta = &factor * &a[(rank, c)];
                    a[(r, c)] -= delta;
                }
            }
            rank += 1;
        }
        rank
    }

    /// Sylvester's criterion on a symmetric matrix: all leading principal
    /// minors positive.
    pub fn is_positive_definite(&self) -> bool {
        if !self.is_symmetric() {
            return false;
        }
        (1..=self.rows).all(|k| {
            self.block(0..k, 0..k)
                .and_then(|b| b.det())
                .is_ok_and(|d| d.is_positive())
        })
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

impl PolyMatrix {
    /// Determinant by cofactor expansion along the first row. Intended for the
    /// small lattice ranks used here.
    pub fn det_by_minors(&self) -> Result<IntPoly, AlgebraError> {
        if !self.is_square() {
            return Err(AlgebraError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let idx: Vec<usize> = (0..self.rows).collect();
        Ok(self.minor(&idx, 0))
    }

    fn minor(&self, cols: &[usize], row: usize) -> IntPoly {
        if cols.is_empty() {
            return IntPoly::one();
        }
        let mut acc = IntPoly::zero();
        for (k, &c) in cols.iter().enumerate() {
            let entry = &self[(row, c)];
            if entry.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = entry * &self.minor(&rest, row + 1);
            acc = if k % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(RatMatrix::identity(3).det().unwrap(), rat(1));
        assert_eq!(RatMatrix::from_int_rows(&[&[4, 2], &[2, 4]]).det().unwrap(), rat(12));
        assert_eq!(RatMatrix::from_int_rows(&[&[1, 1], &[1, 1]]).det().unwrap(), rat(0));
        assert!(RatMatrix::zeros(2, 3).det().is_err());
    }

    #[test]
    fn determinant_needs_row_swap() {
        let m = RatMatrix::from_int_rows(&[&[0, 1], &[1, 0]]);
        assert_eq!(m.det().unwrap(), rat(-1));
    }

    #[test]
    fn congruence_product() {
        let p = IntMatrix::from_i64_rows(&[&[1, 1], &[0, 1]]);
        let d = IntMatrix::from_i64_rows(&[&[1, 0], &[0, 3]]);
        let out = p.transpose().try_mul(&d).unwrap().try_mul(&p).unwrap();
        assert_eq!(out, IntMatrix::from_i64_rows(&[&[1, 1], &[1, 4]]));
    }

    #[test]
    fn shape_errors() {
        let a = IntMatrix::zeros(2, 3);
        assert!(a.try_mul(&a).is_err());
        assert_eq!(a.transpose().rows(), 3);
        assert!(a.try_add(&a.transpose()).is_err());
    }

    #[test]
    fn reduction() {
        let m = IntMatrix::from_i64_rows(&[&[33, -1]]);
        assert_eq!(m.reduce_mod(&5.into()).unwrap(), IntMatrix::from_i64_rows(&[&[3, 4]]));
        assert!(m.reduce_mod(&1.into()).is_err());
    }

    #[test]
    fn inverse_round_trip() {
        let m = RatMatrix::from_int_rows(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        let prod = m.try_mul(&m.inverse().unwrap()).unwrap();
        assert_eq!(prod, RatMatrix::identity(3));
        assert!(RatMatrix::from_int_rows(&[&[1, 2], &[2, 4]]).inverse().is_err());
    }

    #[test]
    fn definiteness_and_rank() {
        assert!(RatMatrix::from_int_rows(&[&[2, 1], &[1, 2]]).is_positive_definite());
        assert!(!RatMatrix::from_int_rows(&[&[1, 2], &[2, 1]]).is_positive_definite());
        assert_eq!(RatMatrix::from_int_rows(&[&[1, 2], &[2, 4]]).rank(), 1);
    }

    #[test]
    fn polynomial_determinant() {
        // det(q I - [[0,1],[1,0]]) = q^2 - 1
        let q = IntPoly::q();
        let m = PolyMatrix::from_rows(vec![
            vec![q.clone(), IntPoly::constant(-1)],
            vec![IntPoly::constant(-1), q],
        ])
        .unwrap();
        assert_eq!(m.det_by_minors().unwrap(), IntPoly::from_i64s(&[-1, 0, 1]));
    }
}
