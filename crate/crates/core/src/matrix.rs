//! Dense matrices and vectors over Q(√2), plus the named special matrices.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::RowSpace;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Vector(Vec<Scalar>);

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VectorKind {
    Ones,
    Zeros,
    Sigma,
}

impl Vector {
    pub fn new(entries: Vec<Scalar>) -> Self {
        Vector(entries)
    }

    pub fn from_ints(xs: &[i64]) -> Self {
        Vector(xs.iter().map(|&x| Scalar::from_int(x)).collect())
    }

    pub fn special(kind: VectorKind, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidDimension(n));
        }
        Ok(match kind {
            VectorKind::Ones => Vector(vec![Scalar::one(); n]),
            VectorKind::Zeros => Vector(vec![Scalar::zero(); n]),
            VectorKind::Sigma => Vector((0..n).map(|j| Scalar::from_int(if j % 2 == 0 { 1 } else { -1 })).collect()),
        })
    }

    /// `1_n`.
    pub fn ones(n: usize) -> Self {
        Vector(vec![Scalar::one(); n])
    }

    pub fn zeros(n: usize) -> Self {
        Vector(vec![Scalar::zero(); n])
    }

    /// The alternating vector with `(-1)^(j-1)` in (1-based) position `j`.
    pub fn sigma(n: usize) -> Self {
        Vector((0..n).map(|j| Scalar::from_int(if j % 2 == 0 { 1 } else { -1 })).collect())
    }

    pub fn unit(n: usize, k: usize) -> Self {
        let mut v = Vector::zeros(n);
        v.0[k] = Scalar::one();
        v
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<Scalar> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Scalar> {
        self.0.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Scalar::is_zero)
    }

    pub fn dot(&self, other: &Vector) -> Scalar {
        assert_eq!(self.len(), other.len(), "vector length mismatch");
        self.0.iter().zip(&other.0).map(|(x, y)| x * y).sum()
    }

    pub fn sum(&self) -> Scalar {
        self.0.iter().sum()
    }

    pub fn scale(&self, c: &Scalar) -> Vector {
        Vector(self.0.iter().map(|x| x * c).collect())
    }

    /// `J v`: entries in reverse order.
    pub fn reversed(&self) -> Vector {
        Vector(self.0.iter().rev().cloned().collect())
    }

    /// Concatenation `(self; other)`.
    pub fn stack(&self, other: &Vector) -> Vector {
        Vector(self.0.iter().chain(&other.0).cloned().collect())
    }
}

impl std::ops::Index<usize> for Vector {
    type Output = Scalar;
    fn index(&self, i: usize) -> &Scalar {
        &self.0[i]
    }
}

impl Add<&Vector> for &Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        assert_eq!(self.len(), rhs.len(), "vector length mismatch");
        Vector(self.0.iter().zip(&rhs.0).map(|(x, y)| x + y).collect())
    }
}

impl Sub<&Vector> for &Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        assert_eq!(self.len(), rhs.len(), "vector length mismatch");
        Vector(self.0.iter().zip(&rhs.0).map(|(x, y)| x - y).collect())
    }
}

impl Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        Vector(self.0.iter().map(|x| -x).collect())
    }
}

impl FromIterator<Scalar> for Vector {
    fn from_iter<I: IntoIterator<Item = Scalar>>(iter: I) -> Self {
        Vector(iter.into_iter().collect())
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum MatrixKind {
    /// All ones.
    E,
    /// Zero matrix.
    O,
    /// Ones on the antidiagonal.
    J,
    /// Identity.
    I,
    /// The orthogonal symmetric involution used for block representations.
    X,
}

/// Row-major dense matrix. Most of the crate works with square matrices;
/// rectangular shapes appear as sub-blocks and construction parameters.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(Matrix { rows, cols, entries })
    }

    /// Square matrix from `n²` row-major entries.
    pub fn square(n: usize, entries: Vec<Scalar>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidDimension(n));
        }
        Matrix::new(n, n, entries)
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix { rows, cols, entries }
    }

    /// Panics on ragged input; meant for literals.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix::from_fn(r, c, |i, j| Scalar::from_int(rows[i][j]))
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Matrix::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, entries: vec![Scalar::zero(); rows * cols] }
    }

    pub fn zero(n: usize) -> Self {
        Matrix::zeros(n, n)
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { Scalar::one() } else { Scalar::zero() })
    }

    /// `E_n`, the all-ones matrix (also used rectangular).
    pub fn ones(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, entries: vec![Scalar::one(); rows * cols] }
    }

    /// `J_n`, ones on the antidiagonal.
    pub fn exchange(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i + j + 1 == n { Scalar::one() } else { Scalar::zero() })
    }

    /// `X_n`: `(1/√2)[[I, J], [J, −I]]` for `n = 2ν`, with an extra unit
    /// centre row and column for `n = 2ν + 1`.
    pub fn involution(n: usize) -> Self {
        let nu = n / 2;
        let odd = n % 2 == 1;
        let h = Scalar::frac_1_sqrt2();
        let off = if odd { nu + 1 } else { nu };
        Matrix::from_fn(n, n, |i, j| {
            if odd && (i == nu || j == nu) {
                return if i == j { Scalar::one() } else { Scalar::zero() };
            }
            let top = i < nu;
            let left = j < nu;
            let (bi, bj) = (if top { i } else { i - off }, if left { j } else { j - off });
            match (top, left) {
                (true, true) if bi == bj => h.clone(),
                (false, false) if bi == bj => -&h,
                (true, false) | (false, true) if bi + bj + 1 == nu => h.clone(),
                _ => Scalar::zero(),
            }
        })
    }

    pub fn special(kind: MatrixKind, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidDimension(n));
        }
        Ok(match kind {
            MatrixKind::E => Matrix::ones(n, n),
            MatrixKind::O => Matrix::zero(n),
            MatrixKind::J => Matrix::exchange(n),
            MatrixKind::I => Matrix::identity(n),
            MatrixKind::X => Matrix::involution(n),
        })
    }

    /// `n×1` matrix.
    pub fn column(v: &Vector) -> Self {
        Matrix { rows: v.len(), cols: 1, entries: v.entries().to_vec() }
    }

    /// `1×n` matrix.
    pub fn row(v: &Vector) -> Self {
        Matrix { rows: 1, cols: v.len(), entries: v.entries().to_vec() }
    }

    pub fn scalar(x: Scalar) -> Self {
        Matrix { rows: 1, cols: 1, entries: vec![x] }
    }

    /// `u vᵀ`.
    pub fn outer(u: &Vector, v: &Vector) -> Self {
        Matrix::from_fn(u.len(), v.len(), |i, j| &u[i] * &v[j])
    }

    /// Assembles a block matrix; blocks in a grid row share their row count,
    /// blocks in a grid column share their column count.
    pub fn from_blocks(grid: &[Vec<Matrix>]) -> Result<Self> {
        let Some(first_row) = grid.first() else {
            return Ok(Matrix::zeros(0, 0));
        };
        let col_widths: Vec<usize> = first_row.iter().map(|b| b.cols).collect();
        let total_cols: usize = col_widths.iter().sum();
        let mut entries = Vec::new();
        let mut total_rows = 0;
        for (gi, grid_row) in grid.iter().enumerate() {
            if grid_row.len() != col_widths.len() {
                return Err(Error::DimensionMismatch(format!("block row {gi} has {} blocks", grid_row.len())));
            }
            let height = grid_row[0].rows;
            for (gj, block) in grid_row.iter().enumerate() {
                if block.rows != height || block.cols != col_widths[gj] {
                    return Err(Error::DimensionMismatch(format!(
                        "block ({gi},{gj}) is {}x{}, expected {height}x{}",
                        block.rows, block.cols, col_widths[gj]
                    )));
                }
            }
            for i in 0..height {
                for block in grid_row {
                    entries.extend_from_slice(&block.entries[i * block.cols..(i + 1) * block.cols]);
                }
            }
            total_rows += height;
        }
        Matrix::new(total_rows, total_cols, entries)
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

    /// Dimension of a square matrix.
    pub fn n(&self) -> usize {
        debug_assert!(self.is_square());
        self.rows
    }

    pub fn require_square(&self) -> Result<usize> {
        if self.is_square() && self.rows > 0 {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare { rows: self.rows, cols: self.cols })
        }
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<Scalar> {
        self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    /// Entry at cyclic indices `(i mod n, j mod n)`, 0-based.
    pub fn get_cyclic(&self, i: usize, j: usize) -> &Scalar {
        self.get(i % self.rows, j % self.cols)
    }

    pub fn set(&mut self, i: usize, j: usize, value: Scalar) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row_vector(&self, i: usize) -> Vector {
        Vector::new(self.entries[i * self.cols..(i + 1) * self.cols].to_vec())
    }

    pub fn col_vector(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn submatrix(&self, row0: usize, col0: usize, rows: usize, cols: usize) -> Matrix {
        assert!(row0 + rows <= self.rows && col0 + cols <= self.cols, "submatrix out of range");
        Matrix::from_fn(rows, cols, |i, j| self.get(row0 + i, col0 + j).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.entries.iter().all(Scalar::is_rational)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(|x| x * c).collect() }
    }

    pub fn try_add(&self, rhs: &Matrix) -> Result<Matrix> {
        self.check_same_shape(rhs, "add")?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&rhs.entries).map(|(x, y)| x + y).collect(),
        })
    }

    pub fn try_sub(&self, rhs: &Matrix) -> Result<Matrix> {
        self.check_same_shape(rhs, "sub")?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&rhs.entries).map(|(x, y)| x - y).collect(),
        })
    }

    pub fn try_mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &Vector) -> Vector {
        assert_eq!(self.cols, v.len(), "matrix-vector dimension mismatch");
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * &v[j]).sum())
            .collect()
    }

    /// `uᵀ M v`.
    pub fn bilinear(&self, u: &Vector, v: &Vector) -> Scalar {
        u.dot(&self.mul_vec(v))
    }

    pub fn sum(&self) -> Scalar {
        self.entries.iter().sum()
    }

    /// Row-major flattening, the coordinate order used by constraint systems.
    pub fn vectorize(&self) -> Vec<Scalar> {
        self.entries.clone()
    }

    pub fn rank(&self) -> usize {
        RowSpace::from_rows(self.cols, (0..self.rows).map(|i| self.row_vector(i).into_entries())).rank()
    }

    pub fn nullspace_dim(&self) -> usize {
        self.cols - self.rank()
    }

    fn check_same_shape(&self, rhs: &Matrix, op: &str) -> Result<()> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::DimensionMismatch(format!(
                "cannot {op} {}x{} and {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(())
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).pretty()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Aligned, human-readable rendering.
impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(Scalar::pretty).collect();
        let width = cells.iter().map(|c| c.chars().count()).max().unwrap_or(0);
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| format!("{:>width$}", cells[i * self.cols + j]))
                .collect();
            writeln!(f, "{}", row.join("  "))?;
        }
        Ok(())
    }
}

// Operator forms panic on shape mismatch; the `try_*` methods report it instead.
impl Add<&Matrix> for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        self.try_add(rhs).unwrap()
    }
}

impl Sub<&Matrix> for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        self.try_sub(rhs).unwrap()
    }
}

impl Mul<&Matrix> for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.try_mul(rhs).unwrap()
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        self.scale(&Scalar::from_int(-1))
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait<Matrix> for Matrix {
            type Output = Matrix;
            fn $method(self, rhs: Matrix) -> Matrix {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Matrix> for Matrix {
            type Output = Matrix;
            fn $method(self, rhs: &Matrix) -> Matrix {
                (&self).$method(rhs)
            }
        }
        impl $trait<Matrix> for &Matrix {
            type Output = Matrix;
            fn $method(self, rhs: Matrix) -> Matrix {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(rows: &[&[i64]]) -> Matrix {
        Matrix::from_int_rows(rows)
    }

    #[test]
    fn x2_is_the_scaled_hadamard() {
        let h = Scalar::frac_1_sqrt2();
        let want = Matrix::new(2, 2, vec![h.clone(), h.clone(), h.clone(), -&h]).unwrap();
        assert_eq!(Matrix::special(MatrixKind::X, 2).unwrap(), want);
    }

    #[test]
    fn x_is_symmetric_involution() {
        for n in 1..=9 {
            let x = Matrix::involution(n);
            assert_eq!(x.transpose(), x, "n={n}");
            assert_eq!(&x * &x, Matrix::identity(n), "n={n}");
        }
        assert_eq!(Matrix::involution(1), Matrix::identity(1));
    }

    #[test]
    fn special_matrices() {
        assert_eq!(Matrix::special(MatrixKind::E, 2).unwrap(), ints(&[&[1, 1], &[1, 1]]));
        assert_eq!(Matrix::special(MatrixKind::J, 3).unwrap(), ints(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]]));
        assert_eq!(Matrix::special(MatrixKind::O, 2).unwrap(), Matrix::zero(2));
        assert_eq!(Matrix::special(MatrixKind::I, 0), Err(Error::InvalidDimension(0)));
    }

    #[test]
    fn special_vectors() {
        assert_eq!(Vector::special(VectorKind::Sigma, 4).unwrap(), Vector::from_ints(&[1, -1, 1, -1]));
        assert_eq!(Vector::special(VectorKind::Sigma, 3).unwrap(), Vector::from_ints(&[1, -1, 1]));
        assert_eq!(Vector::special(VectorKind::Ones, 2).unwrap(), Vector::from_ints(&[1, 1]));
        assert!(Vector::special(VectorKind::Zeros, 0).is_err());
        assert!(Vector::sigma(4).dot(&Vector::ones(4)).is_zero());
        assert!(!Vector::sigma(5).dot(&Vector::ones(5)).is_zero());
    }

    #[test]
    fn products() {
        let j = Matrix::exchange(3);
        assert_eq!(&j * &j, Matrix::identity(3));
        let e = Matrix::ones(2, 2);
        assert_eq!(&e * &e, e.scale(&Scalar::from_int(2)));
        let x = Matrix::involution(2);
        assert_eq!(&x * &x, Matrix::identity(2));
    }

    #[test]
    fn shape_errors() {
        let a = Matrix::zeros(2, 3);
        let b = Matrix::zeros(2, 3);
        assert!(matches!(a.try_mul(&b), Err(Error::DimensionMismatch(_))));
        assert!(matches!(a.try_add(&Matrix::zero(2)), Err(Error::DimensionMismatch(_))));
        assert!(Matrix::new(2, 2, vec![Scalar::one()]).is_err());
        assert!(Matrix::zeros(2, 3).require_square().is_err());
    }

    #[test]
    fn ranks() {
        assert_eq!(Matrix::ones(4, 4).rank(), 1);
        assert_eq!(Matrix::identity(3).rank(), 3);
        assert_eq!(Matrix::identity(3).nullspace_dim(), 0);
        // γΣᵀ + Σδᵀ with γ = (1,0,−1,0), δ = (0,1,0,−1); by hand r2 = −r0 − 2r1, r3 = r1.
        let m = ints(&[&[1, 0, 1, -2], &[0, -1, 0, 1], &[-1, 2, -1, 0], &[0, -1, 0, 1]]);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn blocks_round_trip() {
        let m = Matrix::from_fn(5, 5, |i, j| Scalar::from_int((i * 5 + j) as i64));
        let grid = vec![
            vec![m.submatrix(0, 0, 2, 3), m.submatrix(0, 3, 2, 2)],
            vec![m.submatrix(2, 0, 3, 3), m.submatrix(2, 3, 3, 2)],
        ];
        assert_eq!(Matrix::from_blocks(&grid).unwrap(), m);
        let bad = vec![vec![Matrix::zeros(2, 2), Matrix::zeros(3, 2)]];
        assert!(Matrix::from_blocks(&bad).is_err());
    }
}
