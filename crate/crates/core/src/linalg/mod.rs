//! Exact dense matrices over arbitrary-precision integers and rationals.
//!
//! Everything in this module is exact: there is no floating point anywhere.
//! Hot enumeration loops use the checked `i128` kernels in [`small`] and fall
//! back to the big-integer routines when an intermediate value overflows.

mod charpoly;
mod det;
mod lattice;
pub mod small;
mod snf;

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub use charpoly::{char_poly, char_poly_rat, pseudodeterminant, pseudodeterminant_rat, CharPoly};
pub use det::{det_exact, det_rat, rank_exact, rank_rat, solve_rat};
pub use lattice::{
    covolume_squared, hermite_basis, kernel_basis, lattice_coordinates, lattice_quotient_order,
    saturation,
    QuotientOrder,
};
pub use snf::{invariant_factors, smith_normal_form, torsion_of, SnfResult};

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type IntMatrix = Matrix<BigInt>;
pub type RatMatrix = Matrix<BigRational>;

impl<T: Clone + Zero + One> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = T::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn diagonal(entries: &[T]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, e) in entries.iter().enumerate() {
            m.data[i * n + i] = e.clone();
        }
        m
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

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn into_entries(self) -> Vec<T> {
        self.data
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Submatrix on the given row and column index lists, in the order given.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| {
            self.get(rows[i], cols[j]).clone()
        })
    }

    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let rows: Vec<usize> = (0..self.rows).collect();
        self.submatrix(&rows, cols)
    }

    pub fn select_rows(&self, rows: &[usize]) -> Self {
        let cols: Vec<usize> = (0..self.cols).collect();
        self.submatrix(rows, &cols)
    }

    pub fn from_columns(rows: usize, columns: &[Vec<T>]) -> Self {
        Self::from_fn(rows, columns.len(), |i, j| columns[j][i].clone())
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hcat(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows {
            return Err(Error::Shape(format!(
                "cannot concatenate {} rows with {} rows",
                self.rows, other.rows
            )));
        }
        Ok(Self::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        }))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_symmetric(&self) -> bool
    where
        T: PartialEq,
    {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self>
    where
        T: Add<Output = T> + Mul<Output = T>,
    {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * other.cols + j;
                    out.data[idx] = out.data[idx].clone() + a.clone() * b.clone();
                }
            }
        }
        Ok(out)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self>
    where
        T: Add<Output = T>,
    {
        self.zip_with(other, |a, b| a.clone() + b.clone())
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self>
    where
        T: Sub<Output = T>,
    {
        self.zip_with(other, |a, b| a.clone() - b.clone())
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&T, &T) -> T) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Shape(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    /// Multiply every column `j` by `scale[j]`.
    pub fn scale_columns(&self, scale: &[T]) -> Self
    where
        T: Mul<Output = T>,
    {
        Self::from_fn(self.rows, self.cols, |i, j| {
            self.get(i, j).clone() * scale[j].clone()
        })
    }

    /// Multiply every row `i` by `scale[i]`.
    pub fn scale_rows(&self, scale: &[T]) -> Self
    where
        T: Mul<Output = T>,
    {
        Self::from_fn(self.rows, self.cols, |i, j| {
            self.get(i, j).clone() * scale[i].clone()
        })
    }
}

impl<T: Clone + Mul<Output = T>> Mul for &Matrix<T>
where
    T: Zero + One + Add<Output = T>,
{
    type Output = Matrix<T>;

    fn mul(self, rhs: Self) -> Matrix<T> {
        self.checked_mul(rhs).expect("matrix shapes must agree")
    }
}

impl IntMatrix {
    pub fn from_i64_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.as_ref().len());
        assert!(
            rows.iter().all(|row| row.as_ref().len() == c),
            "ragged rows"
        );
        Self::from_fn(r, c, |i, j| BigInt::from(rows[i].as_ref()[j]))
    }

    /// Entries as `i64` if every entry fits.
    pub fn to_i64(&self) -> Option<Vec<i64>> {
        self.data.iter().map(ToPrimitive::to_i64).collect()
    }

    pub fn to_rat(&self) -> RatMatrix {
        self.map(|x| BigRational::from_integer(x.clone()))
    }

    /// `self · selfᵀ`
    pub fn gram_rows(&self) -> IntMatrix {
        self.checked_mul(&self.transpose()).expect("shapes agree")
    }

    /// `selfᵀ · self`
    pub fn gram_columns(&self) -> IntMatrix {
        self.transpose().checked_mul(self).expect("shapes agree")
    }
}

impl RatMatrix {
    /// Integer matrix if every entry is integral.
    pub fn to_int(&self) -> Option<IntMatrix> {
        self.data
            .iter()
            .map(|x| x.is_integer().then(|| x.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(|data| Matrix {
                rows: self.rows,
                cols: self.cols,
                data,
            })
    }

    /// Multiply each row by the lcm of its denominators. Returns the integer
    /// matrix and the row multipliers.
    pub(crate) fn clear_row_denominators(&self) -> (IntMatrix, Vec<BigInt>) {
        let mut scales = Vec::with_capacity(self.rows);
        let mut data = Vec::with_capacity(self.data.len());
        for i in 0..self.rows {
            let row = self.row(i);
            let l = row
                .iter()
                .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            for x in row {
                data.push(x.numer() * (&l / x.denom()));
            }
            scales.push(l);
        }
        (
            Matrix {
                rows: self.rows,
                cols: self.cols,
                data,
            },
            scales,
        )
    }
}

fn fmt_matrix<T: fmt::Display>(m: &Matrix<T>, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    write!(f, "[")?;
    for i in 0..m.rows {
        if i > 0 {
            write!(f, ", ")?;
        }
        write!(f, "[")?;
        for j in 0..m.cols {
            if j > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", m.data[i * m.cols + j])?;
        }
        write!(f, "]")?;
    }
    write!(f, "]")
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_matrix(self, f)
    }
}

impl<T: fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{} ", self.rows, self.cols)?;
        fmt_matrix(self, f)
    }
}

/// Exact binomial coefficient for nonnegative arguments.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Binomial coefficient extended to negative upper index.
///
/// For `n >= 0` this is the ordinary coefficient (zero when `k < 0` or `k > n`).
/// For `n < 0` it follows the symmetric extension
/// `C(n, k) = (-1)^k C(k - n - 1, k)` for `k >= 0`,
/// `C(n, k) = (-1)^(n - k) C(-k - 1, n - k)` for `k <= n`, and zero otherwise,
/// so in particular `C(-1, 0) = C(-1, -1) = 1`.
pub fn binomial_ext(n: i64, k: i64) -> BigInt {
    if n >= 0 {
        if k < 0 || k > n {
            return BigInt::zero();
        }
        return binomial(n as u64, k as u64);
    }
    if k >= 0 {
        let b = binomial((k - n - 1) as u64, k as u64);
        return if k % 2 == 0 { b } else { -b };
    }
    if k <= n {
        let b = binomial((-k - 1) as u64, (n - k) as u64);
        return if (n - k) % 2 == 0 { b } else { -b };
    }
    BigInt::zero()
}

/// Raise a rational to an integer power (negative powers invert).
pub fn rat_pow(base: &BigRational, exp: &BigInt) -> BigRational {
    let e = exp
        .abs()
        .to_u64()
        .expect("exponent must fit in u64 for exact evaluation");
    let mut acc = BigRational::one();
    let mut b = base.clone();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &b;
        }
        b = &b * &b;
        e >>= 1;
    }
    if exp.is_negative() {
        acc.recip()
    } else {
        acc
    }
}

/// Integer power with a nonnegative exponent.
pub fn int_pow(base: &BigInt, exp: &BigInt) -> BigInt {
    assert!(!exp.is_negative(), "negative exponent {exp}");
    let e = exp.to_u32().expect("exponent must fit in u32");
    num_traits::pow::Pow::pow(base, e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shape_errors() {
        assert!(IntMatrix::new(2, 2, vec![BigInt::one(); 3]).is_err());
        let a = IntMatrix::from_i64_rows(&[[1, 2]]);
        let b = IntMatrix::from_i64_rows(&[[1, 2]]);
        assert!(a.checked_mul(&b).is_err());
        assert!(a.hcat(&IntMatrix::zeros(2, 1)).is_err());
    }

    #[test]
    fn multiply_and_transpose() {
        let a = IntMatrix::from_i64_rows(&[[1, 2, 3], [4, 5, 6]]);
        let g = a.gram_rows();
        assert_eq!(g, IntMatrix::from_i64_rows(&[[14, 32], [32, 77]]));
        assert_eq!(a.transpose().transpose(), a);
        assert_eq!(a.gram_columns().rows(), 3);
    }

    #[test]
    fn extended_binomials() {
        assert_eq!(binomial(6, 3), BigInt::from(20));
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(binomial_ext(-1, 0), BigInt::one());
        assert_eq!(binomial_ext(-1, -1), BigInt::one());
        assert_eq!(binomial_ext(0, -1), BigInt::zero());
        assert_eq!(binomial_ext(-2, 1), BigInt::from(-2));
        assert_eq!(binomial_ext(-1, 3), BigInt::from(-1));
    }

    #[test]
    fn rational_powers() {
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(
            rat_pow(&half, &BigInt::from(-3)),
            BigRational::from_integer(8.into())
        );
        assert_eq!(rat_pow(&half, &BigInt::zero()), BigRational::one());
    }
}
