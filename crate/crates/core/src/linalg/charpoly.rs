use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{IntMatrix, Matrix, RatMatrix};
use crate::error::{Error, Result};

/// Monic characteristic polynomial `det(z·Id − M)`.
///
/// `coefficients[i]` is the coefficient of `z^i`; the last entry is 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CharPoly<T> {
    pub coefficients: Vec<T>,
}

impl<T> CharPoly<T>
where
    T: Clone + Zero + One + PartialEq + Neg<Output = T> + Sub<Output = T> + Mul<Output = T>,
{
    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficient(&self, power: usize) -> T {
        self.coefficients.get(power).cloned().unwrap_or_else(T::zero)
    }

    /// Multiplicity of the root 0.
    pub fn zero_multiplicity(&self) -> usize {
        self.coefficients
            .iter()
            .position(|c| !c.is_zero())
            .expect("monic polynomial has a nonzero coefficient")
    }

    /// The polynomial divided by `z^m`, where `m` is the multiplicity of 0.
    pub fn strip_zero_roots(&self) -> Self {
        Self {
            coefficients: self.coefficients[self.zero_multiplicity()..].to_vec(),
        }
    }

    /// `Π (z − root)^mult`.
    pub fn from_roots(roots: &[(T, usize)]) -> Self {
        let mut poly = Self {
            coefficients: vec![T::one()],
        };
        for (root, mult) in roots {
            for _ in 0..*mult {
                poly = poly.mul_linear(root);
            }
        }
        poly
    }

    fn mul_linear(&self, root: &T) -> Self {
        let n = self.coefficients.len();
        let mut out = vec![T::zero(); n + 1];
        for (i, c) in self.coefficients.iter().enumerate() {
            out[i + 1] = out[i + 1].clone() + c.clone();
            out[i] = out[i].clone() - root.clone() * c.clone();
        }
        Self { coefficients: out }
    }

    pub fn evaluate(&self, z: &T) -> T {
        self.coefficients
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * z.clone() + c.clone())
    }

    /// `det(z·Id + M)`, i.e. the coefficients with alternating signs fixed so
    /// that the result is the characteristic polynomial of `−M`.
    pub fn reflect(&self) -> Self {
        let n = self.degree();
        Self {
            coefficients: self
                .coefficients
                .iter()
                .enumerate()
                .map(|(i, c)| if (n - i).is_multiple_of(2) { c.clone() } else { -c.clone() })
                .collect(),
        }
    }
}

impl<T: Clone + Signed> CharPoly<T> {
    /// Product of the nonzero eigenvalues of a positive semidefinite matrix:
    /// the absolute value of the lowest nonzero coefficient. The zero matrix
    /// gives 1.
    pub fn pseudodeterminant(&self) -> T {
        self.coefficients
            .iter()
            .find(|c| !c.is_zero())
            .expect("monic polynomial has a nonzero coefficient")
            .abs()
    }
}

impl CharPoly<BigInt> {
    /// Roots with multiplicities when the polynomial splits over the integers
    /// into nonnegative roots, as for an integral positive semidefinite
    /// matrix; `None` otherwise. Roots are ascending.
    pub fn nonnegative_integer_roots(&self) -> Option<Vec<(BigInt, usize)>> {
        let n = self.degree();
        let bound = if n == 0 {
            BigInt::zero()
        } else {
            self.coefficients[n - 1].abs()
        };
        let mut rest = self.coefficients.clone();
        let mut roots = Vec::new();
        let mut r = BigInt::zero();
        while rest.len() > 1 && r <= bound {
            let mut mult = 0;
            while rest.len() > 1 {
                match divide_linear(&rest, &r) {
                    Some(q) => {
                        rest = q;
                        mult += 1;
                    }
                    None => break,
                }
            }
            if mult > 0 {
                roots.push((r.clone(), mult));
            }
            r += 1;
        }
        (rest.len() == 1).then_some(roots)
    }
}

/// Quotient of an ascending coefficient list by `z − r`, if exact.
fn divide_linear(coeffs: &[BigInt], r: &BigInt) -> Option<Vec<BigInt>> {
    let n = coeffs.len() - 1;
    let mut q = vec![BigInt::zero(); n];
    let mut carry = BigInt::zero();
    for i in (0..=n).rev() {
        let c = &coeffs[i] + &carry;
        if i == 0 {
            return c.is_zero().then_some(q);
        }
        carry = &c * r;
        q[i - 1] = c;
    }
    unreachable!()
}

/// Division-free characteristic polynomial (Berkowitz).
fn berkowitz<T>(m: &Matrix<T>) -> Vec<T>
where
    T: Clone + Zero + One + Neg<Output = T> + Add<Output = T> + Mul<Output = T>,
{
    let n = m.rows();
    // descending coefficients of the leading r x r block
    let mut poly = vec![T::one()];
    for r in 0..n {
        let mut toeplitz = Vec::with_capacity(r + 2);
        toeplitz.push(T::one());
        toeplitz.push(-m.get(r, r).clone());
        let mut v: Vec<T> = (0..r).map(|i| m.get(i, r).clone()).collect();
        for step in 0..r {
            let s = (0..r).fold(T::zero(), |acc, j| acc + m.get(r, j).clone() * v[j].clone());
            toeplitz.push(-s);
            if step + 1 < r {
                v = (0..r)
                    .map(|i| {
                        (0..r).fold(T::zero(), |acc, j| {
                            acc + m.get(i, j).clone() * v[j].clone()
                        })
                    })
                    .collect();
            }
        }
        let next: Vec<T> = (0..r + 2)
            .map(|i| {
                (0..=i.min(r)).fold(T::zero(), |acc, j| {
                    acc + toeplitz[i - j].clone() * poly[j].clone()
                })
            })
            .collect();
        poly = next;
    }
    poly.reverse();
    poly
}

pub fn char_poly(m: &IntMatrix) -> Result<CharPoly<BigInt>> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    Ok(CharPoly {
        coefficients: berkowitz(m),
    })
}

pub fn char_poly_rat(m: &RatMatrix) -> Result<CharPoly<BigRational>> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    Ok(CharPoly {
        coefficients: berkowitz(m),
    })
}

/// Product of the nonzero eigenvalues of a positive semidefinite integer
/// matrix. The result is meaningless if `m` is not positive semidefinite.
pub fn pseudodeterminant(m: &IntMatrix) -> Result<BigInt> {
    Ok(char_poly(m)?.pseudodeterminant())
}

pub fn pseudodeterminant_rat(m: &RatMatrix) -> Result<BigRational> {
    Ok(char_poly_rat(m)?.pseudodeterminant())
}

impl<T: fmt::Display + Zero + One + Signed> fmt::Display for CharPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (power, c) in self.coefficients.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            if !a.is_one() || power == 0 {
                write!(f, "{a}")?;
            }
            match power {
                0 => {}
                1 => write!(f, "z")?,
                p => write!(f, "z^{p}")?,
            }
        }
        Ok(())
    }
}

impl<T: fmt::Display + Zero + One + Signed> fmt::Debug for CharPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CharPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::det_exact;
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn examples() {
        let zero = char_poly(&IntMatrix::zeros(2, 2)).unwrap();
        assert_eq!(zero.coefficients, ints(&[0, 0, 1]));
        assert_eq!(zero.pseudodeterminant(), BigInt::one());
        let five = char_poly(&IntMatrix::from_i64_rows(&[[5]])).unwrap();
        assert_eq!(five.coefficients, ints(&[-5, 1]));
        assert_eq!(five.to_string(), "z - 5");
        let k3 = IntMatrix::from_i64_rows(&[[2, -1, -1], [-1, 2, -1], [-1, -1, 2]]);
        let p = char_poly(&k3).unwrap();
        assert_eq!(p.coefficients, ints(&[0, 9, -6, 1]));
        assert_eq!(p.to_string(), "z^3 - 6z^2 + 9z");
        assert_eq!(p.pseudodeterminant(), BigInt::from(9));
        assert_eq!(p.reflect().coefficients, ints(&[0, 9, 6, 1]));
        assert!(char_poly(&IntMatrix::zeros(1, 2)).is_err());
        assert_eq!(
            pseudodeterminant(&IntMatrix::identity(4)).unwrap(),
            BigInt::one()
        );
    }

    #[test]
    fn complete_graph_spectrum() {
        for n in 2..7i64 {
            let l = IntMatrix::from_fn(n as usize, n as usize, |i, j| {
                BigInt::from(if i == j { n - 1 } else { -1 })
            });
            let p = char_poly(&l).unwrap();
            let expected =
                CharPoly::from_roots(&[(BigInt::zero(), 1), (BigInt::from(n), n as usize - 1)]);
            assert_eq!(p, expected);
            assert_eq!(p.pseudodeterminant(), BigInt::from(n).pow(n as u32 - 1));
        }
    }

    #[test]
    fn integer_roots() {
        let p = CharPoly::from_roots(&[(BigInt::zero(), 2), (BigInt::from(3), 1), (BigInt::from(5), 2)]);
        assert_eq!(
            p.nonnegative_integer_roots().unwrap(),
            vec![(BigInt::zero(), 2), (BigInt::from(3), 1), (BigInt::from(5), 2)]
        );
        let irrational = CharPoly {
            coefficients: ints(&[1, -3, 1]),
        };
        assert_eq!(irrational.nonnegative_integer_roots(), None);
        let constant = CharPoly {
            coefficients: ints(&[1]),
        };
        assert_eq!(constant.nonnegative_integer_roots(), Some(vec![]));
    }

    #[test]
    fn rational_matrix() {
        let half = BigRational::new(1.into(), 2.into());
        let m = RatMatrix::from_fn(2, 2, |i, j| {
            if i == j {
                half.clone()
            } else {
                BigRational::zero()
            }
        });
        let p = char_poly_rat(&m).unwrap();
        assert_eq!(p.coefficient(0), BigRational::new(1.into(), 4.into()));
        assert_eq!(p.coefficient(1), -BigRational::one());
        assert_eq!(pseudodeterminant_rat(&m).unwrap(), BigRational::new(1.into(), 4.into()));
    }

    proptest! {
        #[test]
        fn constant_term_is_signed_determinant(n in 0usize..6, seed in proptest::collection::vec(-9i64..=9, 25)) {
            let m = IntMatrix::from_fn(n, n, |i, j| BigInt::from(seed[i * 5 + j]));
            let p = char_poly(&m).unwrap();
            let d = det_exact(&m).unwrap();
            let expected = if n % 2 == 0 { d } else { -d };
            prop_assert_eq!(p.coefficient(0), expected);
            let trace: BigInt = (0..n).map(|i| m.get(i, i).clone()).sum();
            if n > 0 {
                prop_assert_eq!(p.coefficient(n - 1), -trace);
            }
        }
    }
}
