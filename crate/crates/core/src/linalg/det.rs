use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{small, IntMatrix, Matrix, RatMatrix};
use crate::error::{Error, Result};

/// Exact determinant by Bareiss fraction-free elimination.
pub fn det_exact(m: &IntMatrix) -> Result<BigInt> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    if let Some(d) = m.to_i64().and_then(|data| small::det(m.rows(), &data)) {
        return Ok(BigInt::from(d));
    }
    Ok(bareiss_det(m.entries().to_vec(), m.rows()))
}

fn bareiss_det(mut a: Vec<BigInt>, n: usize) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i * n + k].is_zero()) else {
            return BigInt::zero();
        };
        if p != k {
            for j in 0..n {
                a.swap(k * n + j, p * n + j);
            }
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i * n + j] * &a[k * n + k] - &a[i * n + k] * &a[k * n + j];
                a[i * n + j] = v / &prev;
            }
            a[i * n + k] = BigInt::zero();
        }
        prev = a[k * n + k].clone();
    }
    let d = a[n * n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Determinant of a rational matrix: clear each row's denominators, take the
/// integer determinant, then divide the row multipliers back out.
pub fn det_rat(m: &RatMatrix) -> Result<BigRational> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let (int, scales) = m.clear_row_denominators();
    let d = det_exact(&int)?;
    let denom = scales.iter().fold(BigInt::one(), |acc, s| acc * s);
    Ok(BigRational::new(d, denom))
}

/// Rank over the rationals via fraction-free elimination.
pub fn rank_exact(m: &IntMatrix) -> usize {
    if let Some(r) = m
        .to_i64()
        .and_then(|data| small::rank(m.rows(), m.cols(), &data))
    {
        return r;
    }
    bareiss_rank(m.entries().to_vec(), m.rows(), m.cols())
}

fn bareiss_rank(mut a: Vec<BigInt>, rows: usize, cols: usize) -> usize {
    let mut rank = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&i| !a[i * cols + c].is_zero()) else {
            continue;
        };
        if p != rank {
            for j in 0..cols {
                a.swap(rank * cols + j, p * cols + j);
            }
        }
        let pivot = a[rank * cols + c].clone();
        for i in rank + 1..rows {
            for j in c + 1..cols {
                let v = &a[i * cols + j] * &pivot - &a[i * cols + c] * &a[rank * cols + j];
                a[i * cols + j] = v / &prev;
            }
            a[i * cols + c] = BigInt::zero();
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

pub fn rank_rat(m: &RatMatrix) -> usize {
    rank_exact(&m.clear_row_denominators().0)
}

/// Solve `a · x = b` for square nonsingular `a` by Gauss–Jordan elimination
/// over the rationals.
pub fn solve_rat(a: &RatMatrix, b: &RatMatrix) -> Result<RatMatrix> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    if a.rows() != b.rows() {
        return Err(Error::Shape(format!(
            "right-hand side has {} rows, expected {}",
            b.rows(),
            a.rows()
        )));
    }
    let n = a.rows();
    let m = b.cols();
    let w = n + m;
    let aug = a.hcat(b)?;
    let mut rows: Vec<Vec<BigRational>> = (0..n).map(|i| aug.row(i).to_vec()).collect();
    for c in 0..n {
        let p = (c..n)
            .find(|&i| !rows[i][c].is_zero())
            .ok_or_else(|| Error::Singular("coefficient matrix".into()))?;
        rows.swap(c, p);
        let inv = rows[c][c].recip();
        for x in rows[c].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = rows[c].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == c || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for j in c..w {
                row[j] = &row[j] - &f * &pivot_row[j];
            }
        }
    }
    Ok(Matrix::from_fn(n, m, |i, j| rows[i][n + j].clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cofactor_det(m: &[Vec<i64>]) -> i64 {
        let n = m.len();
        if n == 0 {
            return 1;
        }
        (0..n)
            .map(|j| {
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, &v)| v)
                            .collect()
                    })
                    .collect();
                let s = if j % 2 == 0 { 1 } else { -1 };
                s * m[0][j] * cofactor_det(&minor)
            })
            .sum()
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(det_exact(&IntMatrix::from_i64_rows(&[[1]])).unwrap(), 1.into());
        let reduced_k3 = IntMatrix::from_i64_rows(&[[2, -1], [-1, 2]]);
        assert_eq!(det_exact(&reduced_k3).unwrap(), 3.into());
        assert!(det_exact(&IntMatrix::zeros(2, 3)).is_err());
        assert_eq!(det_exact(&IntMatrix::zeros(0, 0)).unwrap(), 1.into());
    }

    #[test]
    fn big_entries_use_exact_path() {
        let big = BigInt::from(i64::MAX) * BigInt::from(1000);
        let m = IntMatrix::new(
            2,
            2,
            vec![big.clone(), BigInt::one(), BigInt::one(), big.clone()],
        )
        .unwrap();
        assert_eq!(det_exact(&m).unwrap(), &big * &big - 1);
        assert_eq!(rank_exact(&m), 2);
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank_exact(&IntMatrix::identity(2)), 2);
        assert_eq!(rank_exact(&IntMatrix::zeros(3, 4)), 0);
        // signed incidence matrix of the triangle graph
        let d1 = IntMatrix::from_i64_rows(&[[-1, -1, 0], [1, 0, -1], [0, 1, 1]]);
        assert_eq!(rank_exact(&d1), 2);
    }

    #[test]
    fn rational_det_and_solve() {
        let half = BigRational::new(1.into(), 2.into());
        let m = RatMatrix::from_fn(2, 2, |i, j| {
            if i == j {
                half.clone()
            } else {
                BigRational::zero()
            }
        });
        assert_eq!(det_rat(&m).unwrap(), BigRational::new(1.into(), 4.into()));
        let b = RatMatrix::from_fn(2, 1, |_, _| BigRational::one());
        let x = solve_rat(&m, &b).unwrap();
        assert_eq!(x.get(0, 0), &BigRational::from_integer(2.into()));
        assert!(solve_rat(&RatMatrix::zeros(2, 2), &b).is_err());
        assert_eq!(rank_rat(&m), 2);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]
        #[test]
        fn det_matches_cofactor_expansion(n in 0usize..=4, seed in proptest::collection::vec(-9i64..=9, 16)) {
            let rows: Vec<Vec<i64>> = (0..n).map(|i| seed[i * n..(i + 1) * n].to_vec()).collect();
            let m = IntMatrix::from_fn(n, n, |i, j| BigInt::from(rows[i][j]));
            prop_assert_eq!(det_exact(&m).unwrap(), BigInt::from(cofactor_det(&rows)));
            prop_assert_eq!(bareiss_det(m.entries().to_vec(), n), BigInt::from(cofactor_det(&rows)));
        }
    }
}
