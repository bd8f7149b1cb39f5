use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{det_exact, invariant_factors, rank_exact, solve_rat, IntMatrix, Matrix};
use crate::error::{Error, Result};

/// Row echelon form by unimodular row operations, pivoting on the first
/// `pivot_cols` columns. Returns the reduced rows and the pivot columns.
fn unimodular_echelon(
    mut rows: Vec<Vec<BigInt>>,
    pivot_cols: usize,
) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..pivot_cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        for i in r + 1..rows.len() {
            if rows[i][c].is_zero() {
                continue;
            }
            let a = rows[r][c].clone();
            let b = rows[i][c].clone();
            let e = a.extended_gcd(&b);
            let (g, x, y) = (e.gcd, e.x, e.y);
            let (ag, bg) = (&a / &g, &b / &g);
            let (top, bottom): (Vec<BigInt>, Vec<BigInt>) = rows[r]
                .iter()
                .zip(&rows[i])
                .map(|(u, v)| (&x * u + &y * v, &ag * v - &bg * u))
                .unzip();
            rows[r] = top;
            rows[i] = bottom;
        }
        if rows[r][c].is_negative() {
            rows[r].iter_mut().for_each(|v| *v = -&*v);
        }
        // reduce entries above the pivot into [0, pivot)
        for i in 0..r {
            let q = rows[i][c].div_floor(&rows[r][c]);
            if !q.is_zero() {
                let pivot_row = rows[r].clone();
                for (v, p) in rows[i].iter_mut().zip(&pivot_row) {
                    *v -= &q * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (rows, pivots)
}

/// Integer basis (as columns) of the lattice generated by the columns of
/// `a`, in column Hermite normal form.
pub fn hermite_basis(a: &IntMatrix) -> IntMatrix {
    let n = a.rows();
    let rows: Vec<Vec<BigInt>> = (0..a.cols()).map(|j| a.column(j)).collect();
    let (reduced, pivots) = unimodular_echelon(rows, n);
    Matrix::from_columns(n, &reduced[..pivots.len()])
}

/// Integer basis (as columns) of `{x ∈ ℤ^cols : a·x = 0}`. The result is
/// saturated: it spans every integer kernel vector.
pub fn kernel_basis(a: &IntMatrix) -> IntMatrix {
    let (m, n) = (a.rows(), a.cols());
    let rows: Vec<Vec<BigInt>> = (0..n)
        .map(|j| {
            let mut row = a.column(j);
            row.extend((0..n).map(|k| if k == j { BigInt::one() } else { BigInt::zero() }));
            row
        })
        .collect();
    let (reduced, pivots) = unimodular_echelon(rows, m);
    let kernel: Vec<Vec<BigInt>> = reduced[pivots.len()..]
        .iter()
        .map(|row| row[m..].to_vec())
        .collect();
    Matrix::from_columns(n, &kernel)
}

/// Basis of the integer points in the rational span of the columns of `a`.
pub fn saturation(a: &IntMatrix) -> IntMatrix {
    let normals = kernel_basis(&a.transpose());
    let s = kernel_basis(&normals.transpose());
    if s.cols() == 0 {
        IntMatrix::zeros(a.rows(), 0)
    } else {
        s
    }
}

/// Squared covolume `det(aᵀa)` of the lattice with basis the columns of `a`.
pub fn covolume_squared(a: &IntMatrix) -> Result<BigInt> {
    let g = det_exact(&a.gram_columns())?;
    if g.is_zero() {
        return Err(Error::DependentColumns);
    }
    Ok(g)
}

/// Order of a quotient of lattices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum QuotientOrder {
    Finite(BigInt),
    Infinite,
}

impl QuotientOrder {
    pub fn finite(&self) -> Option<&BigInt> {
        match self {
            Self::Finite(n) => Some(n),
            Self::Infinite => None,
        }
    }
}

impl fmt::Display for QuotientOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Finite(n) => write!(f, "{n}"),
            Self::Infinite => write!(f, "infinite"),
        }
    }
}

/// Integer coordinates of the columns of `generators` in the lattice basis
/// given by the columns of `basis`.
pub fn lattice_coordinates(basis: &IntMatrix, generators: &IntMatrix) -> Result<IntMatrix> {
    if basis.rows() != generators.rows() {
        return Err(Error::Shape(format!(
            "lattice ambient dimension {} vs generators {}",
            basis.rows(),
            generators.rows()
        )));
    }
    if basis.cols() == 0 {
        return if generators.is_zero() {
            Ok(IntMatrix::zeros(0, generators.cols()))
        } else {
            Err(Error::NotInLattice("lattice is zero".into()))
        };
    }
    if rank_exact(basis) < basis.cols() {
        return Err(Error::DependentColumns);
    }
    let bt = basis.transpose();
    let coords = solve_rat(
        &bt.gram_rows().to_rat(),
        &bt.checked_mul(generators)?.to_rat(),
    )?;
    if &basis.to_rat() * &coords != generators.to_rat() {
        return Err(Error::NotInLattice("generators leave the rational span".into()));
    }
    coords
        .to_int()
        .ok_or_else(|| Error::NotInLattice("generators have fractional coordinates".into()))
}

/// Order of `L / M`, where `L` has basis the columns of `basis` and `M` is
/// generated by the columns of `generators`, which must lie in `L`.
pub fn lattice_quotient_order(basis: &IntMatrix, generators: &IntMatrix) -> Result<QuotientOrder> {
    if basis.rows() != generators.rows() {
        return Err(Error::Shape(format!(
            "lattice ambient dimension {} vs generators {}",
            basis.rows(),
            generators.rows()
        )));
    }
    let r = basis.cols();
    if r == 0 {
        return if generators.is_zero() {
            Ok(QuotientOrder::Finite(BigInt::one()))
        } else {
            Err(Error::NotInLattice("lattice is zero".into()))
        };
    }
    let coords = lattice_coordinates(basis, generators)?;
    let factors = invariant_factors(&coords);
    if factors.len() < r {
        return Ok(QuotientOrder::Infinite);
    }
    Ok(QuotientOrder::Finite(
        factors.into_iter().fold(BigInt::one(), |acc, d| acc * d),
    ))
}
