use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{small, IntMatrix, Matrix};

/// Smith normal form: `left · m · right` is diagonal with entries
/// `invariant_factors` followed by zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    /// Nonzero invariant factors `d₁ | d₂ | …`, all positive.
    pub invariant_factors: Vec<BigInt>,
    pub left: IntMatrix,
    pub right: IntMatrix,
}

impl SnfResult {
    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }

    /// The diagonal matrix `left · m · right` for an `rows x cols` input.
    pub fn diagonal(&self) -> IntMatrix {
        let (rows, cols) = (self.left.rows(), self.right.rows());
        IntMatrix::from_fn(rows, cols, |i, j| {
            if i == j && i < self.invariant_factors.len() {
                self.invariant_factors[i].clone()
            } else {
                BigInt::zero()
            }
        })
    }

    /// Invariant factors greater than one.
    pub fn torsion_factors(&self) -> Vec<BigInt> {
        self.invariant_factors
            .iter()
            .filter(|d| !d.is_one())
            .cloned()
            .collect()
    }
}

struct Work {
    a: Vec<BigInt>,
    left: Vec<BigInt>,
    right: Vec<BigInt>,
    rows: usize,
    cols: usize,
}

impl Work {
    fn at(&self, i: usize, j: usize) -> &BigInt {
        &self.a[i * self.cols + j]
    }

    fn swap_rows(&mut self, r1: usize, r2: usize) {
        if r1 == r2 {
            return;
        }
        for j in 0..self.cols {
            self.a.swap(r1 * self.cols + j, r2 * self.cols + j);
        }
        for j in 0..self.rows {
            self.left.swap(r1 * self.rows + j, r2 * self.rows + j);
        }
    }

    fn swap_cols(&mut self, c1: usize, c2: usize) {
        if c1 == c2 {
            return;
        }
        for i in 0..self.rows {
            self.a.swap(i * self.cols + c1, i * self.cols + c2);
        }
        for i in 0..self.cols {
            self.right.swap(i * self.cols + c1, i * self.cols + c2);
        }
    }

    /// row[dst] -= q · row[src]
    fn row_axpy(&mut self, dst: usize, src: usize, q: &BigInt) {
        for j in 0..self.cols {
            let v = q * &self.a[src * self.cols + j];
            self.a[dst * self.cols + j] -= v;
        }
        for j in 0..self.rows {
            let v = q * &self.left[src * self.rows + j];
            self.left[dst * self.rows + j] -= v;
        }
    }

    /// col[dst] -= q · col[src]
    fn col_axpy(&mut self, dst: usize, src: usize, q: &BigInt) {
        for i in 0..self.rows {
            let v = q * &self.a[i * self.cols + src];
            self.a[i * self.cols + dst] -= v;
        }
        for i in 0..self.cols {
            let v = q * &self.right[i * self.cols + src];
            self.right[i * self.cols + dst] -= v;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = -&self.a[r * self.cols + j];
            self.a[r * self.cols + j] = v;
        }
        for j in 0..self.rows {
            let v = -&self.left[r * self.rows + j];
            self.left[r * self.rows + j] = v;
        }
    }

    fn smallest_in_block(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.rows {
            for j in t..self.cols {
                let v = self.at(i, j);
                if !v.is_zero() && best.is_none_or(|(bi, bj)| v.abs() < self.at(bi, bj).abs()) {
                    best = Some((i, j));
                }
            }
        }
        best
    }
}

/// Smith normal form with unimodular transforms.
pub fn smith_normal_form(m: &IntMatrix) -> SnfResult {
    let (rows, cols) = (m.rows(), m.cols());
    let mut w = Work {
        a: m.entries().to_vec(),
        left: IntMatrix::identity(rows).into_entries(),
        right: IntMatrix::identity(cols).into_entries(),
        rows,
        cols,
    };
    let mut factors = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pi, pj)) = w.smallest_in_block(t) else {
            break;
        };
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);
        loop {
            let p = w.at(t, t).clone();
            let mut clean = true;
            for i in t + 1..rows {
                let q = w.at(i, t).div_floor(&p);
                if !q.is_zero() {
                    w.row_axpy(i, t, &q);
                }
                clean &= w.at(i, t).is_zero();
            }
            for j in t + 1..cols {
                let q = w.at(t, j).div_floor(&p);
                if !q.is_zero() {
                    w.col_axpy(j, t, &q);
                }
                clean &= w.at(t, j).is_zero();
            }
            if !clean {
                // a nonzero remainder is smaller than the pivot: move it in
                let mut best = (t, t);
                for i in t + 1..rows {
                    if !w.at(i, t).is_zero() && w.at(i, t).abs() < w.at(best.0, best.1).abs() {
                        best = (i, t);
                    }
                }
                for j in t + 1..cols {
                    if !w.at(t, j).is_zero() && w.at(t, j).abs() < w.at(best.0, best.1).abs() {
                        best = (t, j);
                    }
                }
                w.swap_rows(t, best.0);
                w.swap_cols(t, best.1);
                continue;
            }
            let bad = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !w.at(i, j).is_multiple_of(&p));
            match bad {
                Some((i, _)) => w.row_axpy(t, i, &BigInt::from(-1)),
                None => break,
            }
        }
        if w.at(t, t).is_negative() {
            w.negate_row(t);
        }
        factors.push(w.at(t, t).clone());
        t += 1;
    }
    SnfResult {
        invariant_factors: factors,
        left: Matrix::new(rows, rows, w.left).expect("square"),
        right: Matrix::new(cols, cols, w.right).expect("square"),
    }
}

/// Nonzero invariant factors, without transforms.
pub fn invariant_factors(m: &IntMatrix) -> Vec<BigInt> {
    if let Some(f) = m
        .to_i64()
        .and_then(|data| small::invariant_factors(m.rows(), m.cols(), &data))
    {
        return f.into_iter().map(BigInt::from).collect();
    }
    smith_normal_form(m).invariant_factors
}

/// Order of the torsion subgroup of the cokernel of `m`.
pub fn torsion_of(m: &IntMatrix) -> BigInt {
    invariant_factors(m)
        .into_iter()
        .fold(BigInt::one(), |acc, d| acc * d)
}
