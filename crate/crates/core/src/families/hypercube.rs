//! The cubical complex `Q_n` with cells `{0, 1, *}^n`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::complex::{ChainComplex, WeightAssignment};
use crate::error::{Error, Result};
use crate::linalg::{binomial_ext, int_pow, rat_pow, IntMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Coord {
    Zero,
    One,
    Interval,
}

fn cells(n: usize) -> Vec<Vec<Vec<Coord>>> {
    let mut by_dim = vec![Vec::new(); n + 1];
    let total = 3usize.pow(n as u32);
    for code in 0..total {
        let mut c = Vec::with_capacity(n);
        let mut rest = code;
        for _ in 0..n {
            c.push(match rest % 3 {
                0 => Coord::Zero,
                1 => Coord::One,
                _ => Coord::Interval,
            });
            rest /= 3;
        }
        c.reverse();
        let dim = c.iter().filter(|&&x| x == Coord::Interval).count();
        by_dim[dim].push(c);
    }
    by_dim
}

fn label(c: &[Coord]) -> String {
    c.iter()
        .map(|x| match x {
            Coord::Zero => '0',
            Coord::One => '1',
            Coord::Interval => '*',
        })
        .collect()
}

/// `Q_n` as a chain complex. Cells in each dimension are ordered
/// lexicographically with `0 < 1 < *`; dropping the interval coordinate `i`
/// to endpoint `ε` has sign `(−1)^{#intervals before i}`, negated for `ε = 0`.
pub fn hypercube_complex(n: usize) -> Result<ChainComplex> {
    if n == 0 || n > 5 {
        return Err(Error::BadParameter(format!("need 1 <= n <= 5, got {n}")));
    }
    let by_dim = cells(n);
    let labels: Vec<Vec<String>> = by_dim.iter().map(|cs| cs.iter().map(|c| label(c)).collect()).collect();
    let mut boundaries = Vec::with_capacity(n);
    for k in 1..=n {
        let lower = &by_dim[k - 1];
        let mut m = IntMatrix::zeros(lower.len(), by_dim[k].len());
        for (j, c) in by_dim[k].iter().enumerate() {
            let mut before = 0;
            for i in 0..n {
                if c[i] != Coord::Interval {
                    continue;
                }
                for (end, sign) in [(Coord::Zero, -1i64), (Coord::One, 1)] {
                    let mut face = c.clone();
                    face[i] = end;
                    let row = lower.binary_search(&face).expect("face is a cell");
                    let s = if before % 2 == 0 { sign } else { -sign };
                    m.set(row, j, BigInt::from(s));
                }
                before += 1;
            }
        }
        boundaries.push(m);
    }
    ChainComplex::new(labels, boundaries)
}

/// `τ_1(Q_n) = 2^{2^n−n−1} Π_{j=2}^{n} j^{C(n,j)}`.
pub fn hypercube_tau1(n: usize) -> BigInt {
    let two = BigInt::from(2);
    let mut out = int_pow(&two, &BigInt::from((1u64 << n) - n as u64 - 1));
    for j in 2..=n {
        out *= int_pow(&BigInt::from(j), &binomial_ext(n as i64, j as i64));
    }
    out
}

/// `τ_k(Q_n) = Π_{j=k+1}^{n} (2j)^{C(n,j) C(j−2,k−1)}` for `k ≥ 1`.
pub fn hypercube_tau(k: usize, n: usize) -> Result<BigInt> {
    if k == 0 || k > n {
        return Err(Error::BadParameter(format!("need 1 <= k <= n, got k={k}, n={n}")));
    }
    Ok((k + 1..=n)
        .map(|j| {
            let e = binomial_ext(n as i64, j as i64) * binomial_ext(j as i64 - 2, k as i64 - 1);
            int_pow(&BigInt::from(2 * j), &e)
        })
        .product())
}

/// Face weights `w_f = Π_{f_i=*} q_i Π_{f_i=0} x_i Π_{f_i=1} y_i` on every cell.
pub fn hypercube_weights(
    x: &ChainComplex,
    q: &[BigRational],
    xs: &[BigRational],
    ys: &[BigRational],
) -> Result<WeightAssignment> {
    let dims: Vec<usize> = (0..=x.dim()).collect();
    WeightAssignment::from_fn(x, &dims, |k, i| {
        x.label(k, i)
            .chars()
            .enumerate()
            .fold(BigRational::one(), |acc, (c, ch)| {
                acc * match ch {
                    '*' => &q[c],
                    '0' => &xs[c],
                    _ => &ys[c],
                }
            })
    })
}

/// Weighted `τ_k(Q_n)`:
/// `(q_1⋯q_n)^{Σ_{i=k−1}^{n−1} C(n−1,i)C(i−1,k−2)} Π_{|A|>k} (u(A) Π_{j∈A} x_j y_j)^{C(|A|−2,k−1)}`
/// with `u(A) = Σ_{i∈A} q_i/x_i + q_i/y_i`.
pub fn hypercube_weighted(
    k: usize,
    n: usize,
    q: &[BigRational],
    xs: &[BigRational],
    ys: &[BigRational],
) -> Result<BigRational> {
    if k == 0 || k > n {
        return Err(Error::BadParameter(format!("need 1 <= k <= n, got k={k}, n={n}")));
    }
    if q.len() != n || xs.len() != n || ys.len() != n {
        return Err(Error::BadParameter(format!("need {n} values of q, x and y")));
    }
    let (n_, k_) = (n as i64, k as i64);
    let q_exp: BigInt = (k_ - 1..=n_ - 1)
        .map(|i| binomial_ext(n_ - 1, i) * binomial_ext(i - 1, k_ - 2))
        .sum();
    let mut out = rat_pow(&q.iter().product(), &q_exp);
    for mask in 0u32..1 << n {
        let a: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        if a.len() <= k {
            continue;
        }
        let u: BigRational = a.iter().map(|&i| &q[i] / &xs[i] + &q[i] / &ys[i]).sum();
        let xy: BigRational = a.iter().map(|&i| &xs[i] * &ys[i]).product();
        out *= rat_pow(&(u * xy), &binomial_ext(a.len() as i64 - 2, k_ - 1));
    }
    Ok(out)
}
