//! Skeletons of simplices and complete colorful complexes.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::linalg::{binomial_ext, int_pow, rat_pow};

/// `Δ_{n,d}`: every subset of `[n]` with at most `d + 1` elements.
pub fn simplex_skeleton(n: u32, d: usize) -> Result<SimplicialComplex> {
    if n == 0 || n > 12 || d >= n as usize {
        return Err(Error::BadParameter(format!("need 0 <= d < n <= 12, got n={n}, d={d}")));
    }
    let facets: Vec<Vec<u32>> = (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == d + 1)
        .map(|m| (1..=n).filter(|v| m >> (v - 1) & 1 == 1).collect())
        .collect();
    SimplicialComplex::from_facets(n, &facets)
}

fn ext(n: i64, k: i64) -> BigInt {
    binomial_ext(n, k)
}

/// `n^{C(n−2, d)}`.
pub fn kalai_count(n: u32, d: usize) -> BigInt {
    int_pow(&BigInt::from(n), &ext(n as i64 - 2, d as i64))
}

/// `(v_1⋯v_n)^{C(n−2, d−1)} (v_1+⋯+v_n)^{C(n−2, d)}`.
pub fn kalai_weighted(n: u32, d: usize, v: &[BigRational]) -> Result<BigRational> {
    if v.len() != n as usize {
        return Err(Error::BadParameter(format!("need {n} vertex weights")));
    }
    let prod: BigRational = v.iter().product();
    let sum: BigRational = v.iter().sum();
    let n = n as i64;
    let d = d as i64;
    Ok(rat_pow(&prod, &ext(n - 2, d - 1)) * rat_pow(&sum, &ext(n - 2, d)))
}

/// First vertex label of each color class; colors take consecutive blocks of
/// `1..=Σ n_i`.
pub fn color_offsets(sizes: &[u32]) -> Vec<u32> {
    sizes
        .iter()
        .scan(0, |acc, &n| {
            let start = *acc;
            *acc += n;
            Some(start)
        })
        .collect()
}

/// `K_{n_1,…,n_r}`: faces meet every color class at most once.
pub fn complete_colorful(sizes: &[u32]) -> Result<SimplicialComplex> {
    if sizes.is_empty() || sizes.contains(&0) {
        return Err(Error::BadParameter("color class sizes must be positive".into()));
    }
    let offsets = color_offsets(sizes);
    let mut facets: Vec<Vec<u32>> = vec![Vec::new()];
    for (i, &n) in sizes.iter().enumerate() {
        let base = offsets[i];
        facets = facets
            .into_iter()
            .flat_map(|f| {
                (1..=n).map(move |t| {
                    let mut g = f.clone();
                    g.push(base + t);
                    g
                })
            })
            .collect();
    }
    SimplicialComplex::from_facets(sizes.iter().sum(), &facets)
}

fn subsets(r: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << r).map(move |m| (0..r).filter(|&i| m >> i & 1 == 1).collect())
}

fn check_k(k: usize, r: usize) -> Result<()> {
    if k >= r {
        return Err(Error::DimOutOfRange {
            k: k as isize,
            dim: r.saturating_sub(1),
        });
    }
    Ok(())
}

/// `τ_k(K_{n_1,…,n_r}) = Π_{|D|≤k} σ_D^{C(r−2−|D|, k−|D|) π_D}` with
/// `σ_D = Σ_{i∉D} n_i` and `π_D = Π_{i∈D} (n_i − 1)`.
pub fn adin_count(k: usize, sizes: &[u32]) -> Result<BigInt> {
    let r = sizes.len();
    check_k(k, r)?;
    let mut out = BigInt::one();
    for d in subsets(r).filter(|d| d.len() <= k) {
        let sigma: u64 = (0..r).filter(|i| !d.contains(i)).map(|i| sizes[i] as u64).sum();
        let pi: BigInt = d.iter().map(|&i| BigInt::from(sizes[i] - 1)).product();
        let e = ext(r as i64 - 2 - d.len() as i64, (k - d.len()) as i64) * pi;
        out *= int_pow(&BigInt::from(sigma), &e);
    }
    Ok(out)
}

/// `Π_i n_i^{Π_{j≠i}(n_j − 1)}`, the top-dimensional case of Adin's formula.
pub fn adin_bolker_count(sizes: &[u32]) -> BigInt {
    (0..sizes.len())
        .map(|i| {
            let e: BigInt = (0..sizes.len())
                .filter(|&j| j != i)
                .map(|j| BigInt::from(sizes[j] - 1))
                .product();
            int_pow(&BigInt::from(sizes[i]), &e)
        })
        .product()
}

/// `τ_k` of the boundary of the `r`-dimensional cross-polytope `K_{2,…,2}`:
/// `Π_{d=0}^{k} (2(r−d))^{C(r,d) C(r−2−d, k−d)}`.
pub fn cross_polytope_count(k: usize, r: usize) -> BigInt {
    (0..=k)
        .map(|d| {
            let e = ext(r as i64, d as i64) * ext(r as i64 - 2 - d as i64, (k - d) as i64);
            int_pow(&BigInt::from(2 * (r - d)), &e)
        })
        .product()
}

/// Vertex-weighted Adin formula, with `v[j][t]` the weight of the `t`-th
/// vertex of color `j`.
pub fn aalipour_duval_weighted(k: usize, sizes: &[u32], v: &[Vec<BigRational>]) -> Result<BigRational> {
    let r = sizes.len();
    check_k(k, r)?;
    if v.len() != r || v.iter().zip(sizes).any(|(vs, &n)| vs.len() != n as usize) {
        return Err(Error::BadParameter("one weight per vertex of each color".into()));
    }
    let p: Vec<BigRational> = v.iter().map(|vs| vs.iter().product()).collect();
    let s: Vec<BigRational> = v.iter().map(|vs| vs.iter().sum()).collect();
    let mut out = BigRational::one();
    for j in 0..r {
        let mut e = BigInt::zero();
        for d in subsets(r).filter(|d| !d.contains(&j) && d.len() < k) {
            let term: BigInt = d.iter().map(|&t| BigInt::from(sizes[t])).product();
            if (k - 1 - d.len()).is_multiple_of(2) {
                e += term;
            } else {
                e -= term;
            }
        }
        out *= rat_pow(&p[j], &e);
    }
    for d in subsets(r).filter(|d| d.len() <= k) {
        let base: BigRational = (0..r).filter(|i| !d.contains(i)).map(|i| s[i].clone()).sum();
        let pi: BigInt = d.iter().map(|&i| BigInt::from(sizes[i] - 1)).product();
        let e = ext(r as i64 - 2 - d.len() as i64, (k - d.len()) as i64) * pi;
        out *= rat_pow(&base, &e);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn skeleton_sizes() {
        let k62 = simplex_skeleton(6, 2).unwrap();
        assert_eq!(k62.facets().len(), 20);
        assert_eq!(simplex_skeleton(4, 1).unwrap().faces(1).len(), 6);
        assert!(simplex_skeleton(3, 3).is_err());
        assert!(simplex_skeleton(13, 1).is_err());
    }

    #[test]
    fn kalai_values() {
        assert_eq!(kalai_count(5, 2), BigInt::from(125));
        assert_eq!(kalai_count(6, 2), BigInt::from(46656));
        for n in 2..8 {
            assert_eq!(kalai_count(n, 1), BigInt::from(n).pow(n - 2));
        }
        let ones = vec![BigRational::one(); 4];
        assert_eq!(kalai_weighted(4, 2, &ones).unwrap(), BigRational::from_integer(4.into()));
    }

    #[test]
    fn colorful_special_cases() {
        for (m, n) in [(2u32, 3u32), (3, 3), (4, 2)] {
            let expected = BigInt::from(n).pow(m - 1) * BigInt::from(m).pow(n - 1);
            assert_eq!(adin_count(1, &[m, n]).unwrap(), expected);
            assert_eq!(adin_bolker_count(&[m, n]), expected);
        }
        for r in 2..6usize {
            for k in 0..r {
                assert_eq!(adin_count(k, &vec![1; r]).unwrap(), kalai_count(r as u32, k));
                assert_eq!(adin_count(k, &vec![2; r]).unwrap(), cross_polytope_count(k, r));
            }
        }
        assert_eq!(cross_polytope_count(1, 3), BigInt::from(384));
        assert_eq!(adin_count(2, &[2, 2, 3]).unwrap(), adin_bolker_count(&[2, 2, 3]));
        let k222 = complete_colorful(&[2, 2, 2]).unwrap();
        assert_eq!(k222.facets().len(), 8);
        assert_eq!(k222.faces(1).len(), 12);
    }

    #[test]
    fn weighted_colorful_at_unit_weights() {
        let sizes = [2u32, 2, 3];
        let v: Vec<Vec<BigRational>> = sizes.iter().map(|&n| vec![BigRational::one(); n as usize]).collect();
        for k in 0..3 {
            assert_eq!(
                aalipour_duval_weighted(k, &sizes, &v).unwrap(),
                BigRational::from_integer(adin_count(k, &sizes).unwrap())
            );
        }
    }
}
