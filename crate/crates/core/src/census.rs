//! Brute-force enumeration of spanning forests, rooted forests, orientations
//! and cobases. This is the ground truth the closed forms are checked against.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::complex::{complement, validate_indices, ChainComplex, WeightAssignment};
use crate::error::{Error, Result};
use crate::homology::{column_torsion, lyons_tprime};
use crate::linalg::{binomial, det_exact, rank_exact, small, IntMatrix};

pub const DEFAULT_CAP: u64 = 5_000_000;

/// All maximal spanning `k`-forests with the torsion `t_{k−1}` of each.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForestCensus {
    pub k: usize,
    pub rank: usize,
    pub forests: Vec<(Vec<usize>, BigInt)>,
}

impl ForestCensus {
    pub fn len(&self) -> usize {
        self.forests.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forests.is_empty()
    }

    /// `Σ_T t_{k−1}(T)²`.
    pub fn tau(&self) -> BigInt {
        self.forests.iter().map(|(_, t)| t * t).sum()
    }

    /// `Σ_T t_{k−1}(T)² Π_{F∈T} w_F` over the `k`-cells of each forest.
    pub fn weighted_tau(&self, x: &ChainComplex, w: &WeightAssignment) -> Result<BigRational> {
        self.forests.iter().try_fold(BigRational::zero(), |acc, (f, t)| {
            Ok(acc + w.product(x, self.k, f)? * BigRational::from_integer(t * t))
        })
    }

    /// One `labels… ; torsion` line per forest, in enumeration order.
    pub fn export(&self, x: &ChainComplex) -> String {
        let mut out = String::new();
        for (f, t) in &self.forests {
            let labels: Vec<&str> = f.iter().map(|&i| x.label(self.k, i)).collect();
            writeln!(out, "{} ; {t}", labels.join(" ")).expect("string write");
        }
        out
    }
}

fn check_cap(needed: BigInt, cap: u64) -> Result<()> {
    if needed > BigInt::from(cap) {
        return Err(Error::CapExceeded {
            needed: needed.to_string(),
            cap,
        });
    }
    Ok(())
}

/// Column bases of `m` in lexicographic order.
pub fn column_bases(m: &IntMatrix, cap: u64) -> Result<Vec<Vec<usize>>> {
    let r = rank_exact(m);
    check_cap(binomial(m.cols() as u64, r as u64), cap)?;
    if let Some(out) = m.to_i64().and_then(|data| small_bases(m, &data, r)) {
        return Ok(out);
    }
    let mut out = Vec::new();
    big_bases(m, r, 0, &mut Vec::new(), &mut out);
    Ok(out)
}

fn small_bases(m: &IntMatrix, data: &[i64], r: usize) -> Option<Vec<Vec<usize>>> {
    let n = m.cols();
    let cols: Vec<Vec<i128>> = (0..n).map(|j| small::column(m.rows(), n, data, j)).collect();
    if r == 0 {
        return Some(vec![Vec::new()]);
    }
    let blocks: Vec<Option<Vec<Vec<usize>>>> = (0..=n - r)
        .into_par_iter()
        .map(|first| {
            let mut basis = small::IncrementalBasis::new(m.rows());
            let mut out = Vec::new();
            if basis.try_insert(&cols[first])? {
                small_dfs(&cols, r, first + 1, &mut basis, &mut vec![first], &mut out)?;
            }
            Some(out)
        })
        .collect();
    let mut out = Vec::new();
    for b in blocks {
        out.extend(b?);
    }
    Some(out)
}

fn small_dfs(
    cols: &[Vec<i128>],
    r: usize,
    start: usize,
    basis: &mut small::IncrementalBasis,
    chosen: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) -> Option<()> {
    if chosen.len() == r {
        out.push(chosen.clone());
        return Some(());
    }
    let need = r - chosen.len();
    for j in start..=cols.len() - need {
        if basis.try_insert(&cols[j])? {
            chosen.push(j);
            small_dfs(cols, r, j + 1, basis, chosen, out)?;
            chosen.pop();
            basis.pop();
        }
    }
    Some(())
}

fn big_bases(m: &IntMatrix, r: usize, start: usize, chosen: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if chosen.len() == r {
        out.push(chosen.clone());
        return;
    }
    let need = r - chosen.len();
    for j in start..=m.cols() - need {
        chosen.push(j);
        if rank_exact(&m.select_columns(chosen)) == chosen.len() {
            big_bases(m, r, j + 1, chosen, out);
        }
        chosen.pop();
    }
}

pub fn enumerate_forests(x: &ChainComplex, k: usize) -> Result<ForestCensus> {
    enumerate_forests_capped(x, k, DEFAULT_CAP)
}

/// Spanning `k`-forests with their torsion. For `k = 0` the augmentation makes
/// each single vertex a tree.
pub fn enumerate_forests_capped(x: &ChainComplex, k: usize, cap: u64) -> Result<ForestCensus> {
    if k > x.dim() {
        return Err(Error::DimOutOfRange {
            k: k as isize,
            dim: x.dim(),
        });
    }
    let m = x.boundary(k)?;
    let bases = column_bases(&m, cap)?;
    let forests: Vec<(Vec<usize>, BigInt)> = bases
        .into_par_iter()
        .map(|f| {
            let t = column_torsion(&m, &f);
            (f, t)
        })
        .collect();
    Ok(ForestCensus {
        k,
        rank: rank_exact(&m),
        forests,
    })
}

pub fn tau_bruteforce(x: &ChainComplex, k: usize) -> Result<BigInt> {
    Ok(enumerate_forests(x, k)?.tau())
}

pub fn tau_weighted_bruteforce(
    x: &ChainComplex,
    k: usize,
    w: &WeightAssignment,
) -> Result<BigRational> {
    enumerate_forests(x, k)?.weighted_tau(x, w)
}

/// A rooted spanning forest `(F, R)`: `∂_d` restricted to rows `X_{d−1} ∖ R`
/// and columns `F` is square and nonsingular. `torsion` is `|det|` of that
/// block, the order of `H_{d−1}(F, R; ℤ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedForest {
    pub forest: Vec<usize>,
    pub root: Vec<usize>,
    pub torsion: BigInt,
    /// `orientation[i]` is the facet paired with the `i`-th non-root face.
    pub orientation: Option<Vec<usize>>,
}

impl RootedForest {
    /// Non-root faces `X_{d−1} ∖ R`.
    pub fn cobase(&self, x: &ChainComplex) -> Vec<usize> {
        complement(x.num_cells(x.dim() as isize - 1), &self.root).expect("valid root")
    }
}

/// Calls `visit(F, S, |det ∂_{S,F}|)` for every rooted forest, where `S` is
/// the complement of the root. Forests are visited in lexicographic order of
/// `F`, then of `S`.
pub fn for_each_rooted_forest(
    x: &ChainComplex,
    cap: u64,
    mut visit: impl FnMut(&[usize], &[usize], BigInt),
) -> Result<()> {
    let d = x.dim();
    if d == 0 {
        return Err(Error::DimOutOfRange { k: 0, dim: 0 });
    }
    let top = x.boundary_ref(d);
    let (rows, cols) = (top.rows(), top.cols());
    let r = rank_exact(top);
    let needed: BigInt = (0..=r)
        .map(|m| binomial(cols as u64, m as u64) * binomial(rows as u64, m as u64))
        .sum();
    check_cap(needed, cap)?;
    let mut forests = Vec::new();
    for m in 0..=r {
        if m == 0 {
            forests.push(Vec::new());
        } else {
            forests.extend(independent_subsets(top, m));
        }
    }
    forests.sort();
    for f in &forests {
        let block = top.select_columns(f);
        let row_vectors = block.transpose();
        for s in independent_subsets(&row_vectors, f.len()) {
            let det = det_exact(&block.select_rows(&s))?;
            visit(f, &s, det.magnitude().clone().into());
        }
    }
    Ok(())
}

/// Column subsets of size `m` with independent columns.
fn independent_subsets(a: &IntMatrix, m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if m > a.cols() {
        return out;
    }
    if let Some(data) = a.to_i64() {
        let cols: Vec<Vec<i128>> = (0..a.cols())
            .map(|j| small::column(a.rows(), a.cols(), &data, j))
            .collect();
        let mut basis = small::IncrementalBasis::new(a.rows());
        if small_dfs(&cols, m, 0, &mut basis, &mut Vec::new(), &mut out).is_some() {
            return out;
        }
        out.clear();
    }
    big_bases(a, m, 0, &mut Vec::new(), &mut out);
    out
}

pub fn enumerate_rooted_forests(x: &ChainComplex) -> Result<Vec<RootedForest>> {
    enumerate_rooted_forests_capped(x, DEFAULT_CAP)
}

pub fn enumerate_rooted_forests_capped(x: &ChainComplex, cap: u64) -> Result<Vec<RootedForest>> {
    let n = x.num_cells(x.dim() as isize - 1);
    let mut out = Vec::new();
    for_each_rooted_forest(x, cap, |f, s, t| {
        out.push(RootedForest {
            forest: f.to_vec(),
            root: complement(n, s).expect("valid subset"),
            torsion: t,
            orientation: None,
        })
    })?;
    Ok(out)
}

/// `Σ_{(F,R)} t(F,R)² z^{|R|}` as ascending coefficients in `z`.
pub fn rooted_forest_polynomial_bruteforce(x: &ChainComplex) -> Result<Vec<BigInt>> {
    let n = x.num_cells(x.dim() as isize - 1);
    let mut coeffs = vec![BigInt::zero(); n + 1];
    for_each_rooted_forest(x, DEFAULT_CAP, |_, s, t| coeffs[n - s.len()] += &t * &t)?;
    Ok(coeffs)
}

fn orientation_setup(
    x: &ChainComplex,
    forest: &[usize],
    root: &[usize],
) -> Result<(Vec<usize>, Vec<Vec<bool>>)> {
    let d = x.dim();
    if d == 0 {
        return Err(Error::DimOutOfRange { k: 0, dim: 0 });
    }
    validate_indices(x.num_cells(d as isize), forest)?;
    let faces = complement(x.num_cells(d as isize - 1), root)?;
    if faces.len() != forest.len() {
        return Err(Error::InvalidSelection(format!(
            "{} non-root faces but {} facets",
            faces.len(),
            forest.len()
        )));
    }
    if forest.len() > 24 {
        return Err(Error::BadParameter("orientation search needs at most 24 facets".into()));
    }
    let top = x.boundary_ref(d);
    let incident = faces
        .iter()
        .map(|&i| forest.iter().map(|&j| !top.get(i, j).is_zero()).collect())
        .collect();
    Ok((faces, incident))
}

/// Number of bijections pairing each non-root face with a facet of `forest`
/// that contains it.
pub fn count_orientations(x: &ChainComplex, forest: &[usize], root: &[usize]) -> Result<BigInt> {
    let (faces, incident) = orientation_setup(x, forest, root)?;
    let m = faces.len();
    let mut ways = vec![BigInt::zero(); 1 << m];
    ways[0] = BigInt::one();
    for mask in 0usize..(1 << m) {
        if ways[mask].is_zero() {
            continue;
        }
        let i = mask.count_ones() as usize;
        if i == m {
            continue;
        }
        let current = ways[mask].clone();
        for j in (0..m).filter(|&j| incident[i][j] && mask >> j & 1 == 0) {
            ways[mask | 1 << j] += &current;
        }
    }
    Ok(ways.pop().expect("nonempty"))
}

/// Every orientation, as the facet assigned to each non-root face in order.
pub fn orientations(x: &ChainComplex, forest: &[usize], root: &[usize]) -> Result<Vec<Vec<usize>>> {
    let (faces, incident) = orientation_setup(x, forest, root)?;
    fn rec(
        incident: &[Vec<bool>],
        forest: &[usize],
        used: &mut Vec<bool>,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let i = current.len();
        if i == incident.len() {
            out.push(current.clone());
            return;
        }
        for j in 0..forest.len() {
            if incident[i][j] && !used[j] {
                used[j] = true;
                current.push(forest[j]);
                rec(incident, forest, used, current, out);
                current.pop();
                used[j] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&incident, forest, &mut vec![false; faces.len()], &mut Vec::new(), &mut out);
    Ok(out)
}

/// `k`-cobases: sets of `k`-cells indexing a row basis of `∂_{k+1}`.
pub fn cobases(x: &ChainComplex, k: usize) -> Result<Vec<Vec<usize>>> {
    if k > x.dim() {
        return Err(Error::DimOutOfRange {
            k: k as isize,
            dim: x.dim(),
        });
    }
    column_bases(&x.boundary_or_zero(k as isize + 1).transpose(), DEFAULT_CAP)
}

/// `h'(X) = Σ_S t_{k−1}(X_{≤k−1} ∪ (X_k ∖ S))² · t'_k(S)²` over the
/// `k`-cobases `S`.
pub fn lyons_hprime(x: &ChainComplex, k: usize) -> Result<BigInt> {
    let n = x.num_cells(k as isize);
    let dk = x.boundary(k)?;
    let mut total = BigInt::zero();
    for s in cobases(x, k)? {
        let rest = complement(n, &s)?;
        let root_torsion = column_torsion(&dk, &rest);
        let tp = lyons_tprime(x, k, &s)?;
        total += (&root_torsion * &root_torsion) * (&tp * &tp);
    }
    Ok(total)
}

/// Binomial upper bound on the forest census size, for callers that want to
/// skip infeasible instances up front.
pub fn census_size_bound(x: &ChainComplex, k: usize) -> Result<u64> {
    let m = x.boundary(k)?;
    Ok(binomial(m.cols() as u64, rank_exact(&m) as u64)
        .to_u64()
        .unwrap_or(u64::MAX))
}
