//! Integer homology, forest predicates and the torsion invariants that weight
//! forest counts.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::complex::{complement, validate_indices, ChainComplex};
use crate::error::{Error, Result};
use crate::linalg::{
    invariant_factors, kernel_basis, lattice_quotient_order, rank_exact, saturation, small,
    IntMatrix, QuotientOrder,
};

/// Reduced Betti number and torsion of `H_k(X; ℤ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologySummary {
    pub k: usize,
    pub betti: usize,
    pub torsion_order: BigInt,
    pub torsion_factors: Vec<BigInt>,
}

impl fmt::Display for HomologySummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H_{}: Z^{}", self.k, self.betti)?;
        for t in &self.torsion_factors {
            write!(f, " + Z/{t}")?;
        }
        Ok(())
    }
}

pub fn homology(x: &ChainComplex, k: usize) -> Result<HomologySummary> {
    if k > x.dim() {
        return Err(Error::DimOutOfRange {
            k: k as isize,
            dim: x.dim(),
        });
    }
    let dk = x.boundary(k)?;
    let up = x.boundary_or_zero(k as isize + 1);
    let factors = invariant_factors(&up);
    let rank_up = factors.len();
    let betti = x.num_cells(k as isize) - rank_exact(&dk) - rank_up;
    let torsion_factors: Vec<BigInt> = factors.into_iter().filter(|d| !d.is_one()).collect();
    Ok(HomologySummary {
        k,
        betti,
        torsion_order: torsion_factors.iter().product(),
        torsion_factors,
    })
}

/// Reduced Betti number `β_k`; zero outside `0..=d`, except that `β_{−1}` is
/// one for the empty complex only, which never occurs here.
pub fn betti(x: &ChainComplex, k: isize) -> usize {
    if k < 0 || k as usize > x.dim() {
        return 0;
    }
    homology(x, k as usize).expect("in range").betti
}

/// `t_k(X) = |Tor H_k(X; ℤ)|`, with `t_k = 1` outside `0..=d`.
pub fn torsion(x: &ChainComplex, k: isize) -> BigInt {
    if k < 0 || k as usize > x.dim() {
        return BigInt::one();
    }
    homology(x, k as usize).expect("in range").torsion_order
}

/// Product of the invariant factors of a column selection.
pub(crate) fn column_torsion(m: &IntMatrix, cols: &[usize]) -> BigInt {
    let sub = m.select_columns(cols);
    if let Some(f) = sub
        .to_i64()
        .and_then(|data| small::invariant_factors(sub.rows(), sub.cols(), &data))
    {
        return f.into_iter().map(BigInt::from).product();
    }
    invariant_factors(&sub).into_iter().product()
}

/// `X` has `H_k(X; ℤ) = 0` for every `k < d`.
pub fn is_z_apc(x: &ChainComplex) -> bool {
    (0..x.dim()).all(|k| {
        let h = homology(x, k).expect("in range");
        h.betti == 0 && h.torsion_factors.is_empty()
    })
}

/// `X` has `H_k(X; ℝ) = 0` for every `k < d`.
pub fn is_r_apc(x: &ChainComplex) -> bool {
    (0..x.dim()).all(|k| betti(x, k as isize) == 0)
}

/// The top cells `facets` have linearly independent boundaries.
pub fn is_spanning_forest(x: &ChainComplex, facets: &[usize]) -> Result<bool> {
    let d = x.dim();
    validate_indices(x.num_cells(d as isize), facets)?;
    if d == 0 {
        return Ok(facets.is_empty());
    }
    Ok(rank_exact(&x.boundary_ref(d).select_columns(facets)) == facets.len())
}

pub fn is_maximal_spanning_forest(x: &ChainComplex, facets: &[usize]) -> Result<bool> {
    let d = x.dim();
    Ok(is_spanning_forest(x, facets)?
        && (d == 0 || facets.len() == rank_exact(x.boundary_ref(d))))
}

pub fn is_spanning_tree(x: &ChainComplex, facets: &[usize]) -> Result<bool> {
    Ok(is_maximal_spanning_forest(x, facets)? && betti(x, x.dim() as isize - 1) == 0)
}

/// `t_{d−1}` of the spanning subcomplex keeping the top cells `facets`,
/// computed from the cokernel of `∂_d` restricted to `facets`.
pub fn forest_torsion(x: &ChainComplex, facets: &[usize]) -> Result<BigInt> {
    let d = x.dim();
    validate_indices(x.num_cells(d as isize), facets)?;
    Ok(column_torsion(&x.boundary(d)?, facets))
}

/// The same torsion computed inside the cycle lattice: write the boundaries
/// of `facets` in a basis of `ker ∂_{d−1}` and take the torsion of that
/// cokernel.
pub fn forest_torsion_via_cycles(x: &ChainComplex, facets: &[usize]) -> Result<BigInt> {
    let d = x.dim();
    validate_indices(x.num_cells(d as isize), facets)?;
    let cycles = kernel_basis(&x.boundary(d - 1)?);
    let gens = x.boundary(d)?.select_columns(facets);
    let coords = crate::linalg::solve_rat(
        &cycles.gram_columns().to_rat(),
        &cycles.transpose().checked_mul(&gens)?.to_rat(),
    )?
    .to_int()
    .ok_or_else(|| Error::NotInLattice("boundaries outside the cycle lattice".into()))?;
    Ok(invariant_factors(&coords)
        .into_iter()
        .filter(|f| !f.is_one())
        .product())
}

/// `t_{d−1}(X, R)`: torsion of `H_{d−1}(X, R; ℤ)`, the cokernel of the rows
/// of `∂_d` outside the root.
pub fn relative_homology_torsion(x: &ChainComplex, root: &[usize]) -> Result<BigInt> {
    let rel = x.relative_boundary(root)?;
    let all: Vec<usize> = (0..rel.cols()).collect();
    Ok(column_torsion(&rel, &all))
}

/// `t_{k−1}` of the subcomplex generated by the `k`-cells `cells`.
pub fn subcomplex_torsion(x: &ChainComplex, k: usize, cells: &[usize]) -> Result<BigInt> {
    validate_indices(x.num_cells(k as isize), cells)?;
    Ok(column_torsion(&x.boundary(k)?, cells))
}

/// Lyons' `t'_k(S)` for a set `S` of `k`-cells: the order of
/// `ker_ℤ ∂_k / ((ker_ℤ ∂_k ∩ im_ℚ ∂_{k+1}) + ker_ℤ(∂_k restricted to X_k ∖ S))`.
pub fn lyons_tprime(x: &ChainComplex, k: usize, s: &[usize]) -> Result<BigInt> {
    let n = x.num_cells(k as isize);
    let rest = complement(n, s)?;
    let dk = x.boundary(k)?;
    let cycles = kernel_basis(&dk);
    let filled = saturation(&x.boundary_or_zero(k as isize + 1));
    let rest_cycles = kernel_basis(&dk.select_columns(&rest));
    let embedded = IntMatrix::from_fn(n, rest_cycles.cols(), |i, j| {
        match rest.binary_search(&i) {
            Ok(p) => rest_cycles.get(p, j).clone(),
            Err(_) => BigInt::from(0),
        }
    });
    match lattice_quotient_order(&cycles, &filled.hcat(&embedded)?)? {
        QuotientOrder::Finite(t) => Ok(t),
        QuotientOrder::Infinite => Err(Error::InvalidSelection(
            "cell set is not a cobase: quotient is infinite".into(),
        )),
    }
}

/// The seven characterizations of a maximal spanning forest, evaluated
/// independently on every subset of top cells. Returns, for each condition
/// (a), (b), (c), (e), (f), (g), the sorted list of qualifying subsets as bit
/// masks.
pub fn characterize_forests(x: &ChainComplex) -> Result<[Vec<u32>; 6]> {
    let d = x.dim();
    let m = x.num_cells(d as isize);
    if d == 0 || m > 24 {
        return Err(Error::BadParameter(format!(
            "characterization needs 1 to 24 top cells, got {m}"
        )));
    }
    let top = x.boundary_ref(d);
    let data = top
        .to_i64()
        .ok_or_else(|| Error::BadParameter("boundary entries exceed 64 bits".into()))?;
    let rows = top.rows();
    let cols: Vec<Vec<i128>> = (0..m).map(|j| small::column(rows, m, &data, j)).collect();
    let mut rank = vec![0u8; 1 << m];
    fill_rank_table(&cols, rows, &mut rank)
        .ok_or_else(|| Error::BadParameter("overflow in rank table".into()))?;

    let full = (1u32 << m) - 1;
    let r_full = rank[full as usize] as u32;
    let nullity_below = x.num_cells(d as isize - 1) as u32 - rank_exact(&x.boundary(d - 1)?) as u32;
    let beta_top_x = m as u32 - r_full;
    let beta_below_x = nullity_below - r_full;
    let beta_top = |t: u32| t.count_ones() - rank[t as usize] as u32;
    let beta_below = |t: u32| nullity_below - rank[t as usize] as u32;

    let mut out: [Vec<u32>; 6] = Default::default();
    for t in 0..=full {
        let size = t.count_ones();
        if beta_top(t) == 0 && beta_below(t) == beta_below_x {
            out[0].push(t);
        }
        if beta_below(t) == beta_below_x && size == m as u32 - beta_top_x {
            out[1].push(t);
        }
        if beta_top(t) == 0 && size == m as u32 - beta_top_x {
            out[2].push(t);
        }
        let maximal = beta_top(t) == 0
            && (0..m).all(|j| t >> j & 1 == 1 || beta_top(t | 1 << j) != 0);
        if maximal {
            out[3].push(t);
        }
        let minimal = beta_below(t) == beta_below_x
            && (0..m).all(|j| t >> j & 1 == 0 || beta_below(t & !(1 << j)) != beta_below_x);
        if minimal {
            out[4].push(t);
        }
    }
    out[5] = column_bases(&cols, rows, m).ok_or_else(|| Error::BadParameter("overflow".into()))?;
    Ok(out)
}

fn fill_rank_table(cols: &[Vec<i128>], rows: usize, table: &mut [u8]) -> Option<()> {
    fn rec(
        cols: &[Vec<i128>],
        start: usize,
        mask: usize,
        basis: &mut small::IncrementalBasis,
        table: &mut [u8],
    ) -> Option<()> {
        table[mask] = basis.len() as u8;
        for j in start..cols.len() {
            let inserted = basis.try_insert(&cols[j])?;
            rec(cols, j + 1, mask | 1 << j, basis, table)?;
            if inserted {
                basis.pop();
            }
        }
        Some(())
    }
    rec(cols, 0, 0, &mut small::IncrementalBasis::new(rows), table)
}

/// Subsets whose columns are independent and span every column.
fn column_bases(cols: &[Vec<i128>], rows: usize, m: usize) -> Option<Vec<u32>> {
    let mut out = Vec::new();
    for t in 0u32..(1 << m) {
        let mut basis = small::IncrementalBasis::new(rows);
        let mut independent = true;
        for j in (0..m).filter(|&j| t >> j & 1 == 1) {
            if !basis.try_insert(&cols[j])? {
                independent = false;
                break;
            }
        }
        if !independent {
            continue;
        }
        let mut spans = true;
        for c in cols {
            if !basis.contains(c)? {
                spans = false;
                break;
            }
        }
        if spans {
            out.push(t);
        }
    }
    Some(out)
}
