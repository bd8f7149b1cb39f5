//! Finite cell complexes as chain complexes of integer boundary matrices.
//!
//! Cells are indexed per dimension. `∂_k` maps `k`-cells to `(k−1)`-cells and
//! is stored for `1 ≤ k ≤ d`; the augmentation `∂₀` is the all-ones row, so all
//! homology is reduced.

mod dual;
pub mod io;
mod simplicial;
mod weights;

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{IntMatrix, RatMatrix};

pub use dual::dual_chain_complex;
pub use simplicial::{delete_and_link, simplex_label, SimplicialComplex};
pub use weights::{parse_rational, WeightAssignment};

/// A cell, identified by dimension and index within that dimension.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CellId {
    pub dim: usize,
    pub index: usize,
    pub label: String,
}

impl fmt::Display for CellId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LaplacianKind {
    /// `∂_{k+1} ∂*_{k+1}`
    UpDown,
    /// `∂*_k ∂_k`
    DownUp,
    /// Sum of the two.
    Total,
}

#[derive(Clone, PartialEq, Eq)]
pub struct ChainComplex {
    labels: Vec<Vec<String>>,
    lookup: Vec<HashMap<String, usize>>,
    boundaries: Vec<IntMatrix>,
    simplices: Option<Vec<Vec<Vec<u32>>>>,
}

impl ChainComplex {
    /// Build from cell labels per dimension `0..=d` and boundary matrices
    /// `∂_1, …, ∂_d`. Shapes and `∂∂ = 0` (including the augmentation) are
    /// checked.
    pub fn new(labels: Vec<Vec<String>>, boundaries: Vec<IntMatrix>) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::Shape("a complex needs at least dimension 0".into()));
        }
        if boundaries.len() + 1 != labels.len() {
            return Err(Error::Shape(format!(
                "{} boundary maps for {} dimensions",
                boundaries.len(),
                labels.len()
            )));
        }
        for (i, b) in boundaries.iter().enumerate() {
            if b.rows() != labels[i].len() || b.cols() != labels[i + 1].len() {
                return Err(Error::Shape(format!(
                    "boundary {} is {}x{}, expected {}x{}",
                    i + 1,
                    b.rows(),
                    b.cols(),
                    labels[i].len(),
                    labels[i + 1].len()
                )));
            }
        }
        let mut lookup = Vec::with_capacity(labels.len());
        for (k, ls) in labels.iter().enumerate() {
            let mut map = HashMap::with_capacity(ls.len());
            for (i, l) in ls.iter().enumerate() {
                if l.is_empty() || l.chars().any(char::is_whitespace) {
                    return Err(Error::Shape(format!("bad label {l:?} in dimension {k}")));
                }
                if map.insert(l.clone(), i).is_some() {
                    return Err(Error::Shape(format!("duplicate label {l} in dimension {k}")));
                }
            }
            lookup.push(map);
        }
        let complex = Self {
            labels,
            lookup,
            boundaries,
            simplices: None,
        };
        complex.check_chain_condition()?;
        Ok(complex)
    }

    pub(crate) fn with_simplices(mut self, simplices: Vec<Vec<Vec<u32>>>) -> Self {
        self.simplices = Some(simplices);
        self
    }

    fn check_chain_condition(&self) -> Result<()> {
        for k in 1..=self.dim() {
            let lower = self.boundary(k - 1)?;
            if !(&lower * self.boundary_ref(k)).is_zero() {
                return Err(Error::NotChainComplex { k });
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.labels.len() - 1
    }

    /// `|X_k|`; the empty cell gives `|X_{−1}| = 1`.
    pub fn num_cells(&self, k: isize) -> usize {
        match k {
            -1 => 1,
            k if k < 0 || k as usize > self.dim() => 0,
            k => self.labels[k as usize].len(),
        }
    }

    pub fn labels(&self, k: usize) -> &[String] {
        &self.labels[k]
    }

    pub fn label(&self, k: usize, index: usize) -> &str {
        &self.labels[k][index]
    }

    pub fn cell(&self, k: usize, index: usize) -> CellId {
        CellId {
            dim: k,
            index,
            label: self.labels[k][index].clone(),
        }
    }

    pub fn index_of(&self, k: usize, label: &str) -> Option<usize> {
        self.lookup.get(k)?.get(label).copied()
    }

    /// Indices for a list of labels in dimension `k`.
    pub fn indices_of(&self, k: usize, labels: &[&str]) -> Result<Vec<usize>> {
        labels
            .iter()
            .map(|l| {
                self.index_of(k, l)
                    .ok_or_else(|| Error::InvalidSelection(format!("no {k}-cell labelled {l}")))
            })
            .collect()
    }

    /// Vertex sets of the cells when the complex came from a simplicial complex.
    pub fn simplices(&self, k: usize) -> Option<&[Vec<u32>]> {
        self.simplices.as_ref().map(|s| s[k].as_slice())
    }

    pub fn is_simplicial(&self) -> bool {
        self.simplices.is_some()
    }

    /// Stored `∂_k` for `1 ≤ k ≤ d`.
    pub fn boundary_ref(&self, k: usize) -> &IntMatrix {
        &self.boundaries[k - 1]
    }

    /// `∂_k` for `0 ≤ k ≤ d`; `k = 0` gives the all-ones augmentation row.
    pub fn boundary(&self, k: usize) -> Result<IntMatrix> {
        match k {
            0 => Ok(IntMatrix::from_fn(1, self.num_cells(0), |_, _| BigInt::one())),
            k if k <= self.dim() => Ok(self.boundaries[k - 1].clone()),
            k => Err(Error::DimOutOfRange {
                k: k as isize,
                dim: self.dim(),
            }),
        }
    }

    /// `∂_k`, extended by zero maps outside `0..=d` (`∂_{d+1}` is the zero map
    /// from the empty module).
    pub fn boundary_or_zero(&self, k: isize) -> IntMatrix {
        if k >= 0 && k as usize <= self.dim() {
            self.boundary(k as usize).expect("in range")
        } else {
            IntMatrix::zeros(self.num_cells(k - 1), self.num_cells(k))
        }
    }

    pub fn laplacian(&self, k: isize, kind: LaplacianKind) -> Result<IntMatrix> {
        let d = self.dim() as isize;
        let out_of_range = Error::DimOutOfRange { k, dim: self.dim() };
        match kind {
            LaplacianKind::UpDown => {
                if k < -1 || k >= d {
                    return Err(out_of_range);
                }
                Ok(self.boundary((k + 1) as usize)?.gram_rows())
            }
            LaplacianKind::DownUp => {
                if k < 0 || k > d {
                    return Err(out_of_range);
                }
                Ok(self.boundary(k as usize)?.gram_columns())
            }
            LaplacianKind::Total => {
                if k < 0 || k > d {
                    return Err(out_of_range);
                }
                let down = self.laplacian(k, LaplacianKind::DownUp)?;
                if k == d {
                    return Ok(down);
                }
                down.checked_add(&self.laplacian(k, LaplacianKind::UpDown)?)
            }
        }
    }

    /// `∂_k · D_k · ∂*_k` for weights on the `k`-cells.
    pub fn weighted_laplacian_comb(&self, k: usize, w: &WeightAssignment) -> Result<RatMatrix> {
        let b = self.boundary(k)?.to_rat();
        let d = w.diagonal(self, k)?;
        Ok(&b.scale_columns(&d) * &b.transpose())
    }

    /// `D_{k−1}^{−1} · ∂_k · D_k · ∂*_k`, which is similar to the algebraically
    /// weighted Laplacian `D_{k−1}^{−1/2} ∂_k D_k ∂*_k D_{k−1}^{−1/2}` and has the
    /// same characteristic polynomial. For `k = 0` the empty cell has weight 1.
    pub fn weighted_laplacian_alg_similar(
        &self,
        k: usize,
        w: &WeightAssignment,
    ) -> Result<RatMatrix> {
        let comb = self.weighted_laplacian_comb(k, w)?;
        if k == 0 {
            return Ok(comb);
        }
        let lower = w.diagonal(self, k - 1)?;
        let inv: Vec<BigRational> = lower.iter().map(|x| x.recip()).collect();
        Ok(comb.scale_rows(&inv))
    }

    /// Rows of `∂_d` outside the root `root ⊆ X_{d−1}`.
    pub fn relative_boundary(&self, root: &[usize]) -> Result<IntMatrix> {
        let d = self.dim();
        if d == 0 {
            return Err(Error::DimOutOfRange { k: 0, dim: 0 });
        }
        let keep = complement(self.num_cells(d as isize - 1), root)?;
        Ok(self.boundary_ref(d).select_rows(&keep))
    }

    /// The `k`-skeleton `X_{≤k}`.
    pub fn skeleton(&self, k: usize) -> Result<Self> {
        if k > self.dim() {
            return Err(Error::DimOutOfRange {
                k: k as isize,
                dim: self.dim(),
            });
        }
        Ok(Self {
            labels: self.labels[..=k].to_vec(),
            lookup: self.lookup[..=k].to_vec(),
            boundaries: self.boundaries[..k].to_vec(),
            simplices: self.simplices.as_ref().map(|s| s[..=k].to_vec()),
        })
    }

    /// The subcomplex keeping `X_{≤d−1}` and only the given top cells.
    pub fn spanning_subcomplex(&self, facets: &[usize]) -> Result<Self> {
        let d = self.dim();
        validate_indices(self.num_cells(d as isize), facets)?;
        let mut labels = self.labels.clone();
        labels[d] = facets.iter().map(|&i| self.labels[d][i].clone()).collect();
        let mut boundaries = self.boundaries.clone();
        if d > 0 {
            boundaries[d - 1] = self.boundaries[d - 1].select_columns(facets);
        }
        let simplices = self.simplices.clone().map(|mut s| {
            s[d] = facets.iter().map(|&i| s[d][i].clone()).collect();
            s
        });
        let mut out = Self::new(labels, boundaries)?;
        out.simplices = simplices;
        Ok(out)
    }

    /// Rows where column `j` of `∂_k` is nonzero: the incident faces of cell `j`.
    pub fn faces_of(&self, k: usize, j: usize) -> Vec<usize> {
        let b = self.boundary_ref(k);
        (0..b.rows()).filter(|&i| !b.get(i, j).is_zero()).collect()
    }
}

impl fmt::Debug for ChainComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let counts: Vec<usize> = self.labels.iter().map(Vec::len).collect();
        write!(f, "ChainComplex(dim {}, cells {:?})", self.dim(), counts)
    }
}

/// Which cells of a complex a spanning subcomplex keeps: the top cells
/// `facets`, all of `X_{≤d−1}`, and optionally a root `root ⊆ X_{d−1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SubcomplexSelection {
    pub facets: Vec<usize>,
    pub root: Option<Vec<usize>>,
}

impl SubcomplexSelection {
    pub fn new(facets: Vec<usize>) -> Self {
        Self { facets, root: None }
    }

    pub fn with_root(facets: Vec<usize>, root: Vec<usize>) -> Self {
        Self {
            facets,
            root: Some(root),
        }
    }

    pub fn validate(&self, x: &ChainComplex) -> Result<()> {
        let d = x.dim() as isize;
        validate_indices(x.num_cells(d), &self.facets)?;
        if let Some(r) = &self.root {
            validate_indices(x.num_cells(d - 1), r)?;
        }
        Ok(())
    }
}

pub(crate) fn validate_indices(n: usize, idx: &[usize]) -> Result<()> {
    let mut seen = vec![false; n];
    for &i in idx {
        if i >= n {
            return Err(Error::InvalidSelection(format!("index {i} out of range 0..{n}")));
        }
        if std::mem::replace(&mut seen[i], true) {
            return Err(Error::InvalidSelection(format!("index {i} repeated")));
        }
    }
    Ok(())
}

/// Sorted complement of `idx` in `0..n`.
pub(crate) fn complement(n: usize, idx: &[usize]) -> Result<Vec<usize>> {
    validate_indices(n, idx)?;
    let mut keep = vec![true; n];
    for &i in idx {
        keep[i] = false;
    }
    Ok((0..n).filter(|&i| keep[i]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{char_poly, rank_exact};

    fn rp2_cell() -> ChainComplex {
        ChainComplex::new(
            vec![vec!["v".into()], vec!["e".into()], vec!["f".into()]],
            vec![
                IntMatrix::from_i64_rows(&[[0]]),
                IntMatrix::from_i64_rows(&[[2]]),
            ],
        )
        .unwrap()
    }

    fn triangle() -> ChainComplex {
        SimplicialComplex::from_facets(3, &[vec![1, 2, 3]])
            .unwrap()
            .compile()
    }

    #[test]
    fn construction_checks() {
        let bad = ChainComplex::new(
            vec![vec!["a".into(), "b".into()], vec!["e".into()]],
            vec![IntMatrix::from_i64_rows(&[[1], [1]])],
        );
        assert_eq!(bad.unwrap_err(), Error::NotChainComplex { k: 1 });
        let shape = ChainComplex::new(
            vec![vec!["a".into()], vec!["e".into()]],
            vec![IntMatrix::zeros(2, 1)],
        );
        assert!(matches!(shape, Err(Error::Shape(_))));
        let dup = ChainComplex::new(vec![vec!["a".into(), "a".into()]], vec![]);
        assert!(dup.is_err());
    }

    #[test]
    fn boundaries() {
        let x = rp2_cell();
        assert_eq!(x.boundary(2).unwrap(), IntMatrix::from_i64_rows(&[[2]]));
        assert_eq!(x.boundary(1).unwrap(), IntMatrix::from_i64_rows(&[[0]]));
        assert_eq!(x.boundary(0).unwrap(), IntMatrix::from_i64_rows(&[[1]]));
        assert!(x.boundary(3).is_err());
        let t = triangle();
        assert_eq!(t.boundary(2).unwrap(), IntMatrix::from_i64_rows(&[[1], [-1], [1]]));
        assert_eq!(t.boundary_or_zero(3).cols(), 0);
        assert_eq!(t.boundary_or_zero(3).rows(), 1);
    }

    #[test]
    fn laplacians() {
        let k3 = triangle().skeleton(1).unwrap();
        assert_eq!(
            k3.laplacian(0, LaplacianKind::UpDown).unwrap(),
            IntMatrix::from_i64_rows(&[[2, -1, -1], [-1, 2, -1], [-1, -1, 2]])
        );
        assert_eq!(
            k3.laplacian(-1, LaplacianKind::UpDown).unwrap(),
            IntMatrix::from_i64_rows(&[[3]])
        );
        assert!(k3.laplacian(1, LaplacianKind::UpDown).is_err());
        let tot = k3.laplacian(0, LaplacianKind::Total).unwrap();
        let up = k3.laplacian(0, LaplacianKind::UpDown).unwrap();
        let down = k3.laplacian(0, LaplacianKind::DownUp).unwrap();
        assert_eq!(tot, up.checked_add(&down).unwrap());
        assert!(tot.is_symmetric());
        let t = triangle();
        let up1 = char_poly(&t.laplacian(1, LaplacianKind::UpDown).unwrap()).unwrap();
        let down2 = char_poly(&t.laplacian(2, LaplacianKind::DownUp).unwrap()).unwrap();
        assert_eq!(up1.strip_zero_roots(), down2.strip_zero_roots());
    }

    #[test]
    fn weighted_laplacians() {
        let k3 = triangle().skeleton(1).unwrap();
        let ones = WeightAssignment::uniform(&k3, &[0, 1], BigRational::one());
        assert_eq!(
            k3.weighted_laplacian_comb(1, &ones).unwrap(),
            k3.laplacian(0, LaplacianKind::UpDown).unwrap().to_rat()
        );
        let mut w = WeightAssignment::new();
        for (i, v) in [1, 2, 3].into_iter().enumerate() {
            w.set(1, i, BigRational::from_integer(v.into())).unwrap();
        }
        let l = k3.weighted_laplacian_comb(1, &w).unwrap();
        assert_eq!(l.get(0, 0), &BigRational::from_integer(3.into()));
        assert_eq!(l.get(1, 1), &BigRational::from_integer(4.into()));
        assert_eq!(l.get(2, 2), &BigRational::from_integer(5.into()));
        assert!(k3.weighted_laplacian_comb(1, &WeightAssignment::new()).is_err());

        let mut v = WeightAssignment::new();
        for i in 0..3 {
            v.set(0, i, BigRational::from_integer((i as i64 + 2).into())).unwrap();
        }
        let aug = k3.weighted_laplacian_alg_similar(0, &v).unwrap();
        assert_eq!(aug, RatMatrix::from_fn(1, 1, |_, _| BigRational::from_integer(9.into())));
    }

    #[test]
    fn single_edge_weight() {
        let edge = SimplicialComplex::from_facets(2, &[vec![1, 2]]).unwrap().compile();
        let mut w = WeightAssignment::new();
        w.set(1, 0, BigRational::from_integer(5.into())).unwrap();
        let l = edge.weighted_laplacian_comb(1, &w).unwrap();
        let five = BigRational::from_integer(5.into());
        assert_eq!(
            l,
            RatMatrix::from_fn(2, 2, |i, j| if i == j { five.clone() } else { -five.clone() })
        );
    }

    #[test]
    fn relative_and_skeleton() {
        let t = triangle();
        assert_eq!(t.relative_boundary(&[0, 1, 2]).unwrap().rows(), 0);
        let r = t.relative_boundary(&[0, 1]).unwrap();
        assert_eq!(r, IntMatrix::from_i64_rows(&[[1]]));
        assert!(t.relative_boundary(&[7]).is_err());
        assert!(t.relative_boundary(&[1, 1]).is_err());
        let s = t.skeleton(1).unwrap();
        assert_eq!(s.dim(), 1);
        assert_eq!(rank_exact(s.boundary_ref(1)), 2);
        let sub = t.spanning_subcomplex(&[]).unwrap();
        assert_eq!(sub.num_cells(2), 0);
        assert_eq!(sub.num_cells(1), 3);
    }
}
