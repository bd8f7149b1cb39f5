//! Critical groups, cut and flow lattices, and discriminant groups.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::census::{column_bases, DEFAULT_CAP};
use crate::complex::{complement, ChainComplex, LaplacianKind};
use crate::error::{Error, Result};
use crate::homology::{column_torsion, is_spanning_tree, torsion};
use crate::linalg::{
    det_exact, hermite_basis, invariant_factors, kernel_basis, lattice_coordinates, rank_exact,
    solve_rat, IntMatrix,
};

/// A finitely generated abelian group `ℤ^free ⊕ ℤ/d_1 ⊕ ⋯ ⊕ ℤ/d_r` with
/// `1 < d_1 | d_2 | ⋯ | d_r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbelianGroupStructure {
    pub factors: Vec<BigInt>,
    pub free_rank: usize,
}

impl AbelianGroupStructure {
    pub fn trivial() -> Self {
        Self {
            factors: Vec::new(),
            free_rank: 0,
        }
    }

    /// `ℤ^rows / im m`.
    pub fn cokernel(m: &IntMatrix) -> Self {
        let d = invariant_factors(m);
        Self {
            free_rank: m.rows() - d.len(),
            factors: d.into_iter().filter(|f| !f.is_one()).collect(),
        }
    }

    pub fn torsion_part(&self) -> Self {
        Self {
            factors: self.factors.clone(),
            free_rank: 0,
        }
    }

    /// `None` for an infinite group.
    pub fn order(&self) -> Option<BigInt> {
        (self.free_rank == 0).then(|| self.factors.iter().product())
    }

    pub fn torsion_order(&self) -> BigInt {
        self.factors.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty() && self.free_rank == 0
    }

    /// `[d_1, …, d_r]`, followed by `; free f` when the free rank is positive.
    pub fn serialize(&self) -> String {
        let fs: Vec<String> = self.factors.iter().map(BigInt::to_string).collect();
        let mut out = format!("[{}]", fs.join(", "));
        if self.free_rank > 0 {
            out.push_str(&format!("; free {}", self.free_rank));
        }
        out
    }
}

impl fmt::Display for AbelianGroupStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.factors.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

fn check_critical_dim(x: &ChainComplex, i: usize) -> Result<()> {
    if i >= x.dim() {
        return Err(Error::DimOutOfRange {
            k: i as isize,
            dim: x.dim(),
        });
    }
    Ok(())
}

/// `K_i(X) = Tor(ℤ^{X_i} / im L_i)` with `L_i = ∂_{i+1} ∂*_{i+1}`, for `0 ≤ i < d`.
pub fn critical_group(x: &ChainComplex, i: usize) -> Result<AbelianGroupStructure> {
    check_critical_dim(x, i)?;
    let l = x.laplacian(i as isize, LaplacianKind::UpDown)?;
    Ok(AbelianGroupStructure::cokernel(&l).torsion_part())
}

/// `ker ∂_i / im L_i`, presented in coordinates of an integer kernel basis.
/// Its torsion part is `K_i(X)`; its free rank is `β_i(X)`.
pub fn critical_group_via_cycles(x: &ChainComplex, i: usize) -> Result<AbelianGroupStructure> {
    check_critical_dim(x, i)?;
    let l = x.laplacian(i as isize, LaplacianKind::UpDown)?;
    let cycles = kernel_basis(&x.boundary(i)?);
    let coords = lattice_coordinates(&cycles, &l)?;
    Ok(AbelianGroupStructure::cokernel(&coords))
}

/// An `i`-tree with torsion 1: a column basis of `∂_i` whose cokernel in the
/// span is torsion-free. The greedy basis is tried first, then the census.
pub fn torsion_free_tree(x: &ChainComplex, i: usize) -> Result<Option<Vec<usize>>> {
    check_critical_dim(x, i)?;
    let b = x.boundary(i)?;
    let greedy = greedy_column_basis(&b);
    if column_torsion(&b, &greedy).is_one() {
        return Ok(Some(greedy));
    }
    Ok(column_bases(&b, DEFAULT_CAP)?
        .into_iter()
        .find(|t| column_torsion(&b, t).is_one()))
}

fn greedy_column_basis(m: &IntMatrix) -> Vec<usize> {
    let mut chosen = Vec::new();
    let mut rank = 0;
    for j in 0..m.cols() {
        chosen.push(j);
        let r = rank_exact(&m.select_columns(&chosen));
        if r > rank {
            rank = r;
        } else {
            chosen.pop();
        }
    }
    chosen
}

/// `ℤ^S / im L_S`, where `S` is the complement of the torsion-free tree `tree`
/// and `L_S` the principal submatrix of `L_i` on `S`. Equal to `K_i(X)` when
/// `β_i(X) = 0`; otherwise `K_i(X) ⊕ ℤ^{β_i}`.
pub fn critical_group_reduced(
    x: &ChainComplex,
    i: usize,
    tree: &[usize],
) -> Result<AbelianGroupStructure> {
    check_critical_dim(x, i)?;
    let l = x.laplacian(i as isize, LaplacianKind::UpDown)?;
    let s = complement(x.num_cells(i as isize), tree)?;
    Ok(AbelianGroupStructure::cokernel(&l.submatrix(&s, &s)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LatticeRole {
    Cut,
    Flow,
}

/// A sublattice of `ℤ^ambient` with basis the columns of `basis`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeData {
    pub ambient: usize,
    pub basis: IntMatrix,
    pub role: LatticeRole,
}

impl LatticeData {
    pub fn rank(&self) -> usize {
        self.basis.cols()
    }
}

fn check_lattice_dim(x: &ChainComplex, k: usize) -> Result<()> {
    if k == 0 || k > x.dim() {
        return Err(Error::DimOutOfRange {
            k: k as isize,
            dim: x.dim(),
        });
    }
    Ok(())
}

/// `𝒞_k(X) = im_ℤ ∂*_k`.
pub fn cut_lattice(x: &ChainComplex, k: usize) -> Result<LatticeData> {
    check_lattice_dim(x, k)?;
    let b = x.boundary_ref(k);
    Ok(LatticeData {
        ambient: b.cols(),
        basis: hermite_basis(&b.transpose()),
        role: LatticeRole::Cut,
    })
}

/// `𝓕_k(X) = ker_ℤ ∂_k`.
pub fn flow_lattice(x: &ChainComplex, k: usize) -> Result<LatticeData> {
    check_lattice_dim(x, k)?;
    let b = x.boundary_ref(k);
    Ok(LatticeData {
        ambient: b.cols(),
        basis: kernel_basis(b),
        role: LatticeRole::Flow,
    })
}

/// `𝓛♯ / 𝓛`, the cokernel of the Gram matrix of a basis.
pub fn discriminant_group(lattice: &LatticeData) -> Result<AbelianGroupStructure> {
    let a = &lattice.basis;
    if rank_exact(a) < a.cols() {
        return Err(Error::DependentColumns);
    }
    Ok(AbelianGroupStructure::cokernel(&a.gram_columns()))
}

/// Characteristic vectors of the fundamental circuits and bonds of a
/// spanning tree, as primitive integer vectors on `X_d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FundamentalVectors {
    /// `(facet ∉ T, circuit vector)`; the facet's entry is positive.
    pub circuits: Vec<(usize, Vec<BigInt>)>,
    /// `(facet ∈ T, bond vector)`; the facet's entry is positive.
    pub bonds: Vec<(usize, Vec<BigInt>)>,
}

impl FundamentalVectors {
    pub fn circuit_matrix(&self, ambient: usize) -> IntMatrix {
        columns(ambient, self.circuits.iter().map(|(_, v)| v))
    }

    pub fn bond_matrix(&self, ambient: usize) -> IntMatrix {
        columns(ambient, self.bonds.iter().map(|(_, v)| v))
    }
}

fn columns<'a>(rows: usize, cols: impl Iterator<Item = &'a Vec<BigInt>>) -> IntMatrix {
    let cols: Vec<&Vec<BigInt>> = cols.collect();
    IntMatrix::from_fn(rows, cols.len(), |i, j| cols[j][i].clone())
}

/// Scales a rational vector to a primitive integer vector with `v[pivot] > 0`.
fn primitive(v: &[BigRational], pivot: usize) -> Vec<BigInt> {
    let lcm = v.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let ints: Vec<BigInt> = v.iter().map(|q| (q * &lcm).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, a| acc.gcd(a));
    let sign = if ints[pivot].is_negative() { -BigInt::one() } else { BigInt::one() };
    ints.into_iter().map(|a| a / &g * &sign).collect()
}

/// Fundamental circuits and bonds of a spanning tree `tree ⊆ X_d`.
pub fn fundamental_vectors(x: &ChainComplex, tree: &[usize]) -> Result<FundamentalVectors> {
    if !is_spanning_tree(x, tree)? {
        return Err(Error::InvalidSelection("facets are not a spanning tree".into()));
    }
    let d = x.dim();
    let m = x.boundary_ref(d);
    let n = m.cols();
    let rest = complement(n, tree)?;
    let rows = greedy_column_basis(&m.select_columns(tree).transpose());
    let square = m.submatrix(&rows, tree).to_rat();

    let mut circuits = Vec::with_capacity(rest.len());
    let rhs = m.submatrix(&rows, &rest).to_rat();
    let coeffs = solve_rat(&square, &rhs)?;
    for (c, &phi) in rest.iter().enumerate() {
        let mut v = vec![BigRational::zero(); n];
        v[phi] = BigRational::one();
        for (t, &tau) in tree.iter().enumerate() {
            v[tau] = -coeffs.get(t, c).clone();
        }
        circuits.push((phi, primitive(&v, phi)));
    }

    let mut bonds = Vec::with_capacity(tree.len());
    let inv_t = solve_rat(&square.transpose(), &IntMatrix::identity(tree.len()).to_rat())?;
    let full = m.select_rows(&rows).to_rat().transpose();
    let cuts = &full * &inv_t;
    for (t, &sigma) in tree.iter().enumerate() {
        let v: Vec<BigRational> = (0..n).map(|j| cuts.get(j, t).clone()).collect();
        bonds.push((sigma, primitive(&v, sigma)));
    }
    Ok(FundamentalVectors { circuits, bonds })
}

/// Orders of the groups in the two exact sequences relating the critical
/// group, the cut and flow lattices, and `E = Tor H_{d−1}(X)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceReport {
    pub critical: BigInt,
    pub cut_discriminant: BigInt,
    pub flow_discriminant: BigInt,
    pub quotient: BigInt,
    pub error_term: BigInt,
    /// `|ℤⁿ/(𝒞⊕𝓕)| / |E|`, the order the second sequence forces on the
    /// cocritical group.
    pub cocritical: BigRational,
}

impl SequenceReport {
    /// `|K| = |ℤⁿ/(𝒞⊕𝓕)|·|E|`.
    pub fn first_sequence_holds(&self) -> bool {
        self.critical == &self.quotient * &self.error_term
    }

    /// `|ℤⁿ/(𝒞⊕𝓕)| = |E|·|𝓕♯/𝓕|`.
    pub fn second_sequence_holds(&self) -> bool {
        self.quotient == &self.error_term * &self.flow_discriminant
    }

    /// `|K| = |𝒞♯/𝒞|`.
    pub fn cut_matches_critical(&self) -> bool {
        self.critical == self.cut_discriminant
    }

    pub fn holds(&self) -> bool {
        self.first_sequence_holds() && self.second_sequence_holds() && self.cut_matches_critical()
    }

    /// All five orders agree; expected exactly when `E` is trivial.
    pub fn all_equal(&self) -> bool {
        let k = &self.critical;
        [&self.cut_discriminant, &self.flow_discriminant, &self.quotient].iter().all(|o| *o == k)
            && self.cocritical == BigRational::from_integer(k.clone())
    }

    pub fn serialize(&self) -> String {
        format!(
            "critical {}\ncut_discriminant {}\nflow_discriminant {}\nquotient {}\nerror_term {}\ncocritical {}\nholds {}\n",
            self.critical,
            self.cut_discriminant,
            self.flow_discriminant,
            self.quotient,
            self.error_term,
            self.cocritical,
            self.holds()
        )
    }
}

fn finite(g: AbelianGroupStructure, what: &str) -> Result<BigInt> {
    g.order()
        .ok_or_else(|| Error::Hypothesis(format!("{what} is infinite")))
}

/// Group orders in dimension `d = dim X`, with `K = K_{d−1}(X)`.
pub fn sequence_order_check(x: &ChainComplex) -> Result<SequenceReport> {
    let d = x.dim();
    check_lattice_dim(x, d)?;
    let cut = cut_lattice(x, d)?;
    let flow = flow_lattice(x, d)?;
    let critical = finite(critical_group(x, d - 1)?, "critical group")?;
    let cut_discriminant = finite(discriminant_group(&cut)?, "cut discriminant group")?;
    let flow_discriminant = finite(discriminant_group(&flow)?, "flow discriminant group")?;
    let both = cut.basis.hcat(&flow.basis)?;
    let quotient = det_exact(&both)?.abs();
    if quotient.is_zero() {
        return Err(Error::Hypothesis("cut and flow lattices do not span".into()));
    }
    let error_term = torsion(x, d as isize - 1);
    let cocritical = BigRational::new(quotient.clone(), error_term.clone());
    Ok(SequenceReport {
        critical,
        cut_discriminant,
        flow_discriminant,
        quotient,
        error_term,
        cocritical,
    })
}
