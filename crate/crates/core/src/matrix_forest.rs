//! Independent Laplacian formulas for torsion-weighted forest counts.
//!
//! Every function computes `τ_d(X)` or `τ_d(X; w)` for the top dimension `d`
//! of its input; pass a skeleton to count lower-dimensional forests. Weights
//! are read on top cells only, except for the algebraic weighting, which also
//! uses every lower-dimensional cell.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::census::{cobases, lyons_hprime};
use crate::complex::{complement, ChainComplex, LaplacianKind, WeightAssignment};
use crate::error::{Error, Result};
use crate::homology::{betti, column_torsion, lyons_tprime, relative_homology_torsion, torsion};
use crate::linalg::{
    char_poly_rat, det_rat, hermite_basis, pseudodeterminant_rat, rank_exact, CharPoly, RatMatrix,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Reduced,
    ReducedAcyclic,
    Pseudodet,
    Alternating,
    Covolume,
    Lyons,
    LyonsSpectral,
    AlgebraicWeighted,
    WeightedAlternating,
    RootedPoly,
    Graph,
}

impl Method {
    pub const ALL: [Method; 11] = [
        Method::Reduced,
        Method::ReducedAcyclic,
        Method::Pseudodet,
        Method::Alternating,
        Method::Covolume,
        Method::Lyons,
        Method::LyonsSpectral,
        Method::AlgebraicWeighted,
        Method::WeightedAlternating,
        Method::RootedPoly,
        Method::Graph,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Method::Reduced => "reduced",
            Method::ReducedAcyclic => "reduced-acyclic",
            Method::Pseudodet => "pseudodet",
            Method::Alternating => "alternating",
            Method::Covolume => "covolume",
            Method::Lyons => "lyons",
            Method::LyonsSpectral => "lyons-spectral",
            Method::AlgebraicWeighted => "algebraic-weighted",
            Method::WeightedAlternating => "weighted-alternating",
            Method::RootedPoly => "rooted-poly",
            Method::Graph => "graph",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| Error::Unknown(format!("method {s}")))
    }
}

/// A forest count together with the correction factors and determinants
/// that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TauReport {
    pub method: Method,
    pub value: BigRational,
    pub corrections: Vec<(String, BigRational)>,
    pub determinants: Vec<(String, BigRational)>,
}

impl TauReport {
    fn new(method: Method) -> Self {
        Self {
            method,
            value: BigRational::zero(),
            corrections: Vec::new(),
            determinants: Vec::new(),
        }
    }

    fn correction(mut self, name: impl Into<String>, v: impl Into<BigRational>) -> Self {
        self.corrections.push((name.into(), v.into()));
        self
    }

    fn determinant(mut self, name: impl Into<String>, v: impl Into<BigRational>) -> Self {
        self.determinants.push((name.into(), v.into()));
        self
    }

    fn value(mut self, v: BigRational) -> Self {
        self.value = v;
        self
    }

    /// The value as an integer, if it is one.
    pub fn integer(&self) -> Option<BigInt> {
        self.value.is_integer().then(|| self.value.to_integer())
    }

    /// Text record: `method`, `value`, then one line per correction factor
    /// and per determinant.
    pub fn serialize(&self) -> String {
        let mut out = format!("method {}\nvalue {}\n", self.method, self.value);
        for (name, v) in &self.corrections {
            out.push_str(&format!("correction {name} {v}\n"));
        }
        for (name, v) in &self.determinants {
            out.push_str(&format!("determinant {name} {v}\n"));
        }
        out
    }
}

fn int(v: BigInt) -> BigRational {
    BigRational::from_integer(v)
}

fn sq(v: &BigInt) -> BigRational {
    int(v * v)
}

fn top_dim(x: &ChainComplex) -> Result<usize> {
    match x.dim() {
        0 => Err(Error::DimOutOfRange { k: 0, dim: 0 }),
        d => Ok(d),
    }
}

/// `∂_d D_d ∂*_d` on the `X_{d−1}`-indexed space; unit weights when `w` is
/// absent.
fn top_laplacian(x: &ChainComplex, w: Option<&WeightAssignment>) -> Result<RatMatrix> {
    let d = top_dim(x)?;
    match w {
        Some(w) => x.weighted_laplacian_comb(d, w),
        None => Ok(x.laplacian(d as isize - 1, LaplacianKind::UpDown)?.to_rat()),
    }
}

fn principal_minor(l: &RatMatrix, s: &[usize]) -> Result<BigRational> {
    det_rat(&l.submatrix(s, s))
}

fn require_acyclic(x: &ChainComplex, dims: &[isize]) -> Result<()> {
    for &k in dims {
        let b = betti(x, k);
        if b != 0 {
            return Err(Error::Hypothesis(format!("beta_{k} = {b}, need 0")));
        }
    }
    Ok(())
}

/// Complement of the greedy lexicographic row basis of `∂_d`.
pub fn default_root(x: &ChainComplex) -> Result<Vec<usize>> {
    let d = top_dim(x)?;
    let top = x.boundary_ref(d);
    let mut chosen: Vec<usize> = Vec::new();
    let mut rank = 0;
    for i in 0..top.rows() {
        chosen.push(i);
        let r = rank_exact(&top.select_rows(&chosen));
        if r > rank {
            rank = r;
        } else {
            chosen.pop();
        }
    }
    complement(top.rows(), &chosen)
}

/// Greedy lexicographic column basis of `∂_{d−1}`: a maximal `(d−1)`-forest.
pub fn default_forest_root(x: &ChainComplex) -> Result<Vec<usize>> {
    let d = top_dim(x)?;
    let below = x.boundary(d - 1)?;
    let mut chosen: Vec<usize> = Vec::new();
    for j in 0..below.cols() {
        chosen.push(j);
        if rank_exact(&below.select_columns(&chosen)) < chosen.len() {
            chosen.pop();
        }
    }
    Ok(chosen)
}

/// `τ_d(X; w) = t_{d−1}(X)² / t_{d−1}(X, R)² · det L_S` for any root `R`.
pub fn tau_reduced(
    x: &ChainComplex,
    root: &[usize],
    w: Option<&WeightAssignment>,
) -> Result<TauReport> {
    let d = top_dim(x)?;
    let s = complement(x.num_cells(d as isize - 1), root)?;
    let rank = rank_exact(x.boundary_ref(d));
    if s.len() != rank || rank_exact(&x.boundary_ref(d).select_rows(&s)) != rank {
        return Err(Error::InvalidSelection(
            "root complement is not a row basis of the top boundary".into(),
        ));
    }
    let tx = torsion(x, d as isize - 1);
    let tr = relative_homology_torsion(x, root)?;
    let det = principal_minor(&top_laplacian(x, w)?, &s)?;
    let value = sq(&tx) / sq(&tr) * &det;
    Ok(TauReport::new(Method::Reduced)
        .correction("t_top-1(X)", int(tx))
        .correction("t_top-1(X,R)", int(tr))
        .determinant("det L_S", det)
        .value(value))
}

/// `τ_d(X; w) = t_{d−2}(X)² / t_{d−2}(R)² · det L_S` for a maximal
/// `(d−1)`-forest `R`, assuming `β_{d−1} = β_{d−2} = 0`.
pub fn tau_reduced_acyclic(
    x: &ChainComplex,
    forest_root: &[usize],
    w: Option<&WeightAssignment>,
) -> Result<TauReport> {
    let d = top_dim(x)?;
    require_acyclic(x, &[d as isize - 1, d as isize - 2])?;
    let below = x.boundary(d - 1)?;
    let r = forest_root.len();
    if rank_exact(&below.select_columns(forest_root)) != r || r != rank_exact(&below) {
        return Err(Error::InvalidSelection(
            "root is not a maximal forest one dimension down".into(),
        ));
    }
    let s = complement(x.num_cells(d as isize - 1), forest_root)?;
    let tx = torsion(x, d as isize - 2);
    let tr = column_torsion(&below, forest_root);
    let det = principal_minor(&top_laplacian(x, w)?, &s)?;
    let value = sq(&tx) / sq(&tr) * &det;
    Ok(TauReport::new(Method::ReducedAcyclic)
        .correction("t_top-2(X)", int(tx))
        .correction("t_top-2(R)", int(tr))
        .determinant("det L_S", det)
        .value(value))
}

/// `τ_d(X; w) = t_{d−2}(X)² / τ_{d−1}(X) · 𝛌(L(X; w))`, assuming
/// `β_{d−1} = β_{d−2} = 0`. The unweighted `τ_{d−1}` comes from the same
/// formula one dimension down, grounded at `τ_0 = |X_0|`; where that level's
/// hypotheses fail it comes from the cobase expansion instead.
pub fn tau_pseudodet(x: &ChainComplex, w: Option<&WeightAssignment>) -> Result<TauReport> {
    let d = top_dim(x)?;
    require_acyclic(x, &[d as isize - 1, d as isize - 2])?;
    let lower = lower_tau(x, d - 1)?;
    let tx = torsion(x, d as isize - 2);
    let pdet = pseudodeterminant_rat(&top_laplacian(x, w)?)?;
    let value = sq(&tx) / int(lower.clone()) * &pdet;
    Ok(TauReport::new(Method::Pseudodet)
        .correction("t_top-2(X)", int(tx))
        .correction("tau_top-1(X)", int(lower))
        .determinant("pdet L", pdet)
        .value(value))
}

/// Unweighted `τ_k(X)`.
fn lower_tau(x: &ChainComplex, k: usize) -> Result<BigInt> {
    if k == 0 {
        return Ok(BigInt::from(x.num_cells(0)));
    }
    let sk = x.skeleton(k)?;
    let report = if betti(&sk, k as isize - 1) == 0 && betti(&sk, k as isize - 2) == 0 {
        tau_pseudodet(&sk, None)?
    } else {
        tau_lyons_spectral(&sk)?
    };
    report
        .integer()
        .ok_or_else(|| Error::Hypothesis("lower forest count is not an integer".into()))
}

/// `τ_d(X) = Π_{i=0}^{d} (t_{i−2}(X)² 𝛌(L_{i−1}))^{(−1)^{d−i}}`, assuming
/// `β_k = 0` for all `k < d`. On `ℤ`-acyclic complexes every torsion factor
/// is 1.
pub fn tau_alternating(x: &ChainComplex) -> Result<TauReport> {
    let d = top_dim(x)?;
    let below: Vec<isize> = (0..d as isize).collect();
    require_acyclic(x, &below)?;
    let mut report = TauReport::new(Method::Alternating);
    let mut value = BigRational::one();
    for i in 0..=d {
        let l = x.laplacian(i as isize - 1, LaplacianKind::UpDown)?.to_rat();
        let pdet = pseudodeterminant_rat(&l)?;
        let t = torsion(x, i as isize - 2);
        let factor = sq(&t) * &pdet;
        value = if (d - i) % 2 == 0 { value * factor } else { value / factor };
        report = report
            .correction(format!("t_{}(X)", i as isize - 2), int(t))
            .determinant(format!("pdet L_{}", i as isize - 1), pdet);
    }
    Ok(report.value(value))
}

/// `τ_d(X; w) = t_{d−1}(X)² / covol(B)² · det L_B` with `B = im_ℤ ∂_d`.
pub fn tau_covolume(x: &ChainComplex, w: Option<&WeightAssignment>) -> Result<TauReport> {
    let d = top_dim(x)?;
    let tx = torsion(x, d as isize - 1);
    let basis = hermite_basis(x.boundary_ref(d)).to_rat();
    let report = TauReport::new(Method::Covolume).correction("t_top-1(X)", int(tx.clone()));
    if basis.cols() == 0 {
        return Ok(report.value(BigRational::one()));
    }
    let l = top_laplacian(x, w)?;
    let gram = &basis.transpose() * &basis;
    let covol2 = det_rat(&gram)?;
    let action = crate::linalg::solve_rat(&gram, &(&basis.transpose() * &(&l * &basis)))?;
    let det = det_rat(&action)?;
    let value = sq(&tx) / &covol2 * &det;
    Ok(report
        .correction("covol(B)^2", covol2)
        .determinant("det L_B", det)
        .value(value))
}

/// `τ_d(X; w) = t_{d−2}(X)² / (t_{d−2}(R)² t'_{d−1}(S)²) · det L_S` for a
/// `(d−1)`-cobase `S` with root `R = X_{d−1} ∖ S`; no homological hypotheses.
pub fn tau_lyons(
    x: &ChainComplex,
    cobase: &[usize],
    w: Option<&WeightAssignment>,
) -> Result<TauReport> {
    let d = top_dim(x)?;
    let n = x.num_cells(d as isize - 1);
    let root = complement(n, cobase)?;
    let rank = rank_exact(x.boundary_ref(d));
    if cobase.len() != rank || rank_exact(&x.boundary_ref(d).select_rows(cobase)) != rank {
        return Err(Error::InvalidSelection("not a cobase".into()));
    }
    let tx = torsion(x, d as isize - 2);
    let tr = column_torsion(&x.boundary(d - 1)?, &root);
    let tp = lyons_tprime(x, d - 1, cobase)?;
    let det = principal_minor(&top_laplacian(x, w)?, cobase)?;
    let value = sq(&tx) / (sq(&tr) * sq(&tp)) * &det;
    Ok(TauReport::new(Method::Lyons)
        .correction("t_top-2(X)", int(tx))
        .correction("t_top-2(R)", int(tr))
        .correction("t'_top-1(S)", int(tp))
        .determinant("det L_S", det)
        .value(value))
}

/// The cobase expansion at the first cobase in lexicographic order.
pub fn tau_lyons_default(x: &ChainComplex) -> Result<TauReport> {
    tau(x, Method::Lyons, None)
}

/// `τ_d(X) = t_{d−2}(X)² / h'(X) · 𝛌(L)`, with `h'` the torsion-weighted
/// count of `(d−1)`-cobases.
pub fn tau_lyons_spectral(x: &ChainComplex) -> Result<TauReport> {
    let d = top_dim(x)?;
    let tx = torsion(x, d as isize - 2);
    let h = lyons_hprime(x, d - 1)?;
    let pdet = pseudodeterminant_rat(&top_laplacian(x, None)?)?;
    let value = sq(&tx) / int(h.clone()) * &pdet;
    Ok(TauReport::new(Method::LyonsSpectral)
        .correction("t_top-2(X)", int(tx))
        .correction("h'(X)", int(h))
        .determinant("pdet L", pdet)
        .value(value))
}

/// `τ_d(X; w) = t_{d−2}(X)² / τ_{d−1}(X; w) · 𝛌(L^alg_{d−1}) · Π_{σ∈X_{d−1}} w_σ`,
/// recursing down to `τ_0(X; w) = Σ_v w_v`. Needs weights on every cell and
/// `β_k = 0` for all `k < d`.
pub fn tau_algebraic_weighted(x: &ChainComplex, w: &WeightAssignment) -> Result<TauReport> {
    let d = top_dim(x)?;
    let below: Vec<isize> = (0..d as isize).collect();
    require_acyclic(x, &below)?;
    let mut report = TauReport::new(Method::AlgebraicWeighted);
    let mut tau = w.diagonal(x, 0)?.into_iter().sum::<BigRational>();
    for k in 1..=d {
        let pdet = pseudodeterminant_rat(&x.weighted_laplacian_alg_similar(k, w)?)?;
        let t = torsion(x, k as isize - 2);
        let face_weights = w.total_product(x, k - 1)?;
        tau = sq(&t) / &tau * &pdet * &face_weights;
        report = report
            .correction(format!("t_{}(X)", k as isize - 2), int(t))
            .determinant(format!("pdet Lalg_{}", k - 1), pdet);
    }
    Ok(report.value(tau))
}

/// `τ_d(X; w) = Π_j (t_{j−2}(X)² 𝛌(L^alg_{j−1}) Π_{σ∈X_{j−1}} w_σ)^{(−1)^{d−j}}`
/// for `j = 0..=d`, with `w_∅ = 1`. On `ℤ`-acyclic complexes every torsion
/// factor is 1 and this is the alternating product over faces and spectra.
pub fn tau_weighted_alternating(x: &ChainComplex, w: &WeightAssignment) -> Result<TauReport> {
    let d = top_dim(x)?;
    let below: Vec<isize> = (0..d as isize).collect();
    require_acyclic(x, &below)?;
    let mut report = TauReport::new(Method::WeightedAlternating);
    let mut value = BigRational::one();
    for j in 0..=d {
        let pdet = pseudodeterminant_rat(&x.weighted_laplacian_alg_similar(j, w)?)?;
        let faces = if j == 0 {
            BigRational::one()
        } else {
            w.total_product(x, j - 1)?
        };
        let t = torsion(x, j as isize - 2);
        let factor = sq(&t) * &pdet * &faces;
        value = if (d - j) % 2 == 0 { value * factor } else { value / factor };
        report = report
            .correction(format!("t_{}(X)", j as isize - 2), int(t))
            .determinant(format!("pdet Lalg_{}", j as isize - 1), pdet);
    }
    Ok(report.value(value))
}

/// `det(L + z·Id)` for `L = ∂_d ∂*_d` on the `X_{d−1}`-indexed space; the
/// coefficient of `z^j` counts rooted forests with `j` root faces, weighted
/// by squared relative torsion.
pub fn rooted_forest_polynomial(x: &ChainComplex) -> Result<CharPoly<BigInt>> {
    let d = top_dim(x)?;
    let l = x.laplacian(d as isize - 1, LaplacianKind::UpDown)?;
    Ok(crate::linalg::char_poly(&l)?.reflect())
}

/// Weighted rooted-forest polynomial `det(L(X; w) + z·Id)` over the rationals.
pub fn rooted_forest_polynomial_weighted(
    x: &ChainComplex,
    w: &WeightAssignment,
) -> Result<CharPoly<BigRational>> {
    Ok(char_poly_rat(&top_laplacian(x, Some(w))?)?.reflect())
}

/// Matrix-tree theorem for a 1-dimensional complex: the forest count from
/// both `𝛌(L_0) / (n_1⋯n_c)` and the reduced determinant with one vertex
/// removed per component, which must agree. The rooted-forest count `𝛌(L_0)`
/// is recorded as a correction entry.
pub fn graph_matrix_tree(g: &ChainComplex) -> Result<TauReport> {
    if g.dim() != 1 {
        return Err(Error::DimOutOfRange {
            k: 1,
            dim: g.dim(),
        });
    }
    let components = components(g);
    let l = g.laplacian(0, LaplacianKind::UpDown)?.to_rat();
    let pdet = pseudodeterminant_rat(&l)?;
    let sizes: BigInt = components.iter().map(|c| BigInt::from(c.len())).product();
    let spectral = &pdet / int(sizes.clone());
    let removed: Vec<usize> = components.iter().map(|c| c[0]).collect();
    let keep = complement(g.num_cells(0), &removed)?;
    let reduced = principal_minor(&l, &keep)?;
    if reduced != spectral {
        return Err(Error::Hypothesis(format!(
            "reduced determinant {reduced} differs from spectral count {spectral}"
        )));
    }
    Ok(TauReport::new(Method::Graph)
        .correction("component sizes", int(sizes))
        .correction("rooted forests", pdet.clone())
        .determinant("pdet L_0", pdet)
        .determinant("det reduced L_0", reduced.clone())
        .value(reduced))
}

/// Runs `method` with its default root or cobase. `RootedPoly` has no
/// single value and is rejected, as are weights the method cannot use.
pub fn tau(x: &ChainComplex, method: Method, w: Option<&WeightAssignment>) -> Result<TauReport> {
    let need = || Error::BadParameter(format!("method {method} needs weights"));
    let unweighted = |name: &str| match w {
        Some(_) => Err(Error::BadParameter(format!("method {name} is unweighted"))),
        None => Ok(()),
    };
    match method {
        Method::Reduced => tau_reduced(x, &default_root(x)?, w),
        Method::ReducedAcyclic => tau_reduced_acyclic(x, &default_forest_root(x)?, w),
        Method::Pseudodet => tau_pseudodet(x, w),
        Method::Alternating => {
            unweighted("alternating")?;
            tau_alternating(x)
        }
        Method::Covolume => tau_covolume(x, w),
        Method::Lyons => {
            let d = top_dim(x)?;
            let s = cobases(x, d - 1)?
                .into_iter()
                .next()
                .expect("a row basis always exists");
            tau_lyons(x, &s, w)
        }
        Method::LyonsSpectral => {
            unweighted("lyons-spectral")?;
            tau_lyons_spectral(x)
        }
        Method::AlgebraicWeighted => tau_algebraic_weighted(x, w.ok_or_else(need)?),
        Method::WeightedAlternating => tau_weighted_alternating(x, w.ok_or_else(need)?),
        Method::Graph => {
            unweighted("graph")?;
            graph_matrix_tree(x)
        }
        Method::RootedPoly => Err(Error::BadParameter(
            "rooted-poly yields a polynomial, not a single count".into(),
        )),
    }
}

/// Vertex sets of the connected components, each sorted, ordered by least
/// vertex.
fn components(g: &ChainComplex) -> Vec<Vec<usize>> {
    let n = g.num_cells(0);
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut v: usize) -> usize {
        while p[v] != v {
            p[v] = p[p[v]];
            v = p[v];
        }
        v
    }
    for e in 0..g.num_cells(1) {
        let ends = g.faces_of(1, e);
        for pair in ends.windows(2) {
            let (a, b) = (find(&mut parent, pair[0]), find(&mut parent, pair[1]));
            parent[a.max(b)] = a.min(b);
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut slot = vec![usize::MAX; n];
    for v in 0..n {
        let r = find(&mut parent, v);
        if slot[r] == usize::MAX {
            slot[r] = groups.len();
            groups.push(Vec::new());
        }
        groups[slot[r]].push(v);
    }
    groups
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::census::{enumerate_rooted_forests, rooted_forest_polynomial_bruteforce, tau_bruteforce};
    use crate::complex::SimplicialComplex;
    use crate::linalg::IntMatrix;

    fn complex(n: u32, facets: &[&[u32]]) -> ChainComplex {
        let f: Vec<Vec<u32>> = facets.iter().map(|f| f.to_vec()).collect();
        SimplicialComplex::from_facets(n, &f).unwrap().compile()
    }

    fn r(v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    fn bipyramid() -> ChainComplex {
        complex(
            5,
            &[&[1, 2, 3], &[1, 2, 4], &[1, 2, 5], &[1, 3, 4], &[1, 3, 5], &[2, 3, 4], &[2, 3, 5]],
        )
    }

    fn rp2_six() -> ChainComplex {
        complex(
            6,
            &[
                &[1, 2, 4], &[1, 2, 5], &[1, 3, 5], &[1, 3, 6], &[1, 4, 6],
                &[2, 3, 4], &[2, 3, 6], &[2, 5, 6], &[3, 4, 5], &[4, 5, 6],
            ],
        )
    }

    fn rp2_cell() -> ChainComplex {
        ChainComplex::new(
            vec![vec!["v".into()], vec!["e".into()], vec!["f".into()]],
            vec![IntMatrix::from_i64_rows(&[[0]]), IntMatrix::from_i64_rows(&[[2]])],
        )
        .unwrap()
    }

    fn moebius() -> ChainComplex {
        complex(5, &[&[1, 2, 3], &[2, 3, 4], &[3, 4, 5], &[1, 4, 5], &[1, 2, 5]])
    }

    fn k3() -> ChainComplex {
        complex(3, &[&[1, 2], &[1, 3], &[2, 3]])
    }

    #[test]
    fn bipyramid_star_root() {
        let x = bipyramid();
        let star = x.indices_of(1, &["12", "13", "14", "15"]).unwrap();
        let rep = tau_reduced_acyclic(&x, &star, None).unwrap();
        assert_eq!(rep.value, r(15));
        assert!(rep.corrections.iter().all(|(_, v)| v.is_one()));
        assert_eq!(tau_covolume(&x, None).unwrap().value, r(15));
        assert_eq!(tau_pseudodet(&x, None).unwrap().value, r(15));
        assert_eq!(tau_alternating(&x).unwrap().value, r(15));
        assert_eq!(tau_reduced(&x, &default_root(&x).unwrap(), None).unwrap().value, r(15));
    }

    #[test]
    fn triangle() {
        let x = k3();
        assert_eq!(tau_reduced_acyclic(&x, &[0], None).unwrap().value, r(3));
        assert_eq!(tau_pseudodet(&x, None).unwrap().value, r(3));
        assert_eq!(tau_covolume(&x, None).unwrap().value, r(3));
        assert_eq!(tau_lyons_spectral(&x).unwrap().value, r(3));
        let g = graph_matrix_tree(&x).unwrap();
        assert_eq!(g.value, r(3));
        assert!(g.corrections.contains(&("rooted forests".into(), r(9))));
    }

    #[test]
    fn projective_planes() {
        let x = rp2_six();
        assert_eq!(tau_pseudodet(&x, None).unwrap().value, r(4));
        let alt = tau_alternating(&x).unwrap();
        assert_eq!(alt.value, r(4));
        let pdets: Vec<BigRational> = alt.determinants.iter().map(|(_, v)| v.clone()).collect();
        assert_eq!(pdets, vec![r(6), r(7776), r(5184)]);
        let c = rp2_cell();
        let cov = tau_covolume(&c, None).unwrap();
        assert_eq!(cov.value, r(4));
        assert!(cov.corrections.contains(&("covol(B)^2".into(), r(4))));
        assert_eq!(tau_bruteforce(&c, 2).unwrap(), BigInt::from(4));
        assert_eq!(tau_reduced(&c, &[], None).unwrap().value, r(4));
    }

    #[test]
    fn moebius_needs_the_general_formulas() {
        let x = moebius();
        let brute = int(tau_bruteforce(&x, 2).unwrap());
        assert!(matches!(tau_pseudodet(&x, None), Err(Error::Hypothesis(_))));
        for s in cobases(&x, 1).unwrap() {
            assert_eq!(tau_lyons(&x, &s, None).unwrap().value, brute);
            let root = complement(x.num_cells(1), &s).unwrap();
            assert_eq!(tau_reduced(&x, &root, None).unwrap().value, brute);
        }
        assert_eq!(tau_lyons_spectral(&x).unwrap().value, brute);
        assert_eq!(tau_covolume(&x, None).unwrap().value, brute);
    }

    #[test]
    fn algebraic_weighting_on_triangle() {
        let x = k3();
        let vs = [2i64, 3, 5];
        let w = WeightAssignment::from_vertex_products(&x, &[0, 1], |v| r(vs[v as usize - 1])).unwrap();
        // v1 v2 v3 (v1 + v2 + v3)
        let expected = r(2 * 3 * 5 * 10);
        assert_eq!(tau_algebraic_weighted(&x, &w).unwrap().value, expected);
        assert_eq!(tau_weighted_alternating(&x, &w).unwrap().value, expected);
        assert_eq!(tau_pseudodet(&x, Some(&w)).unwrap().value, expected);
        let ones = WeightAssignment::uniform(&x, &[0, 1], BigRational::one());
        assert_eq!(tau_algebraic_weighted(&x, &ones).unwrap().value, r(3));
    }

    #[test]
    fn rooted_polynomials() {
        let x = k3();
        let p = rooted_forest_polynomial(&x).unwrap();
        assert_eq!(p.to_string(), "z^3 + 6z^2 + 9z");
        assert_eq!(p.coefficients, rooted_forest_polynomial_bruteforce(&x).unwrap());
        let lonely = ChainComplex::new(
            vec![vec!["1".into()], vec![]],
            vec![IntMatrix::zeros(1, 0)],
        )
        .unwrap();
        assert_eq!(rooted_forest_polynomial(&lonely).unwrap().to_string(), "z");
        assert_eq!(enumerate_rooted_forests(&lonely).unwrap().len(), 1);
    }

    #[test]
    fn disjoint_graphs() {
        let g = complex(5, &[&[1, 2], &[1, 3], &[2, 3], &[4, 5]]);
        let rep = graph_matrix_tree(&g).unwrap();
        assert_eq!(rep.value, r(3));
        assert!(rep.corrections.contains(&("rooted forests".into(), r(18))));
        assert_eq!(tau_bruteforce(&g, 1).unwrap(), BigInt::from(3));
    }

    #[test]
    fn report_text() {
        let rep = tau_pseudodet(&k3(), None).unwrap();
        assert_eq!(
            rep.serialize(),
            "method pseudodet\nvalue 3\ncorrection t_top-2(X) 1\ncorrection tau_top-1(X) 3\ndeterminant pdet L 9\n"
        );
        assert_eq!("lyons".parse::<Method>().unwrap(), Method::Lyons);
        assert!("nope".parse::<Method>().is_err());
    }
}
