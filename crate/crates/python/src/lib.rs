use celltree::census::{enumerate_forests_capped, DEFAULT_CAP};
use celltree::complex::io::{parse, write_cellular, write_simplicial};
use celltree::complex::{parse_rational, ChainComplex, SimplicialComplex, WeightAssignment};
use celltree::critical::{critical_group, sequence_order_check, AbelianGroupStructure};
use celltree::families::{self, Matroid, Partition};
use celltree::homology::{homology, is_r_apc, is_z_apc};
use celltree::matrix_forest::{self, rooted_forest_polynomial, rooted_forest_polynomial_weighted};
use celltree::sampling::WeightSampler;
use celltree::verify::{self, Suite, VerifyConfig, DEFAULT_SAMPLES, DEFAULT_SEED};
use celltree::Error;
use num_bigint::BigInt;
use num_rational::BigRational;
use pyo3::create_exception;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyString};

create_exception!(celltree, CapExceeded, PyRuntimeError);
create_exception!(celltree, HypothesisError, PyValueError);

fn err(e: Error) -> PyErr {
    match e {
        Error::CapExceeded { .. } => CapExceeded::new_err(e.to_string()),
        Error::Hypothesis(_) => HypothesisError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn fraction<'py>(py: Python<'py>, v: &BigRational) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?
        .getattr("Fraction")?
        .call1((v.numer().clone(), v.denom().clone()))
}

fn rational(v: &Bound<'_, PyAny>) -> PyResult<BigRational> {
    let text = v.str()?.to_string();
    parse_rational(&text).ok_or_else(|| PyValueError::new_err(format!("not a rational: {text}")))
}

/// Weights as weight-file text or a dict mapping `(dim, index)` to a number.
fn weights(w: Option<&Bound<'_, PyAny>>) -> PyResult<Option<WeightAssignment>> {
    let Some(w) = w else { return Ok(None) };
    if let Ok(text) = w.cast::<PyString>() {
        return WeightAssignment::parse(&text.to_string()).map(Some).map_err(err);
    }
    let dict = w.cast::<PyDict>()?;
    let mut out = WeightAssignment::new();
    for (key, value) in dict.iter() {
        let (dim, index): (usize, usize) = key.extract()?;
        out.set(dim, index, rational(&value)?).map_err(err)?;
    }
    Ok(Some(out))
}

/// Count of forests and its factors, as returned by `Complex.tau`.
#[pyclass(module = "celltree", frozen, get_all)]
struct TauReport {
    method: String,
    value: Py<PyAny>,
    corrections: Vec<(String, Py<PyAny>)>,
    determinants: Vec<(String, Py<PyAny>)>,
}

impl TauReport {
    fn new(py: Python<'_>, r: &matrix_forest::TauReport) -> PyResult<Self> {
        let pairs = |items: &[(String, BigRational)]| -> PyResult<Vec<(String, Py<PyAny>)>> {
            items
                .iter()
                .map(|(name, v)| Ok((name.clone(), fraction(py, v)?.unbind())))
                .collect()
        };
        Ok(Self {
            method: r.method.to_string(),
            value: fraction(py, &r.value)?.unbind(),
            corrections: pairs(&r.corrections)?,
            determinants: pairs(&r.determinants)?,
        })
    }
}

#[pymethods]
impl TauReport {
    fn __repr__(&self) -> String {
        format!("TauReport(method={:?}, value={})", self.method, self.value)
    }
}

/// Finitely generated abelian group `Z^free_rank + Z/d_1 + ... + Z/d_r`.
#[pyclass(module = "celltree", frozen, get_all)]
struct AbelianGroup {
    free_rank: usize,
    factors: Vec<BigInt>,
}

impl From<AbelianGroupStructure> for AbelianGroup {
    fn from(g: AbelianGroupStructure) -> Self {
        Self {
            free_rank: g.free_rank,
            factors: g.factors,
        }
    }
}

#[pymethods]
impl AbelianGroup {
    /// Order of the group, or `None` when it has a free part.
    fn order(&self) -> Option<BigInt> {
        (self.free_rank == 0).then(|| self.factors.iter().product())
    }

    fn __repr__(&self) -> String {
        let g = AbelianGroupStructure {
            factors: self.factors.clone(),
            free_rank: self.free_rank,
        };
        format!("AbelianGroup({g})")
    }
}

/// A finite cell complex with integer boundary maps.
#[pyclass(module = "celltree", frozen)]
struct Complex {
    inner: ChainComplex,
    text: String,
}

impl Complex {
    fn cellular(inner: ChainComplex) -> Self {
        let text = write_cellular(&inner);
        Self { inner, text }
    }

    fn simplicial(s: SimplicialComplex) -> Self {
        let text = write_simplicial(&s);
        Self {
            inner: s.compile(),
            text,
        }
    }
}

#[pymethods]
impl Complex {
    /// Parse the text complex format.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        let file = parse(text).map_err(err)?;
        Ok(Self {
            inner: file.to_chain_complex(),
            text: file.serialize(),
        })
    }

    #[staticmethod]
    fn load(path: std::path::PathBuf) -> PyResult<Self> {
        let text = std::fs::read_to_string(&path)?;
        Self::parse(&text)
    }

    /// Simplicial complex on vertices `1..=n` generated by `facets`.
    #[staticmethod]
    fn from_facets(n: u32, facets: Vec<Vec<u32>>) -> PyResult<Self> {
        let s = SimplicialComplex::from_facets(n, &facets).map_err(err)?;
        Ok(Self::simplicial(s))
    }

    #[staticmethod]
    fn simplex_skeleton(n: u32, d: usize) -> PyResult<Self> {
        Ok(Self::simplicial(families::simplex_skeleton(n, d).map_err(err)?))
    }

    #[staticmethod]
    fn named(name: &str) -> PyResult<Self> {
        Ok(match name {
            "bipyramid" => Self::simplicial(families::named::bipyramid()),
            "rp2_six_vertex" => Self::simplicial(families::named::rp2_six_vertex()),
            "annulus" => Self::simplicial(families::named::annulus()),
            "moebius" => Self::simplicial(families::named::moebius()),
            other => Self::cellular(families::named_complex(other).map_err(err)?),
        })
    }

    #[staticmethod]
    fn hypercube(n: usize) -> PyResult<Self> {
        Ok(Self::cellular(families::hypercube_complex(n).map_err(err)?))
    }

    #[staticmethod]
    fn colorful(sizes: Vec<u32>) -> PyResult<Self> {
        Ok(Self::simplicial(families::complete_colorful(&sizes).map_err(err)?))
    }

    #[staticmethod]
    fn shifted(generators: Vec<Vec<u32>>) -> PyResult<Self> {
        Ok(Self::simplicial(families::shifted_complex(&generators).map_err(err)?))
    }

    #[staticmethod]
    fn ferrers(parts: Vec<usize>) -> PyResult<Self> {
        let lambda = Partition::new(parts).map_err(err)?;
        Ok(Self::simplicial(families::ferrers_graph(&lambda).map_err(err)?))
    }

    #[staticmethod]
    fn uniform_matroid(rank: usize, size: usize) -> PyResult<Self> {
        let m = Matroid::uniform(rank, size).map_err(err)?;
        Ok(Self::simplicial(m.independence_complex().map_err(err)?))
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    fn num_cells(&self, k: usize) -> usize {
        self.inner.num_cells(k as isize)
    }

    fn labels(&self, k: usize) -> PyResult<Vec<String>> {
        if k > self.inner.dim() {
            return Err(err(Error::DimOutOfRange { k: k as isize, dim: self.inner.dim() }));
        }
        Ok(self.inner.labels(k).to_vec())
    }

    fn skeleton(&self, k: usize) -> PyResult<Self> {
        Ok(Self::cellular(self.inner.skeleton(k).map_err(err)?))
    }

    /// Boundary matrix of dimension `k` as a list of rows.
    fn boundary(&self, k: usize) -> PyResult<Vec<Vec<BigInt>>> {
        let m = self.inner.boundary(k).map_err(err)?;
        Ok((0..m.rows())
            .map(|i| (0..m.cols()).map(|j| m.get(i, j).clone()).collect())
            .collect())
    }

    /// `(betti, torsion factors)` of reduced homology in dimension `k`.
    fn homology(&self, k: usize) -> PyResult<(usize, Vec<BigInt>)> {
        let h = homology(&self.inner, k).map_err(err)?;
        Ok((h.betti, h.torsion_factors))
    }

    fn is_z_apc(&self) -> bool {
        is_z_apc(&self.inner)
    }

    fn is_r_apc(&self) -> bool {
        is_r_apc(&self.inner)
    }

    /// Torsion-weighted top-dimensional forest count by a Laplacian formula.
    #[pyo3(signature = (method = "reduced", weights = None))]
    fn tau(&self, py: Python<'_>, method: &str, weights: Option<&Bound<'_, PyAny>>) -> PyResult<TauReport> {
        let method = method.parse().map_err(err)?;
        let w = self::weights(weights)?;
        let report = py
            .detach(|| matrix_forest::tau(&self.inner, method, w.as_ref()))
            .map_err(err)?;
        TauReport::new(py, &report)
    }

    /// Brute-force count over every top-dimensional spanning forest.
    #[pyo3(signature = (weights = None, cap = DEFAULT_CAP))]
    fn tau_oracle<'py>(
        &self,
        py: Python<'py>,
        weights: Option<&Bound<'py, PyAny>>,
        cap: u64,
    ) -> PyResult<Bound<'py, PyAny>> {
        let w = self::weights(weights)?;
        let x = &self.inner;
        let value = py
            .detach(|| {
                let census = enumerate_forests_capped(x, x.dim(), cap)?;
                match &w {
                    Some(w) => census.weighted_tau(x, w),
                    None => Ok(BigRational::from_integer(census.tau())),
                }
            })
            .map_err(err)?;
        fraction(py, &value)
    }

    /// Spanning forests of dimension `k` as `(facet labels, torsion)` pairs.
    #[pyo3(signature = (k, cap = DEFAULT_CAP))]
    fn forests(&self, py: Python<'_>, k: usize, cap: u64) -> PyResult<Vec<(Vec<String>, BigInt)>> {
        let x = &self.inner;
        let census = py.detach(|| enumerate_forests_capped(x, k, cap)).map_err(err)?;
        Ok(census
            .forests
            .into_iter()
            .map(|(cells, t)| (cells.iter().map(|&c| x.label(k, c).to_string()).collect(), t))
            .collect())
    }

    /// Coefficients of `det(L + z)` from the constant term up.
    #[pyo3(signature = (weights = None))]
    fn rooted_polynomial(&self, py: Python<'_>, weights: Option<&Bound<'_, PyAny>>) -> PyResult<Vec<Py<PyAny>>> {
        match self::weights(weights)? {
            Some(w) => {
                let p = rooted_forest_polynomial_weighted(&self.inner, &w).map_err(err)?;
                p.coefficients.iter().map(|c| Ok(fraction(py, c)?.unbind())).collect()
            }
            None => {
                let p = rooted_forest_polynomial(&self.inner).map_err(err)?;
                p.coefficients
                    .into_iter()
                    .map(|c| Ok(c.into_pyobject(py)?.into_any().unbind()))
                    .collect()
            }
        }
    }

    fn critical_group(&self, i: usize) -> PyResult<AbelianGroup> {
        Ok(critical_group(&self.inner, i).map_err(err)?.into())
    }

    /// Whether the cut and flow sequences give `|K_i| = tau_{i+1}` in every dimension.
    fn critical_sequences_hold(&self) -> PyResult<bool> {
        Ok(sequence_order_check(&self.inner).map_err(err)?.holds())
    }

    /// Positive weights `p/q` with `1 <= p, q <= 20` on every cell.
    fn sample_weights(&self, seed: u64) -> PyResult<String> {
        let dims: Vec<usize> = (0..=self.inner.dim()).collect();
        let w = WeightSampler::new(seed).assignment(&self.inner, &dims).map_err(err)?;
        Ok(w.serialize())
    }

    fn to_text(&self) -> String {
        self.text.clone()
    }

    fn __repr__(&self) -> String {
        let counts: Vec<String> = (0..=self.inner.dim())
            .map(|k| self.inner.num_cells(k as isize).to_string())
            .collect();
        format!("Complex(dim={}, cells=[{}])", self.inner.dim(), counts.join(", "))
    }
}

/// Run verification suites; returns `(passed, report text)`.
#[pyfunction]
#[pyo3(signature = (suite = "all", seed = DEFAULT_SEED, cap = DEFAULT_CAP, samples = DEFAULT_SAMPLES))]
fn run_verify(py: Python<'_>, suite: &str, seed: u64, cap: u64, samples: usize) -> PyResult<(bool, String)> {
    let suites: Vec<Suite> = Suite::parse_selection(suite).map_err(err)?;
    let config = VerifyConfig { seed, cap, samples };
    let report = py.detach(|| verify::run(&suites, &config));
    Ok((report.passed(), report.render()))
}

#[pymodule(name = "celltree")]
fn celltree_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Complex>()?;
    m.add_class::<TauReport>()?;
    m.add_class::<AbelianGroup>()?;
    m.add_function(wrap_pyfunction!(run_verify, m)?)?;
    m.add("CapExceeded", m.py().get_type::<CapExceeded>())?;
    m.add("HypothesisError", m.py().get_type::<HypothesisError>())?;
    m.add("METHODS", matrix_forest::Method::ALL.map(|m| m.as_str()).to_vec())?;
    Ok(())
}
