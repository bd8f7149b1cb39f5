//! The verification matrix: closed forms and counting formulas checked
//! against independent computations on a fixed set of instances.
//!
//! Each suite is a list of jobs, one per instance. Jobs run in parallel and
//! the entries are then ordered by suite and instance name, so the rendered
//! report depends only on the configuration.

use std::fmt::{self, Display};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use rayon::prelude::*;

use crate::census::{enumerate_forests_capped, rooted_forest_polynomial_bruteforce, DEFAULT_CAP};
use crate::complex::{dual_chain_complex, ChainComplex, LaplacianKind, WeightAssignment};
use crate::critical::{
    critical_group, critical_group_reduced, critical_group_via_cycles, sequence_order_check,
    torsion_free_tree,
};
use crate::error::{Error, Result};
use crate::families::*;
use crate::homology::{betti, is_z_apc, torsion};
use crate::linalg::{binomial, char_poly};
use crate::matrix_forest::{
    default_forest_root, default_root, graph_matrix_tree, rooted_forest_polynomial,
    tau_algebraic_weighted, tau_alternating, tau_covolume, tau_lyons_default, tau_lyons_spectral,
    tau_pseudodet, tau_reduced, tau_reduced_acyclic, tau_weighted_alternating, TauReport,
};
use crate::sampling::{WeightSampler, GENERATOR};

pub const DEFAULT_SEED: u64 = 1;
pub const DEFAULT_SAMPLES: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Families,
    Theorems,
    Critical,
    Duality,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Families, Suite::Theorems, Suite::Critical, Suite::Duality];

    pub fn as_str(self) -> &'static str {
        match self {
            Suite::Families => "families",
            Suite::Theorems => "theorems",
            Suite::Critical => "critical",
            Suite::Duality => "duality",
        }
    }

    /// A suite name, or `all`.
    pub fn parse_selection(s: &str) -> Result<Vec<Suite>> {
        if s == "all" {
            return Ok(Suite::ALL.to_vec());
        }
        Ok(vec![s.parse()?])
    }
}

impl Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.as_str() == s)
            .ok_or_else(|| Error::Unknown(format!("suite {s}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Pass,
    Fail,
    /// Enumeration cap exceeded.
    Skipped,
    /// A hypothesis of the method does not hold on the instance.
    NotApplicable,
    /// Context row, not a comparison.
    Info,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Skipped => "skipped",
            Status::NotApplicable => "n/a",
            Status::Info => "info",
        }
    }
}

impl Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Entry {
    pub suite: Suite,
    pub instance: String,
    pub method: String,
    pub value: String,
    pub expected: String,
    pub status: Status,
    pub note: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    pub seed: u64,
    pub cap: u64,
    pub samples: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            seed: DEFAULT_SEED,
            cap: DEFAULT_CAP,
            samples: DEFAULT_SAMPLES,
        }
    }
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub config: VerifyConfig,
    pub suites: Vec<Suite>,
    pub entries: Vec<Entry>,
}

impl VerifyReport {
    pub fn count(&self, status: Status) -> usize {
        self.entries.iter().filter(|e| e.status == status).count()
    }

    pub fn passed(&self) -> bool {
        self.count(Status::Fail) == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &Entry> {
        self.entries.iter().filter(|e| e.status == Status::Fail)
    }

    pub fn find(&self, instance: &str, method: &str) -> Option<&Entry> {
        self.entries
            .iter()
            .find(|e| e.instance == instance && e.method == method)
    }

    /// Header with the configuration, one tab-separated row per entry, then
    /// a summary line.
    pub fn render(&self) -> String {
        let names: Vec<&str> = self.suites.iter().map(|s| s.as_str()).collect();
        let mut out = format!(
            "# verify suites={} generator={GENERATOR} seed={} samples={} cap={}\n",
            names.join(","),
            self.config.seed,
            self.config.samples,
            self.config.cap
        );
        out.push_str("suite\tinstance\tmethod\tstatus\tvalue\texpected\tnote\n");
        for e in &self.entries {
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
                e.suite, e.instance, e.method, e.status, e.value, e.expected, e.note
            ));
        }
        out.push_str(&format!(
            "# pass {} fail {} skipped {} n/a {}\n",
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Skipped),
            self.count(Status::NotApplicable)
        ));
        out
    }
}

pub fn run(suites: &[Suite], config: &VerifyConfig) -> VerifyReport {
    let mut jobs: Vec<Job> = Vec::new();
    for &s in suites {
        jobs.extend(match s {
            Suite::Families => families_jobs(),
            Suite::Theorems => theorems_jobs(),
            Suite::Critical => critical_jobs(),
            Suite::Duality => duality_jobs(),
        });
    }
    let mut entries: Vec<Entry> = jobs
        .par_iter()
        .map(|job| {
            let mut c = Check::new(job.suite, job.instance.clone(), config);
            if let Err(e) = (job.run)(&mut c) {
                c.error("setup", e);
            }
            c.entries
        })
        .flatten()
        .collect();
    entries.sort_by(|a, b| (a.suite, &a.instance).cmp(&(b.suite, &b.instance)));
    VerifyReport {
        config: *config,
        suites: suites.to_vec(),
        entries,
    }
}

type JobFn = Box<dyn Fn(&mut Check) -> Result<()> + Send + Sync>;

struct Job {
    suite: Suite,
    instance: String,
    run: JobFn,
}

fn job(
    suite: Suite,
    instance: impl Into<String>,
    run: impl Fn(&mut Check) -> Result<()> + Send + Sync + 'static,
) -> Job {
    Job {
        suite,
        instance: instance.into(),
        run: Box::new(run),
    }
}

/// Entry collector for one instance.
struct Check {
    suite: Suite,
    instance: String,
    cap: u64,
    samples: usize,
    sampler: WeightSampler,
    entries: Vec<Entry>,
}

fn name_hash(s: &str) -> u64 {
    s.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| {
        (h ^ b as u64).wrapping_mul(0x0100_0000_01b3)
    })
}

fn error_status(e: &Error) -> Status {
    match e {
        Error::CapExceeded { .. } => Status::Skipped,
        Error::Hypothesis(_) => Status::NotApplicable,
        _ => Status::Fail,
    }
}

fn report_note(r: &TauReport) -> String {
    r.corrections
        .iter()
        .chain(&r.determinants)
        .map(|(name, v)| format!("{name}={v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

impl Check {
    fn new(suite: Suite, instance: String, config: &VerifyConfig) -> Self {
        let sampler = WeightSampler::new(config.seed ^ name_hash(&instance));
        Self {
            suite,
            instance,
            cap: config.cap,
            samples: config.samples,
            sampler,
            entries: Vec::new(),
        }
    }

    fn push(&mut self, method: &str, value: String, expected: String, status: Status, note: String) {
        self.entries.push(Entry {
            suite: self.suite,
            instance: self.instance.clone(),
            method: method.to_string(),
            value,
            expected,
            status,
            note,
        });
    }

    fn info(&mut self, method: &str, value: impl Display) {
        self.push(method, value.to_string(), String::new(), Status::Info, String::new());
    }

    fn error(&mut self, method: &str, e: Error) {
        let status = error_status(&e);
        self.push(method, String::new(), String::new(), status, e.to_string());
    }

    /// Records `value` against `expected`; an error in either is recorded
    /// with its status instead.
    fn compare<V: Display, E: Display>(
        &mut self,
        method: &str,
        value: Result<V>,
        expected: &Result<E>,
        note: String,
    ) {
        match (value, expected) {
            (Ok(v), Ok(x)) => {
                let (v, x) = (v.to_string(), x.to_string());
                let status = if v == x { Status::Pass } else { Status::Fail };
                self.push(method, v, x, status, note);
            }
            (Err(e), _) => self.error(method, e),
            (Ok(v), Err(e)) => {
                let status = error_status(e);
                self.push(method, v.to_string(), String::new(), status, format!("expected: {e}"));
            }
        }
    }

    fn tau<E: Display>(&mut self, method: &str, r: Result<TauReport>, expected: &Result<E>) {
        match r {
            Ok(r) => {
                let note = report_note(&r);
                self.compare(method, Ok(r.value), expected, note);
            }
            Err(e) => self.error(method, e),
        }
    }

    fn flag(&mut self, method: &str, ok: Result<bool>, value: String) {
        match ok {
            Ok(true) => self.push(method, value, "holds".into(), Status::Pass, String::new()),
            Ok(false) => self.push(method, value, "holds".into(), Status::Fail, String::new()),
            Err(e) => self.error(method, e),
        }
    }

    fn oracle(&self, x: &ChainComplex, k: usize) -> Result<BigInt> {
        Ok(enumerate_forests_capped(x, k, self.cap)?.tau())
    }

    fn weighted_oracle(&self, x: &ChainComplex, k: usize, w: &WeightAssignment) -> Result<BigRational> {
        enumerate_forests_capped(x, k, self.cap)?.weighted_tau(x, w)
    }

    /// Betti numbers and torsion orders below the top dimension.
    fn hypotheses(&mut self, x: &ChainComplex) {
        let d = x.dim() as isize;
        let b: Vec<String> = (0..=d).map(|k| betti(x, k).to_string()).collect();
        let t: Vec<String> = (0..d).map(|k| torsion(x, k).to_string()).collect();
        let apc = if is_z_apc(x) { "yes" } else { "no" };
        self.info(
            "hypotheses",
            format!("betti=[{}] torsion=[{}] z-apc={apc}", b.join(","), t.join(",")),
        );
    }

    /// Reduced, pseudodeterminant and alternating formulas and the oracle
    /// against a closed form.
    fn standard(&mut self, x: &ChainComplex, expected: &Result<BigInt>, alternating: bool) {
        let root = default_root(x);
        self.tau("reduced", root.and_then(|r| tau_reduced(x, &r, None)), expected);
        self.tau("pseudodet", tau_pseudodet(x, None), expected);
        if alternating {
            self.tau("alternating", tau_alternating(x), expected);
        }
        let o = self.oracle(x, x.dim());
        self.compare("oracle", o, expected, String::new());
    }
}

fn int(v: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(v.into())
}

fn vertex_weights(x: &ChainComplex, k: usize, v: &[BigRational]) -> Result<WeightAssignment> {
    WeightAssignment::from_vertex_products(x, &[k], |u| v[u as usize - 1].clone())
}

/// Nonzero eigenvalues with multiplicities, ascending, as `value^mult`.
fn spectrum_string(roots: &[(BigInt, usize)]) -> String {
    let parts: Vec<String> = roots
        .iter()
        .filter(|(r, m)| *m > 0 && *r != BigInt::from(0))
        .map(|(r, m)| format!("{r}^{m}"))
        .collect();
    parts.join(" ")
}

fn ud_spectrum(x: &ChainComplex, k: usize) -> Result<String> {
    let p = char_poly(&x.laplacian(k as isize, LaplacianKind::UpDown)?)?;
    p.nonnegative_integer_roots()
        .map(|r| spectrum_string(&r))
        .ok_or_else(|| Error::Hypothesis("spectrum is not integral".into()))
}

fn shifted_generators() -> Vec<Vec<Vec<u32>>> {
    vec![
        vec![vec![2, 5], vec![3, 4]],
        vec![vec![2, 3, 5]],
        vec![vec![2, 3, 6], vec![1, 4, 5]],
        vec![vec![1, 4, 6], vec![2, 3, 6], vec![2, 4, 5]],
    ]
}

fn shifted_name(g: &[Vec<u32>]) -> String {
    let gs: Vec<String> = g
        .iter()
        .map(|f| f.iter().map(u32::to_string).collect::<String>())
        .collect();
    format!("shifted <{}>", gs.join(","))
}

fn ferrers_partitions() -> Vec<Vec<usize>> {
    vec![vec![2, 1], vec![3, 2, 1], vec![3, 3, 1], vec![4, 2, 2, 1]]
}

fn matroid_instances() -> Vec<(&'static str, Matroid)> {
    vec![
        ("K4", Matroid::graphic(4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]).expect("graph")),
        ("C4+chord", Matroid::graphic(4, &[(1, 2), (2, 3), (3, 4), (1, 4), (1, 3)]).expect("graph")),
        ("U2,4", Matroid::uniform(2, 4).expect("uniform")),
    ]
}

fn sizes_name(sizes: &[u32]) -> String {
    sizes.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

fn families_jobs() -> Vec<Job> {
    let s = Suite::Families;
    let mut jobs = Vec::new();
    for (n, d) in [(3, 1), (4, 1), (5, 1), (6, 1), (7, 1), (4, 2), (5, 2), (6, 2), (7, 2), (5, 3)] {
        jobs.push(job(s, format!("simplex {n},{d}"), move |c| {
            let x = simplex_skeleton(n, d)?.compile();
            let expected = Ok(kalai_count(n, d));
            c.standard(&x, &expected, true);
            if n <= 7 && d <= 2 {
                let faces = x.simplices(d - 1).expect("simplicial");
                let keep: Vec<usize> = (0..faces.len()).filter(|&i| !faces[i].contains(&1)).collect();
                let reduced = x.boundary_ref(d).select_rows(&keep).gram_rows();
                let value = char_poly(&reduced).and_then(|p| {
                    p.nonnegative_integer_roots()
                        .map(|r| spectrum_string(&r))
                        .ok_or_else(|| Error::Hypothesis("spectrum is not integral".into()))
                });
                let ones = binomial(n as u64 - 2, d as u64 - 1);
                let tops = binomial(n as u64 - 2, d as u64);
                let expected = Ok(spectrum_string(&[
                    (BigInt::one(), ones.try_into().expect("small")),
                    (BigInt::from(n), tops.try_into().expect("small")),
                ]));
                c.compare("reduced-spectrum", value, &expected, String::new());
            }
            Ok(())
        }));
    }
    for m in 1..=4u32 {
        for n in m..=4u32 {
            if m * n == 1 {
                continue;
            }
            jobs.push(job(s, format!("bipartite {m},{n}"), move |c| {
                let x = complete_colorful(&[m, n])?.compile();
                let expected = Ok(BigInt::from(n).pow(m - 1) * BigInt::from(m).pow(n - 1));
                c.compare("adin-bolker", Ok(adin_bolker_count(&[m, n])), &expected, String::new());
                c.tau("graph", graph_matrix_tree(&x), &expected);
                c.standard(&x, &expected, false);
                Ok(())
            }));
        }
    }
    for sizes in [vec![2u32, 2, 2], vec![2, 2, 3], vec![3, 3], vec![1, 1, 1, 1], vec![2, 2, 2, 2]] {
        for k in 1..sizes.len() {
            let name = format!("colorful {} k={k}", sizes_name(&sizes));
            let sizes = sizes.clone();
            jobs.push(job(s, name, move |c| {
                let x = complete_colorful(&sizes)?.compile().skeleton(k)?;
                let expected = adin_count(k, &sizes);
                c.standard(&x, &expected, true);
                if sizes.iter().all(|&n| n == 1) {
                    let kalai = Ok(kalai_count(sizes.len() as u32, k));
                    c.compare("kalai-specialization", kalai, &expected, String::new());
                }
                if sizes.iter().all(|&n| n == 2) {
                    let cross = Ok(cross_polytope_count(k, sizes.len()));
                    c.compare("cross-polytope", cross, &expected, String::new());
                }
                if k + 1 == sizes.len() {
                    c.compare("adin-bolker", Ok(adin_bolker_count(&sizes)), &expected, String::new());
                }
                Ok(())
            }));
        }
    }
    for n in 1..=4usize {
        jobs.push(job(s, format!("hypercube {n}"), move |c| {
            let q = hypercube_complex(n)?;
            for k in 1..=n {
                let x = q.skeleton(k)?;
                let expected = hypercube_tau(k, n);
                c.tau(&format!("alternating k={k}"), tau_alternating(&x), &expected);
                if k == 1 {
                    c.compare("edge-formula k=1", Ok(hypercube_tau1(n)), &expected, String::new());
                }
                if n <= 3 || k >= 3 {
                    let o = c.oracle(&x, k);
                    c.compare(&format!("oracle k={k}"), o, &expected, String::new());
                }
            }
            for k in 0..n {
                let expected: Vec<(BigInt, usize)> = (k + 1..=n)
                    .map(|j| {
                        let m = binomial(j as u64 - 1, k as u64) * binomial(n as u64, j as u64);
                        (BigInt::from(2 * j), m.try_into().expect("small"))
                    })
                    .collect();
                let expected = Ok(spectrum_string(&expected));
                c.compare(&format!("ud-spectrum k={k}"), ud_spectrum(&q, k), &expected, String::new());
            }
            Ok(())
        }));
    }
    for g in shifted_generators() {
        jobs.push(job(s, shifted_name(&g), move |c| {
            let delta = shifted_complex(&g)?;
            let x = delta.compile();
            let d = x.dim();
            let ones = vec![BigRational::one(); delta.vertices().len()];
            let expected = shifted_tau_coarse(&delta, &ones).map(|v| v.to_integer());
            c.standard(&x, &expected, false);
            let degrees: Vec<usize> = facet_degrees(&delta).into_iter().filter(|&g| g > 0).collect();
            let mut conj = Partition::new(degrees)?.conjugate().parts().to_vec();
            conj.reverse();
            let mut parts: Vec<(BigInt, usize)> = Vec::new();
            for p in conj {
                match parts.last_mut() {
                    Some((v, m)) if *v == BigInt::from(p) => *m += 1,
                    _ => parts.push((BigInt::from(p), 1)),
                }
            }
            let expected = Ok(spectrum_string(&parts));
            c.compare("conjugate-degree spectrum", ud_spectrum(&x, d - 1), &expected, String::new());
            Ok(())
        }));
    }
    for parts in ferrers_partitions() {
        let name = format!("ferrers {}", parts.iter().map(usize::to_string).collect::<Vec<_>>().join(","));
        jobs.push(job(s, name, move |c| {
            let lambda = Partition::new(parts.clone())?;
            let x = ferrers_graph(&lambda)?.compile();
            let expected = Ok(ferrers_count(&lambda));
            c.tau("graph", graph_matrix_tree(&x), &expected);
            let o = c.oracle(&x, 1);
            c.compare("oracle", o, &expected, String::new());
            Ok(())
        }));
    }
    for (name, m) in matroid_instances() {
        jobs.push(job(s, format!("matroid {name}"), move |c| {
            let x = m.independence_complex()?.compile();
            let expected = Ok(m.kook_lee_tau());
            let o = c.oracle(&x, x.dim());
            c.compare("oracle", o, &expected, String::new());
            c.tau("pseudodet", tau_pseudodet(&x, None), &expected);
            let bases = Ok(BigInt::from(m.bases().len()));
            let t11 = m.tutte().evaluate(&BigInt::one(), &BigInt::one());
            c.compare("tutte T(1,1)", Ok(t11), &bases, format!("tutte {}", m.tutte()));
            Ok(())
        }));
    }
    jobs.extend(weighted_family_jobs());
    jobs
}

/// Vertex-weighted closed forms at sampled weights, against the weighted
/// oracle and the weighted reduced Laplacian.
fn weighted_family_jobs() -> Vec<Job> {
    let s = Suite::Families;
    let mut jobs = Vec::new();
    for (n, d) in [(4u32, 1usize), (5, 1), (4, 2), (5, 2)] {
        jobs.push(job(s, format!("weighted simplex {n},{d}"), move |c| {
            let x = simplex_skeleton(n, d)?.compile();
            for i in 1..=c.samples {
                let v = c.sampler.vector(n as usize);
                let w = vertex_weights(&x, d, &v)?;
                weighted_row(c, &x, &w, &format!("#{i}"), kalai_weighted(n, d, &v));
            }
            Ok(())
        }));
    }
    for k in 1..=2usize {
        jobs.push(job(s, format!("weighted colorful 2,2,2 k={k}"), move |c| {
            let sizes = [2u32, 2, 2];
            let x = complete_colorful(&sizes)?.compile().skeleton(k)?;
            for i in 1..=c.samples {
                let v: Vec<Vec<BigRational>> = sizes.iter().map(|&n| c.sampler.vector(n as usize)).collect();
                let flat: Vec<BigRational> = v.iter().flatten().cloned().collect();
                let w = vertex_weights(&x, k, &flat)?;
                weighted_row(c, &x, &w, &format!("#{i}"), aalipour_duval_weighted(k, &sizes, &v));
            }
            Ok(())
        }));
    }
    for parts in ferrers_partitions().into_iter().take(3) {
        let name = format!(
            "weighted ferrers {}",
            parts.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
        );
        jobs.push(job(s, name, move |c| {
            let lambda = Partition::new(parts.clone())?;
            let x = ferrers_graph(&lambda)?.compile();
            for i in 1..=c.samples {
                let rows = c.sampler.vector(lambda.len());
                let cols = c.sampler.vector(lambda.parts()[0]);
                let all: Vec<BigRational> = rows.iter().chain(&cols).cloned().collect();
                let w = vertex_weights(&x, 1, &all)?;
                weighted_row(c, &x, &w, &format!("#{i}"), ferrers_weighted(&lambda, &rows, &cols));
            }
            Ok(())
        }));
    }
    for n in 2..=3usize {
        jobs.push(job(s, format!("weighted hypercube {n}"), move |c| {
            let q = hypercube_complex(n)?;
            for i in 1..=c.samples {
                let (qs, xs, ys) = (c.sampler.vector(n), c.sampler.vector(n), c.sampler.vector(n));
                for k in 1..=n {
                    let x = q.skeleton(k)?;
                    let all = hypercube_weights(&x, &qs, &xs, &ys)?;
                    let w = WeightAssignment::from_fn(&x, &[k], |kk, j| {
                        all.get(kk, j).expect("every cell weighted").clone()
                    })?;
                    let expected = hypercube_weighted(k, n, &qs, &xs, &ys);
                    weighted_row(c, &x, &w, &format!("#{i} k={k}"), expected);
                }
            }
            Ok(())
        }));
    }
    for g in shifted_generators().into_iter().skip(1) {
        jobs.push(job(s, format!("weighted {}", shifted_name(&g)), move |c| {
            let delta = shifted_complex(&g)?;
            let x = delta.compile();
            for i in 1..=c.samples {
                let v = c.sampler.vector(delta.vertices().len());
                let w = vertex_weights(&x, x.dim(), &v)?;
                weighted_row(c, &x, &w, &format!("#{i}"), shifted_tau_coarse(&delta, &v));
            }
            Ok(())
        }));
    }
    jobs
}

fn weighted_row(c: &mut Check, x: &ChainComplex, w: &WeightAssignment, tag: &str, expected: Result<BigRational>) {
    let o = c.weighted_oracle(x, x.dim(), w);
    c.compare(&format!("weighted-oracle {tag}"), o, &expected, String::new());
    let reduced = default_root(x).and_then(|r| tau_reduced(x, &r, Some(w)));
    c.tau(&format!("weighted-reduced {tag}"), reduced, &expected);
}

fn theorem_instances() -> Vec<(String, fn() -> Result<ChainComplex>)> {
    let mut out: Vec<(String, fn() -> Result<ChainComplex>)> = vec![
        ("bipyramid".into(), || named_complex("bipyramid")),
        ("rp2_cell".into(), || named_complex("rp2_cell")),
        ("rp2_six_vertex".into(), || named_complex("rp2_six_vertex")),
        ("annulus".into(), || named_complex("annulus")),
        ("moebius".into(), || named_complex("moebius")),
        ("simplex 3,1".into(), || Ok(simplex_skeleton(3, 1)?.compile())),
        ("simplex 4,1".into(), || Ok(simplex_skeleton(4, 1)?.compile())),
        ("simplex 5,2".into(), || Ok(simplex_skeleton(5, 2)?.compile())),
        ("simplex 6,2".into(), || Ok(simplex_skeleton(6, 2)?.compile())),
        ("cycle 4".into(), || {
            let edges = [vec![1, 2], vec![2, 3], vec![3, 4], vec![1, 4]];
            Ok(crate::complex::SimplicialComplex::from_facets(4, &edges)?.compile())
        }),
        ("bipartite 3,3".into(), || Ok(complete_colorful(&[3, 3])?.compile())),
        ("colorful 2,2,2".into(), || Ok(complete_colorful(&[2, 2, 2])?.compile())),
        ("hypercube 3".into(), || hypercube_complex(3)),
        ("hypercube 3 k=2".into(), || hypercube_complex(3)?.skeleton(2)),
    ];
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

fn theorems_jobs() -> Vec<Job> {
    let s = Suite::Theorems;
    let mut jobs = Vec::new();
    for (name, build) in theorem_instances() {
        jobs.push(job(s, name.clone(), move |c| {
            let x = build()?;
            let d = x.dim();
            c.hypotheses(&x);
            let expected = c.oracle(&x, d);
            if let Ok(v) = &expected {
                c.info("oracle", v);
            }
            c.tau("reduced", default_root(&x).and_then(|r| tau_reduced(&x, &r, None)), &expected);
            c.tau(
                "reduced-acyclic",
                default_forest_root(&x).and_then(|r| tau_reduced_acyclic(&x, &r, None)),
                &expected,
            );
            c.tau("pseudodet", tau_pseudodet(&x, None), &expected);
            c.tau("alternating", tau_alternating(&x), &expected);
            c.tau("covolume", tau_covolume(&x, None), &expected);
            c.tau("lyons", tau_lyons_default(&x), &expected);
            c.tau("lyons-spectral", tau_lyons_spectral(&x), &expected);
            let poly = rooted_forest_polynomial(&x).map(|p| coefficient_string(&p.coefficients));
            let brute = rooted_forest_polynomial_bruteforce(&x).map(|v| coefficient_string(&v));
            c.compare("rooted-poly", poly, &brute, String::new());
            Ok(())
        }));
        jobs.push(job(s, format!("{name} weighted"), move |c| {
            let x = build()?;
            let d = x.dim();
            let dims: Vec<usize> = (0..=d).collect();
            let w = c.sampler.assignment(&x, &dims)?;
            let expected = c.weighted_oracle(&x, d, &w);
            c.tau("reduced", default_root(&x).and_then(|r| tau_reduced(&x, &r, Some(&w))), &expected);
            c.tau(
                "reduced-acyclic",
                default_forest_root(&x).and_then(|r| tau_reduced_acyclic(&x, &r, Some(&w))),
                &expected,
            );
            c.tau("pseudodet", tau_pseudodet(&x, Some(&w)), &expected);
            c.tau("covolume", tau_covolume(&x, Some(&w)), &expected);
            c.tau("algebraic-weighted", tau_algebraic_weighted(&x, &w), &expected);
            c.tau("weighted-alternating", tau_weighted_alternating(&x, &w), &expected);
            Ok(())
        }));
    }
    jobs
}

fn coefficient_string(c: &[BigInt]) -> String {
    let parts: Vec<String> = c.iter().map(BigInt::to_string).collect();
    format!("[{}]", parts.join(", "))
}

fn critical_jobs() -> Vec<Job> {
    let s = Suite::Critical;
    theorem_instances()
        .into_iter()
        .map(|(name, build)| {
            job(s, name, move |c| {
                let x = build()?;
                for i in 0..x.dim() {
                    let k = critical_group(&x, i);
                    let order = k.as_ref().map_err(Clone::clone).and_then(|g| {
                        g.order().ok_or_else(|| Error::Hypothesis("critical group is infinite".into()))
                    });
                    let expected = c.oracle(&x, i + 1);
                    let note = k.as_ref().map(ToString::to_string).unwrap_or_default();
                    c.compare(&format!("|K_{i}| vs tau_{}", i + 1), order, &expected, note);
                    let k = k.map(|g| g.to_string());
                    let cycles = critical_group_via_cycles(&x, i).map(|g| {
                        let free = g.free_rank;
                        (g.torsion_part().to_string(), free)
                    });
                    match cycles {
                        Ok((torsion_part, free)) => {
                            let note = format!("free rank {free}, betti {}", betti(&x, i as isize));
                            let status_ok = free == betti(&x, i as isize);
                            c.compare(&format!("K_{i} via cycles"), Ok(torsion_part), &k, note);
                            if !status_ok {
                                c.flag(&format!("K_{i} free rank"), Ok(false), free.to_string());
                            }
                        }
                        Err(e) => c.error(&format!("K_{i} via cycles"), e),
                    }
                    match torsion_free_tree(&x, i) {
                        Ok(Some(tree)) => {
                            let g = critical_group_reduced(&x, i, &tree).map(|g| g.torsion_part().to_string());
                            c.compare(&format!("K_{i} reduced"), g, &k, String::new());
                        }
                        Ok(None) => c.error(
                            &format!("K_{i} reduced"),
                            Error::Hypothesis("no spanning tree with trivial torsion".into()),
                        ),
                        Err(e) => c.error(&format!("K_{i} reduced"), e),
                    }
                }
                match sequence_order_check(&x) {
                    Ok(r) => {
                        let value = r.serialize().trim_end().replace('\n', "; ");
                        c.flag("sequence orders", Ok(r.holds()), value);
                        let trivial = r.error_term == BigInt::one();
                        c.flag(
                            "all equal iff E trivial",
                            Ok(r.all_equal() == trivial),
                            format!("all_equal={} E={}", r.all_equal(), r.error_term),
                        );
                    }
                    Err(e) => c.error("sequence orders", e),
                }
                Ok(())
            })
        })
        .collect()
}

/// `τ_k` with the reduced convention `τ_0 = |X_0|`.
fn tau_at(x: &ChainComplex, k: usize) -> Result<BigRational> {
    if k == 0 {
        return Ok(int(x.num_cells(0)));
    }
    Ok(tau_pseudodet(&x.skeleton(k)?, None)?.value)
}

fn duality_jobs() -> Vec<Job> {
    let s = Suite::Duality;
    let mut jobs = Vec::new();
    for n in 3..=4usize {
        jobs.push(job(s, format!("hypercube {n} / cross-polytope {n}"), move |c| {
            let x = hypercube_complex(n)?.skeleton(n - 1)?;
            let d = n - 1;
            let y = complete_colorful(&vec![2; n])?.compile();
            let dual = dual_chain_complex(&x)?;
            for k in 0..=d {
                let expected = if k == 0 {
                    Ok(BigInt::from(1u32 << n))
                } else {
                    hypercube_tau(k, n)
                };
                c.compare(&format!("tau_{k}(Q)"), tau_at(&x, k), &expected, String::new());
                let j = d - k;
                c.compare(&format!("tau_{j}(K_2..2)"), tau_at(&y, j), &expected, String::new());
                c.compare(&format!("tau_{j}(dual)"), tau_at(&dual, j), &expected, String::new());
                c.compare(
                    &format!("cross-polytope k={j}"),
                    Ok(cross_polytope_count(j, n)),
                    &expected,
                    String::new(),
                );
            }
            Ok(())
        }));
    }
    jobs.push(job(s, "hypercube 3 / cross-polytope 3 weighted", |c| {
        let x = hypercube_complex(3)?.skeleton(2)?;
        let d = 2;
        let dual = dual_chain_complex(&x)?;
        for k in 0..=d {
            let j = d - k;
            let w = c.sampler.assignment(&x, &[k])?;
            let mut star = WeightAssignment::new();
            for (_, i, v) in w.iter() {
                star.set(j, i, v.recip())?;
            }
            let expected = c.weighted_oracle(&x, k, &w);
            let total = w.total_product(&x, k)?;
            let literal = c.weighted_oracle(&dual, j, &star);
            let note = literal
                .as_ref()
                .map(|v| format!("tau_{j}(dual; w*)={v} scale={total}"))
                .unwrap_or_default();
            let scaled = literal.map(|v| v * &total);
            c.compare(&format!("tau_{k}(Q; w) = prod w * tau_{j}(dual; w*)"), scaled, &expected, note);
        }
        Ok(())
    }));
    jobs
}
