//! Matroids on small ground sets given by an explicit rank table, their
//! independence complexes and the invariants entering the Kook–Lee product.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::linalg::{rank_exact, IntMatrix};

pub const MAX_GROUND: usize = 10;

/// A matroid on `{0, …, n−1}`; `rank[A]` is the rank of the subset with bitmask `A`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matroid {
    n: usize,
    rank: Vec<u8>,
}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matroid(n {}, rank {})", self.n, self.full_rank())
    }
}

fn check_size(n: usize) -> Result<()> {
    if n > MAX_GROUND {
        return Err(Error::BadParameter(format!(
            "ground set has {n} elements, at most {MAX_GROUND} supported"
        )));
    }
    Ok(())
}

impl Matroid {
    /// Builds the rank table from `rank_of` and checks the rank axioms:
    /// `r(∅) = 0`, unit increase, and local submodularity.
    pub fn from_rank_fn(n: usize, rank_of: impl Fn(u32) -> usize) -> Result<Self> {
        check_size(n)?;
        let rank: Vec<u8> = (0u32..1 << n).map(|a| rank_of(a) as u8).collect();
        let m = Self { n, rank };
        m.check_axioms()?;
        Ok(m)
    }

    fn check_axioms(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::BadParameter(format!("not a matroid: {msg}")));
        if self.rank[0] != 0 {
            return bad("rank of the empty set is nonzero".into());
        }
        for a in 0..self.rank.len() as u32 {
            let r = self.rank(a);
            for e in (0..self.n).filter(|&e| a >> e & 1 == 0) {
                let ae = self.rank(a | 1 << e);
                if ae < r || ae > r + 1 {
                    return bad(format!("rank jumps from {a:#b} adding {e}"));
                }
                for f in (e + 1..self.n).filter(|&f| a >> f & 1 == 0) {
                    let af = self.rank(a | 1 << f);
                    let aef = self.rank(a | 1 << e | 1 << f);
                    if ae + af < aef + r {
                        return bad(format!("submodularity fails at {a:#b} with {e}, {f}"));
                    }
                }
            }
        }
        Ok(())
    }

    /// Cycle matroid of a multigraph on vertices `1..=vertices`; a loop edge
    /// `(v, v)` is a loop of the matroid.
    pub fn graphic(vertices: u32, edges: &[(u32, u32)]) -> Result<Self> {
        if let Some(&(u, v)) = edges
            .iter()
            .find(|&&(u, v)| u == 0 || v == 0 || u > vertices || v > vertices)
        {
            return Err(Error::VertexOutOfRange {
                vertex: if u == 0 || u > vertices { u } else { v },
                n: vertices,
            });
        }
        Self::from_rank_fn(edges.len(), |a| {
            let mut parent: Vec<u32> = (0..=vertices).collect();
            fn find(p: &mut [u32], v: u32) -> u32 {
                let mut r = v;
                while p[r as usize] != r {
                    r = p[r as usize];
                }
                p[v as usize] = r;
                r
            }
            let mut rank = 0;
            for (e, &(u, v)) in edges.iter().enumerate() {
                if a >> e & 1 == 1 {
                    let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
                    if ru != rv {
                        parent[ru as usize] = rv;
                        rank += 1;
                    }
                }
            }
            rank
        })
    }

    /// `U_{r,n}`: every set of at most `r` elements is independent.
    pub fn uniform(r: usize, n: usize) -> Result<Self> {
        if r > n {
            return Err(Error::BadParameter(format!("U_{{{r},{n}}} needs r <= n")));
        }
        Self::from_rank_fn(n, |a| (a.count_ones() as usize).min(r))
    }

    /// Column matroid of an integer matrix.
    pub fn from_columns(m: &IntMatrix) -> Result<Self> {
        Self::from_rank_fn(m.cols(), |a| {
            let cols: Vec<usize> = (0..m.cols()).filter(|&j| a >> j & 1 == 1).collect();
            rank_exact(&m.select_columns(&cols))
        })
    }

    /// Direct sum; the elements of `other` follow those of `self`.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        let lo = (1u32 << self.n) - 1;
        Self::from_rank_fn(self.n + other.n, |a| {
            self.rank(a & lo) + other.rank(a >> self.n)
        })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn ground(&self) -> u32 {
        ((1u64 << self.n) - 1) as u32
    }

    pub fn rank(&self, a: u32) -> usize {
        self.rank[a as usize] as usize
    }

    pub fn full_rank(&self) -> usize {
        self.rank(self.ground())
    }

    pub fn is_independent(&self, a: u32) -> bool {
        self.rank(a) == a.count_ones() as usize
    }

    pub fn is_loop(&self, e: usize) -> bool {
        self.rank(1 << e) == 0
    }

    pub fn is_coloop(&self, e: usize) -> bool {
        self.rank(self.ground() & !(1 << e)) < self.full_rank()
    }

    /// Bases as bitmasks, ascending.
    pub fn bases(&self) -> Vec<u32> {
        let r = self.full_rank();
        (0..=self.ground())
            .filter(|&a| a.count_ones() as usize == r && self.rank(a) == r)
            .collect()
    }

    pub fn closure(&self, a: u32) -> u32 {
        let r = self.rank(a);
        (0..self.n)
            .filter(|&e| self.rank(a | 1 << e) == r)
            .fold(a, |acc, e| acc | 1 << e)
    }

    /// Flats as bitmasks, ascending.
    pub fn flats(&self) -> Vec<u32> {
        (0..=self.ground()).filter(|&a| self.closure(a) == a).collect()
    }

    /// The minor `(M / contract) | keep`, on the elements of `keep` in
    /// increasing order. `keep` and `contract` must be disjoint.
    pub fn minor(&self, keep: u32, contract: u32) -> Result<Self> {
        if keep & contract != 0 || (keep | contract) & !self.ground() != 0 {
            return Err(Error::InvalidSelection(
                "minor needs disjoint subsets of the ground set".into(),
            ));
        }
        let elems: Vec<usize> = (0..self.n).filter(|&e| keep >> e & 1 == 1).collect();
        let rc = self.rank(contract);
        let lift = |a: u32| {
            elems
                .iter()
                .enumerate()
                .filter(|&(i, _)| a >> i & 1 == 1)
                .fold(0u32, |acc, (_, &e)| acc | 1 << e)
        };
        Ok(Self {
            n: elems.len(),
            rank: (0u32..1 << elems.len())
                .map(|a| (self.rank(lift(a) | contract) - rc) as u8)
                .collect(),
        })
    }

    /// `M | a`.
    pub fn restrict(&self, a: u32) -> Self {
        self.minor(a, 0).expect("subset of the ground set")
    }

    /// `M / a`.
    pub fn contract(&self, a: u32) -> Self {
        self.minor(self.ground() & !a, a).expect("subset of the ground set")
    }

    /// `M \ a`.
    pub fn delete(&self, a: u32) -> Self {
        self.restrict(self.ground() & !a)
    }

    /// The complex of independent sets. Vertices are the non-loop elements,
    /// numbered from 1.
    pub fn independence_complex(&self) -> Result<SimplicialComplex> {
        let vertices: Vec<u32> = (0..self.n)
            .filter(|&e| !self.is_loop(e))
            .map(|e| e as u32 + 1)
            .collect();
        if vertices.is_empty() {
            return Err(Error::BadParameter(
                "independence complex of a rank-0 matroid is empty".into(),
            ));
        }
        let facets: Vec<Vec<u32>> = self
            .bases()
            .into_iter()
            .map(|b| (0..self.n as u32).filter(|e| b >> e & 1 == 1).map(|e| e + 1).collect())
            .collect();
        SimplicialComplex::on_vertices(vertices, &facets)
    }

    /// Tutte polynomial by deletion and contraction, memoized on the pair
    /// (remaining elements, contracted elements).
    pub fn tutte(&self) -> TuttePolynomial {
        let mut memo = HashMap::new();
        self.tutte_rec(self.ground(), 0, &mut memo)
    }

    fn tutte_rec(
        &self,
        rest: u32,
        contracted: u32,
        memo: &mut HashMap<(u32, u32), TuttePolynomial>,
    ) -> TuttePolynomial {
        if rest == 0 {
            return TuttePolynomial::one();
        }
        if let Some(t) = memo.get(&(rest, contracted)) {
            return t.clone();
        }
        let e = rest.trailing_zeros();
        let without = rest & !(1 << e);
        let rc = self.rank(contracted);
        let is_loop = self.rank(contracted | 1 << e) == rc;
        let is_coloop = self.rank(without | contracted) < self.rank(rest | contracted);
        let t = if is_loop {
            self.tutte_rec(without, contracted, memo).shift(0, 1)
        } else if is_coloop {
            self.tutte_rec(without, contracted | 1 << e, memo).shift(1, 0)
        } else {
            self.tutte_rec(without, contracted, memo)
                .add(&self.tutte_rec(without, contracted | 1 << e, memo))
        };
        memo.insert((rest, contracted), t.clone());
        t
    }

    /// `α(M) = T_M(0, 1)`.
    pub fn alpha(&self) -> BigInt {
        self.tutte().evaluate(&BigInt::zero(), &BigInt::one())
    }

    /// Crapo's invariant `(−1)^{r(M)} Σ_A (−1)^{|A|} r(A)`.
    pub fn crapo_beta(&self) -> BigInt {
        let s: i64 = (0..=self.ground())
            .map(|a| {
                let r = self.rank(a) as i64;
                if a.count_ones() % 2 == 0 { r } else { -r }
            })
            .sum();
        BigInt::from(if self.full_rank().is_multiple_of(2) { s } else { -s })
    }

    /// `Π_{flats F} |E ∖ F|^{α(M|F) β(M/F)}` with `0^0 = 1`.
    pub fn kook_lee_tau(&self) -> BigInt {
        self.flats()
            .into_iter()
            .map(|f| {
                let e = self.restrict(f).alpha() * self.contract(f).crapo_beta();
                let base = BigInt::from(self.n - f.count_ones() as usize);
                pow_nonneg(&base, &e)
            })
            .product()
    }

    /// `Π_e v_e^{|bases(M/e)| − α(M/e)} · Π_{flats F} (Σ_{e∉F} v_e)^{α(M|F) β(M/F)}`,
    /// the enumerator with facet weight the product of its vertex weights.
    pub fn kook_lee_weighted(&self, v: &[BigRational]) -> Result<BigRational> {
        if v.len() != self.n {
            return Err(Error::BadParameter(format!("need {} element weights", self.n)));
        }
        let mut out = BigRational::one();
        for (e, ve) in v.iter().enumerate() {
            let m = self.contract(1 << e);
            let exp = BigInt::from(m.bases().len()) - m.alpha();
            out *= rat_pow_nonneg(ve, &exp);
        }
        for f in self.flats() {
            let exp = self.restrict(f).alpha() * self.contract(f).crapo_beta();
            let s: BigRational = (0..self.n).filter(|&e| f >> e & 1 == 0).map(|e| v[e].clone()).sum();
            out *= rat_pow_nonneg(&s, &exp);
        }
        Ok(out)
    }
}

fn pow_nonneg(base: &BigInt, exp: &BigInt) -> BigInt {
    let e: u32 = exp.try_into().expect("exponent is a small nonnegative integer");
    base.pow(e)
}

fn rat_pow_nonneg(base: &BigRational, exp: &BigInt) -> BigRational {
    let e: i32 = exp.try_into().expect("exponent is a small nonnegative integer");
    base.pow(e)
}

/// Bivariate integer polynomial; `coefficients[i][j]` multiplies `x^i y^j`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TuttePolynomial {
    pub coefficients: Vec<Vec<BigInt>>,
}

impl TuttePolynomial {
    fn one() -> Self {
        Self {
            coefficients: vec![vec![BigInt::one()]],
        }
    }

    fn shift(&self, dx: usize, dy: usize) -> Self {
        let mut c = vec![Vec::new(); dx];
        c.extend(self.coefficients.iter().map(|row| {
            let mut r = vec![BigInt::zero(); dy];
            r.extend(row.iter().cloned());
            r
        }));
        Self { coefficients: c }
    }

    fn add(&self, other: &Self) -> Self {
        let rows = self.coefficients.len().max(other.coefficients.len());
        let coefficients = (0..rows)
            .map(|i| {
                let a = self.coefficients.get(i).map_or(&[][..], Vec::as_slice);
                let b = other.coefficients.get(i).map_or(&[][..], Vec::as_slice);
                (0..a.len().max(b.len()))
                    .map(|j| {
                        a.get(j).cloned().unwrap_or_default() + b.get(j).cloned().unwrap_or_default()
                    })
                    .collect()
            })
            .collect();
        Self { coefficients }
    }

    pub fn coefficient(&self, i: usize, j: usize) -> BigInt {
        self.coefficients
            .get(i)
            .and_then(|r| r.get(j))
            .cloned()
            .unwrap_or_default()
    }

    pub fn evaluate(&self, x: &BigInt, y: &BigInt) -> BigInt {
        self.coefficients.iter().rev().fold(BigInt::zero(), |acc, row| {
            acc * x + row.iter().rev().fold(BigInt::zero(), |a, c| a * y + c)
        })
    }
}

impl fmt::Display for TuttePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, row) in self.coefficients.iter().enumerate().rev() {
            for (j, c) in row.iter().enumerate().rev() {
                if c.is_zero() {
                    continue;
                }
                let mono = match (i, j) {
                    (0, 0) => String::new(),
                    (i, 0) => power("x", i),
                    (0, j) => power("y", j),
                    (i, j) => format!("{}{}", power("x", i), power("y", j)),
                };
                terms.push(match (c.is_one(), mono.is_empty()) {
                    (_, true) => c.to_string(),
                    (true, false) => mono,
                    (false, false) => format!("{c}{mono}"),
                });
            }
        }
        if terms.is_empty() {
            return write!(f, "0");
        }
        write!(f, "{}", terms.join(" + "))
    }
}

fn power(var: &str, e: usize) -> String {
    if e == 1 { var.to_string() } else { format!("{var}^{e}") }
}

impl fmt::Debug for TuttePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tutte({self})")
    }
}
