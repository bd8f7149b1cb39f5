use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use super::ChainComplex;
use crate::error::{Error, Result};

/// Strictly positive rational weights on cells, keyed by `(dimension, index)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeightAssignment {
    weights: BTreeMap<(usize, usize), BigRational>,
}

impl WeightAssignment {
    pub fn new() -> Self {
        Self::default()
    }

    /// The same weight on every cell of the given dimensions.
    pub fn uniform(x: &ChainComplex, dims: &[usize], value: BigRational) -> Self {
        Self::from_fn(x, dims, |_, _| value.clone()).expect("uniform weight is positive")
    }

    pub fn from_fn(
        x: &ChainComplex,
        dims: &[usize],
        mut f: impl FnMut(usize, usize) -> BigRational,
    ) -> Result<Self> {
        let mut w = Self::new();
        for &k in dims {
            for i in 0..x.num_cells(k as isize) {
                w.set(k, i, f(k, i))?;
            }
        }
        Ok(w)
    }

    /// Weights on simplices given as a product of vertex weights; `vertex(v)`
    /// is the weight of vertex `v`.
    pub fn from_vertex_products(
        x: &ChainComplex,
        dims: &[usize],
        vertex: impl Fn(u32) -> BigRational,
    ) -> Result<Self> {
        if !x.is_simplicial() {
            return Err(Error::BadParameter(
                "vertex-product weights need a simplicial complex".into(),
            ));
        }
        Self::from_fn(x, dims, |k, i| {
            x.simplices(k).expect("simplicial")[i]
                .iter()
                .fold(BigRational::one(), |acc, &v| acc * vertex(v))
        })
    }

    pub fn set(&mut self, dim: usize, index: usize, value: BigRational) -> Result<()> {
        if !value.is_positive() {
            return Err(Error::NonPositiveWeight(format!("{dim}:{index}")));
        }
        self.weights.insert((dim, index), value);
        Ok(())
    }

    pub fn get(&self, dim: usize, index: usize) -> Option<&BigRational> {
        self.weights.get(&(dim, index))
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &BigRational)> {
        self.weights.iter().map(|(&(k, i), w)| (k, i, w))
    }

    /// Weight of cell `(dim, index)`, or an error naming the cell.
    pub fn require(&self, x: &ChainComplex, dim: usize, index: usize) -> Result<&BigRational> {
        self.get(dim, index)
            .ok_or_else(|| Error::MissingWeight(x.label(dim, index).to_string()))
    }

    /// Weights of all `k`-cells in index order.
    pub fn diagonal(&self, x: &ChainComplex, k: usize) -> Result<Vec<BigRational>> {
        (0..x.num_cells(k as isize))
            .map(|i| self.require(x, k, i).cloned())
            .collect()
    }

    /// Product of the weights of the given `k`-cells.
    pub fn product(&self, x: &ChainComplex, k: usize, cells: &[usize]) -> Result<BigRational> {
        cells.iter().try_fold(BigRational::one(), |acc, &i| {
            Ok(acc * self.require(x, k, i)?)
        })
    }

    /// Product over every `k`-cell of `x`.
    pub fn total_product(&self, x: &ChainComplex, k: usize) -> Result<BigRational> {
        let all: Vec<usize> = (0..x.num_cells(k as isize)).collect();
        self.product(x, k, &all)
    }

    pub fn reciprocal(&self) -> Self {
        Self {
            weights: self
                .weights
                .iter()
                .map(|(&key, w)| (key, w.recip()))
                .collect(),
        }
    }

    /// Text form: one `dim index p/q` line per weight, sorted by cell.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        for (&(k, i), w) in &self.weights {
            writeln!(out, "{k} {i} {}/{}", w.numer(), w.denom()).expect("string write");
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut w = Self::new();
        for (n, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |msg: &str| Error::Parse {
                line: n + 1,
                msg: msg.to_string(),
            };
            let fields: Vec<&str> = line.split_whitespace().collect();
            let [k, i, v] = fields[..] else {
                return Err(err("expected `dim index p/q`"));
            };
            let k: usize = k.parse().map_err(|_| err("bad dimension"))?;
            let i: usize = i.parse().map_err(|_| err("bad index"))?;
            let value = parse_rational(v).ok_or_else(|| err("bad rational"))?;
            if w.weights.contains_key(&(k, i)) {
                return Err(err("duplicate cell"));
            }
            w.set(k, i, value).map_err(|e| err(&e.to_string()))?;
        }
        Ok(w)
    }
}

/// Parse `p/q` or an integer `p`.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.parse().ok()?;
            let q: BigInt = q.parse().ok()?;
            if q.is_positive() {
                Some(BigRational::new(p, q))
            } else {
                None
            }
        }
        None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::SimplicialComplex;
    use proptest::prelude::*;

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(p.into(), q.into())
    }

    #[test]
    fn positivity_and_lookup() {
        let mut w = WeightAssignment::new();
        assert!(w.set(1, 0, rat(0, 1)).is_err());
        assert!(w.set(1, 0, rat(-1, 2)).is_err());
        w.set(1, 0, rat(3, 4)).unwrap();
        assert_eq!(w.get(1, 0), Some(&rat(3, 4)));
        assert_eq!(w.reciprocal().get(1, 0), Some(&rat(4, 3)));
        let x = SimplicialComplex::from_facets(2, &[vec![1, 2]]).unwrap().compile();
        assert!(matches!(w.diagonal(&x, 0), Err(Error::MissingWeight(l)) if l == "1"));
    }

    #[test]
    fn vertex_products() {
        let x = SimplicialComplex::from_facets(3, &[vec![1, 2, 3]]).unwrap().compile();
        let w = WeightAssignment::from_vertex_products(&x, &[1], |v| rat(v as i64, 1)).unwrap();
        assert_eq!(w.diagonal(&x, 1).unwrap(), vec![rat(2, 1), rat(3, 1), rat(6, 1)]);
        assert_eq!(w.total_product(&x, 1).unwrap(), rat(36, 1));
    }

    #[test]
    fn text_form() {
        let w = WeightAssignment::parse("# weights\n1 0 3/6\n0 2 5\n").unwrap();
        assert_eq!(w.serialize(), "0 2 5/1\n1 0 1/2\n");
        assert!(WeightAssignment::parse("1 0 1/0").is_err());
        assert!(WeightAssignment::parse("1 0 -1/2").is_err());
        assert!(WeightAssignment::parse("1 0").is_err());
        assert!(WeightAssignment::parse("1 0 1\n1 0 2").is_err());
    }

    proptest! {
        #[test]
        fn roundtrip(entries in proptest::collection::btree_map((0usize..4, 0usize..30), (1i64..1000, 1i64..1000), 0..20)) {
            let mut w = WeightAssignment::new();
            for ((k, i), (p, q)) in entries {
                w.set(k, i, rat(p, q)).unwrap();
            }
            let text = w.serialize();
            let back = WeightAssignment::parse(&text).unwrap();
            prop_assert_eq!(&back, &w);
            prop_assert_eq!(back.serialize(), text);
        }
    }
}
