//! Plain-text interchange format for complexes.
//!
//! Blank lines and lines starting with `#` are ignored. A file starts with
//! `dim d` and continues in one of two forms.
//!
//! Simplicial:
//! ```text
//! dim 2
//! vertices 1 2 3 4
//! facets 2
//! 1 2 3
//! 2 3 4
//! ```
//! The `vertices` line lists the vertex set; each facet line is an increasing
//! vertex list.
//!
//! Cellular (any chain complex):
//! ```text
//! dim 2
//! cells 0 v
//! cells 1 e
//! cells 2 f
//! matrix 1 1 1
//! 0
//! matrix 2 1 1
//! 2
//! ```
//! One `cells k` line per dimension `0..=d` with the cell labels, then
//! `matrix k rows cols` followed by `rows` lines of `cols` integers for each
//! boundary map `∂_k`, `1 ≤ k ≤ d`. A matrix with no columns has no row lines.

use std::fmt::Write as _;

use num_bigint::BigInt;

use super::{ChainComplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComplexFile {
    Simplicial(SimplicialComplex),
    Cellular(ChainComplex),
}

impl ComplexFile {
    pub fn to_chain_complex(&self) -> ChainComplex {
        match self {
            Self::Simplicial(s) => s.compile(),
            Self::Cellular(c) => c.clone(),
        }
    }

    pub fn serialize(&self) -> String {
        match self {
            Self::Simplicial(s) => write_simplicial(s),
            Self::Cellular(c) => write_cellular(c),
        }
    }
}

pub fn write_simplicial(s: &SimplicialComplex) -> String {
    let mut out = String::new();
    writeln!(out, "dim {}", s.dim()).unwrap();
    let vs: Vec<String> = s.vertices().iter().map(u32::to_string).collect();
    writeln!(out, "vertices {}", vs.join(" ")).unwrap();
    writeln!(out, "facets {}", s.facets().len()).unwrap();
    for f in s.facets() {
        let f: Vec<String> = f.iter().map(u32::to_string).collect();
        writeln!(out, "{}", f.join(" ")).unwrap();
    }
    out
}

pub fn write_cellular(x: &ChainComplex) -> String {
    let mut out = String::new();
    writeln!(out, "dim {}", x.dim()).unwrap();
    for k in 0..=x.dim() {
        write!(out, "cells {k}").unwrap();
        for l in x.labels(k) {
            write!(out, " {l}").unwrap();
        }
        out.push('\n');
    }
    for k in 1..=x.dim() {
        let b = x.boundary_ref(k);
        writeln!(out, "matrix {k} {} {}", b.rows(), b.cols()).unwrap();
        if b.cols() == 0 {
            continue;
        }
        for i in 0..b.rows() {
            let row: Vec<String> = b.row(i).iter().map(BigInt::to_string).collect();
            writeln!(out, "{}", row.join(" ")).unwrap();
        }
    }
    out
}

struct Lines<'a> {
    inner: std::iter::Peekable<Box<dyn Iterator<Item = (usize, &'a str)> + 'a>>,
    last: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let it: Box<dyn Iterator<Item = (usize, &'a str)>> = Box::new(
            text.lines()
                .enumerate()
                .map(|(i, l)| (i + 1, l.trim()))
                .filter(|(_, l)| !l.is_empty() && !l.starts_with('#')),
        );
        Self {
            inner: it.peekable(),
            last: 0,
        }
    }

    fn next(&mut self) -> Result<(usize, Vec<&'a str>)> {
        match self.inner.next() {
            Some((n, l)) => {
                self.last = n;
                Ok((n, l.split_whitespace().collect()))
            }
            None => Err(Error::Parse {
                line: self.last + 1,
                msg: "unexpected end of file".into(),
            }),
        }
    }

    fn expect_end(&mut self) -> Result<()> {
        match self.inner.next() {
            None => Ok(()),
            Some((n, _)) => Err(Error::Parse {
                line: n,
                msg: "trailing content".into(),
            }),
        }
    }
}

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn num<T: std::str::FromStr>(line: usize, s: &str) -> Result<T> {
    s.parse().map_err(|_| perr(line, format!("expected a number, got {s:?}")))
}

/// Keyword line `kw n…`; returns the remaining fields.
fn keyword<'a>(line: usize, fields: &[&'a str], kw: &str) -> Result<Vec<&'a str>> {
    match fields.split_first() {
        Some((&first, rest)) if first == kw => Ok(rest.to_vec()),
        _ => Err(perr(line, format!("expected `{kw}`"))),
    }
}

pub fn parse(text: &str) -> Result<ComplexFile> {
    let mut lines = Lines::new(text);
    let (n, fields) = lines.next()?;
    let rest = keyword(n, &fields, "dim")?;
    let [d] = rest[..] else {
        return Err(perr(n, "expected `dim d`"));
    };
    let d: usize = num(n, d)?;
    let (n, fields) = lines.next()?;
    let out = match fields.first().copied() {
        Some("vertices") => ComplexFile::Simplicial(parse_simplicial(&mut lines, n, &fields, d)?),
        Some("cells") => ComplexFile::Cellular(parse_cellular(&mut lines, n, fields, d)?),
        _ => return Err(perr(n, "expected `vertices` or `cells`")),
    };
    lines.expect_end()?;
    Ok(out)
}

fn parse_simplicial(
    lines: &mut Lines<'_>,
    n: usize,
    fields: &[&str],
    d: usize,
) -> Result<SimplicialComplex> {
    let vertices: Vec<u32> = fields[1..]
        .iter()
        .map(|v| num(n, v))
        .collect::<Result<_>>()?;
    if vertices.windows(2).any(|w| w[0] >= w[1]) {
        return Err(perr(n, "vertices must be strictly increasing"));
    }
    let (n, fields) = lines.next()?;
    let rest = keyword(n, &fields, "facets")?;
    let [m] = rest[..] else {
        return Err(perr(n, "expected `facets m`"));
    };
    let m: usize = num(n, m)?;
    let mut facets = Vec::with_capacity(m);
    for _ in 0..m {
        let (n, fields) = lines.next()?;
        let f: Vec<u32> = fields.iter().map(|v| num(n, v)).collect::<Result<_>>()?;
        if f.windows(2).any(|w| w[0] >= w[1]) {
            return Err(perr(n, "facet vertices must be strictly increasing"));
        }
        if let Some(v) = f.iter().find(|v| vertices.binary_search(v).is_err()) {
            return Err(perr(n, format!("vertex {v} not declared")));
        }
        facets.push(f);
    }
    let s = SimplicialComplex::on_vertices(vertices, &facets).map_err(|e| perr(n, e.to_string()))?;
    if s.dim() != d {
        return Err(perr(n, format!("facets have dimension {}, header says {d}", s.dim())));
    }
    Ok(s)
}

fn parse_cellular(
    lines: &mut Lines<'_>,
    n: usize,
    first: Vec<&str>,
    d: usize,
) -> Result<ChainComplex> {
    let mut labels = Vec::with_capacity(d + 1);
    let (mut n, mut fields) = (n, first);
    for k in 0..=d {
        if k > 0 {
            (n, fields) = lines.next()?;
        }
        let rest = keyword(n, &fields, "cells")?;
        let Some((dim, ls)) = rest.split_first() else {
            return Err(perr(n, "expected `cells k labels…`"));
        };
        if num::<usize>(n, dim)? != k {
            return Err(perr(n, format!("expected cells for dimension {k}")));
        }
        labels.push(ls.iter().map(|s| s.to_string()).collect::<Vec<_>>());
    }
    let mut boundaries = Vec::with_capacity(d);
    for k in 1..=d {
        let (n, fields) = lines.next()?;
        let rest = keyword(n, &fields, "matrix")?;
        let [kk, r, c] = rest[..] else {
            return Err(perr(n, "expected `matrix k rows cols`"));
        };
        if num::<usize>(n, kk)? != k {
            return Err(perr(n, format!("expected matrix for dimension {k}")));
        }
        let (rows, cols): (usize, usize) = (num(n, r)?, num(n, c)?);
        let mut data = Vec::with_capacity(rows * cols);
        if cols > 0 {
            for _ in 0..rows {
                let (n, fields) = lines.next()?;
                if fields.len() != cols {
                    return Err(perr(n, format!("expected {cols} entries")));
                }
                for f in fields {
                    data.push(num::<BigInt>(n, f)?);
                }
            }
        }
        boundaries.push(IntMatrix::new(rows, cols, data).map_err(|e| perr(n, e.to_string()))?);
    }
    ChainComplex::new(labels, boundaries).map_err(|e| perr(n, e.to_string()))
}
