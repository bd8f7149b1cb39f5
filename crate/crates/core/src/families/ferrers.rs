//! Ferrers graphs: bipartite graphs whose edges are the boxes of a partition.

use num_rational::BigRational;
use num_traits::One;

use super::Partition;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};

/// Row `i` is vertex `i` and column `j` is vertex `n + j`, where `n` is the
/// number of rows; box `(i, j)` is the edge between them.
pub fn ferrers_graph(lambda: &Partition) -> Result<SimplicialComplex> {
    let n = lambda.len() as u32;
    let m = lambda.parts()[0] as u32;
    let edges: Vec<Vec<u32>> = lambda
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(i, &p)| (1..=p as u32).map(move |j| vec![i as u32 + 1, n + j]))
        .collect();
    SimplicialComplex::from_facets(n + m, &edges)
}

/// Vertex-weighted spanning-tree count with row weights `x` and column
/// weights `y`: `x_1⋯x_n y_1⋯y_m Π_{p≥2} (y_1+⋯+y_{λ_p}) Π_{q≥2} (x_1+⋯+x_{λ'_q})`,
/// where `λ'` is the conjugate.
pub fn ferrers_weighted(lambda: &Partition, x: &[BigRational], y: &[BigRational]) -> Result<BigRational> {
    let conj = lambda.conjugate();
    if x.len() != lambda.len() || y.len() != conj.len() {
        return Err(Error::BadParameter(format!(
            "need {} row and {} column weights",
            lambda.len(),
            conj.len()
        )));
    }
    let mut out: BigRational = x.iter().chain(y).product();
    for &p in &lambda.parts()[1..] {
        out *= y[..p].iter().sum::<BigRational>();
    }
    for &q in &conj.parts()[1..] {
        out *= x[..q].iter().sum::<BigRational>();
    }
    Ok(out)
}

/// Unweighted count `Π_{p≥2} λ_p Π_{q≥2} λ'_q`.
pub fn ferrers_count(lambda: &Partition) -> num_bigint::BigInt {
    let ones_x = vec![BigRational::one(); lambda.len()];
    let ones_y = vec![BigRational::one(); lambda.parts()[0]];
    ferrers_weighted(lambda, &ones_x, &ones_y)
        .expect("matching lengths")
        .to_integer()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn rectangles_are_complete_bipartite() {
        for (m, n) in [(2usize, 3usize), (3, 3), (4, 2)] {
            let lambda = Partition::new(vec![n; m]).unwrap();
            let g = ferrers_graph(&lambda).unwrap();
            assert_eq!(g.faces(1).len(), m * n);
            let expected = BigInt::from(n).pow(m as u32 - 1) * BigInt::from(m).pow(n as u32 - 1);
            assert_eq!(ferrers_count(&lambda), expected);
        }
    }

    #[test]
    fn single_box() {
        let lambda = Partition::new(vec![1]).unwrap();
        assert_eq!(ferrers_graph(&lambda).unwrap().faces(1).len(), 1);
        assert_eq!(ferrers_count(&lambda), BigInt::one());
    }
}
