//! Small named complexes used as worked examples.

use crate::complex::{simplex_label, ChainComplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

pub const NAMES: [&str; 5] = ["bipyramid", "rp2_cell", "rp2_six_vertex", "annulus", "moebius"];

fn facets(rows: &[[u32; 3]]) -> Vec<Vec<u32>> {
    rows.iter().map(|r| r.to_vec()).collect()
}

/// Two tetrahedra glued along the triangle 123, apexes 4 and 5.
pub fn bipyramid() -> SimplicialComplex {
    let f = facets(&[[1, 2, 3], [1, 2, 4], [1, 2, 5], [1, 3, 4], [1, 3, 5], [2, 3, 4], [2, 3, 5]]);
    SimplicialComplex::from_facets(5, &f).expect("valid facets")
}

/// Projective plane with one cell in each dimension: `∂_1 = [0]`, `∂_2 = [2]`.
pub fn rp2_cell() -> ChainComplex {
    ChainComplex::new(
        vec![vec!["v".into()], vec!["e".into()], vec!["f".into()]],
        vec![IntMatrix::from_i64_rows(&[[0]]), IntMatrix::from_i64_rows(&[[2]])],
    )
    .expect("valid chain complex")
}

/// Six-vertex projective plane: the icosahedron modulo the antipodal map.
pub fn rp2_six_vertex() -> SimplicialComplex {
    let f = facets(&[
        [1, 2, 4],
        [1, 2, 5],
        [1, 3, 5],
        [1, 3, 6],
        [1, 4, 6],
        [2, 3, 4],
        [2, 3, 6],
        [2, 5, 6],
        [3, 4, 5],
        [4, 5, 6],
    ]);
    SimplicialComplex::from_facets(6, &f).expect("valid facets")
}

/// Labels of the edges at vertex 1 of `rp2_six_vertex`, a root of it.
pub fn rp2_six_vertex_star_root() -> Vec<String> {
    (2..=6).map(|v| simplex_label(&[1, v])).collect()
}

/// Annulus with boundary cycles 1-2-3 and 4-5-6.
pub fn annulus() -> SimplicialComplex {
    let f = facets(&[[1, 2, 4], [2, 4, 5], [2, 3, 5], [3, 5, 6], [1, 3, 6], [1, 4, 6]]);
    SimplicialComplex::from_facets(6, &f).expect("valid facets")
}

/// Five-vertex Möbius band.
pub fn moebius() -> SimplicialComplex {
    let f = facets(&[[1, 2, 3], [2, 3, 4], [3, 4, 5], [1, 4, 5], [1, 2, 5]]);
    SimplicialComplex::from_facets(5, &f).expect("valid facets")
}

pub fn named_complex(name: &str) -> Result<ChainComplex> {
    Ok(match name {
        "bipyramid" => bipyramid().compile(),
        "rp2_cell" => rp2_cell(),
        "rp2_six_vertex" => rp2_six_vertex().compile(),
        "annulus" => annulus().compile(),
        "moebius" => moebius().compile(),
        _ => {
            return Err(Error::Unknown(format!(
                "complex {name:?}; known: {}",
                NAMES.join(", ")
            )))
        }
    })
}
