use num_traits::{One, Signed, Zero};

use super::ChainComplex;
use crate::error::{Error, Result};
use crate::linalg::{kernel_basis, IntMatrix};

/// The dual complex `Y` with `Y_k ↔ X_{d−k}` and `∂_{Y,k} = ∂*_{X,d−k+1}`.
///
/// The augmentation of `Y` is again the all-ones row. For that to compose to
/// zero with `∂_{Y,1} = ∂*_{X,d}`, the top cells of `X` must carry a
/// fundamental cycle `z` with entries `±1`; the dual vertices are re-oriented
/// by the signs of `z`.
pub fn dual_chain_complex(x: &ChainComplex) -> Result<ChainComplex> {
    let d = x.dim();
    if d == 0 {
        return Err(Error::Hypothesis("duality needs dimension at least 1".into()));
    }
    let top = x.boundary_ref(d);
    let cycles = kernel_basis(top);
    if cycles.cols() != 1 {
        return Err(Error::Hypothesis(format!(
            "top cells carry {} independent cycles, need exactly one",
            cycles.cols()
        )));
    }
    let mut z = cycles.column(0);
    if z.iter().find(|c| !c.is_zero()).is_some_and(|c| c.is_negative()) {
        z.iter_mut().for_each(|c| *c = -&*c);
    }
    if !z.iter().all(|c| c.abs().is_one()) {
        return Err(Error::Hypothesis(
            "fundamental cycle does not have unit coefficients".into(),
        ));
    }
    let labels: Vec<Vec<String>> = (0..=d)
        .map(|k| {
            x.labels(d - k)
                .iter()
                .map(|l| format!("{l}*"))
                .collect()
        })
        .collect();
    let mut boundaries: Vec<IntMatrix> = (1..=d)
        .map(|k| x.boundary_ref(d - k + 1).transpose())
        .collect();
    boundaries[0] = boundaries[0].scale_rows(&z);
    ChainComplex::new(labels, boundaries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{LaplacianKind, SimplicialComplex};
    use crate::linalg::char_poly;

    fn octahedron() -> ChainComplex {
        let mut facets = Vec::new();
        for a in [1, 2] {
            for b in [3, 4] {
                for c in [5, 6] {
                    facets.push(vec![a, b, c]);
                }
            }
        }
        SimplicialComplex::from_facets(6, &facets).unwrap().compile()
    }

    #[test]
    fn dual_shapes_and_chain_condition() {
        let x = octahedron();
        let y = dual_chain_complex(&x).unwrap();
        assert_eq!(y.num_cells(0), 8);
        assert_eq!(y.num_cells(1), 12);
        assert_eq!(y.num_cells(2), 6);
    }

    #[test]
    fn double_dual_matches_up_to_orientation() {
        let x = octahedron();
        let z = dual_chain_complex(&dual_chain_complex(&x).unwrap()).unwrap();
        for k in 0..=2 {
            assert_eq!(z.num_cells(k), x.num_cells(k));
        }
        for k in 0..2isize {
            let a = char_poly(&x.laplacian(k, LaplacianKind::UpDown).unwrap()).unwrap();
            let b = char_poly(&z.laplacian(k, LaplacianKind::UpDown).unwrap()).unwrap();
            assert_eq!(a, b);
        }
        assert_eq!(z.boundary_ref(1), x.boundary_ref(1));
    }

    #[test]
    fn requires_a_fundamental_cycle() {
        let disk = SimplicialComplex::from_facets(3, &[vec![1, 2, 3]]).unwrap().compile();
        assert!(matches!(dual_chain_complex(&disk), Err(Error::Hypothesis(_))));
    }
}
