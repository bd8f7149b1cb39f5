use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;

use super::ChainComplex;
use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

/// Abstract simplicial complex given by its facets, closed under subsets.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    vertices: Vec<u32>,
    facets: Vec<Vec<u32>>,
    faces: Vec<Vec<Vec<u32>>>,
}

/// Canonical label of a simplex: concatenated digits when every vertex is a
/// single digit, comma-separated otherwise.
pub fn simplex_label(s: &[u32]) -> String {
    if s.iter().all(|&v| v <= 9) {
        s.iter().map(|v| v.to_string()).collect()
    } else {
        s.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
    }
}

impl SimplicialComplex {
    /// Complex on vertex set `1..=n` generated by `facets`.
    pub fn from_facets(n: u32, facets: &[Vec<u32>]) -> Result<Self> {
        for f in facets {
            if let Some(&v) = f.iter().find(|&&v| v == 0 || v > n) {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
        }
        Self::on_vertices((1..=n).collect(), facets)
    }

    /// Complex on an explicit vertex set generated by `facets`. Every vertex is
    /// a face even if no facet contains it.
    pub fn on_vertices(vertices: Vec<u32>, facets: &[Vec<u32>]) -> Result<Self> {
        let vertex_set: BTreeSet<u32> = vertices.iter().copied().collect();
        let mut generators: BTreeSet<Vec<u32>> = BTreeSet::new();
        for f in facets {
            let mut s = f.clone();
            s.sort_unstable();
            s.dedup();
            if s.is_empty() {
                continue;
            }
            if let Some(&v) = s.iter().find(|v| !vertex_set.contains(v)) {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: vertices.iter().copied().max().unwrap_or(0),
                });
            }
            generators.insert(s);
        }
        for &v in &vertex_set {
            generators.insert(vec![v]);
        }
        let all: Vec<Vec<u32>> = generators.into_iter().collect();
        let maximal: Vec<Vec<u32>> = all
            .iter()
            .filter(|s| {
                !all.iter()
                    .any(|t| t.len() > s.len() && is_subset(s, t))
            })
            .cloned()
            .collect();
        let dim = maximal.iter().map(Vec::len).max().unwrap_or(1) - 1;
        let mut faces: Vec<BTreeSet<Vec<u32>>> = vec![BTreeSet::new(); dim + 1];
        for f in &maximal {
            for mask in 1u64..(1u64 << f.len()) {
                let s: Vec<u32> = (0..f.len())
                    .filter(|&i| mask >> i & 1 == 1)
                    .map(|i| f[i])
                    .collect();
                faces[s.len() - 1].insert(s);
            }
        }
        let mut facets = maximal;
        facets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(Self {
            vertices: vertex_set.into_iter().collect(),
            facets,
            faces: faces.into_iter().map(|s| s.into_iter().collect()).collect(),
        })
    }

    pub fn vertices(&self) -> &[u32] {
        &self.vertices
    }

    /// Maximal faces, ordered by dimension then lexicographically.
    pub fn facets(&self) -> &[Vec<u32>] {
        &self.facets
    }

    pub fn dim(&self) -> usize {
        self.faces.len() - 1
    }

    /// Faces of dimension `k` in lexicographic order.
    pub fn faces(&self, k: usize) -> &[Vec<u32>] {
        self.faces.get(k).map_or(&[], Vec::as_slice)
    }

    pub fn contains(&self, s: &[u32]) -> bool {
        s.is_empty()
            || self
                .faces(s.len() - 1)
                .binary_search_by(|f| f.as_slice().cmp(s))
                .is_ok()
    }

    pub fn is_pure(&self) -> bool {
        self.facets.iter().all(|f| f.len() == self.dim() + 1)
    }

    /// Chain complex with simplices oriented by increasing vertex order:
    /// removing the `i`-th vertex contributes sign `(−1)^i`.
    pub fn compile(&self) -> ChainComplex {
        let labels: Vec<Vec<String>> = self
            .faces
            .iter()
            .map(|fs| fs.iter().map(|s| simplex_label(s)).collect())
            .collect();
        let mut boundaries = Vec::with_capacity(self.dim());
        for k in 1..=self.dim() {
            let index: HashMap<&[u32], usize> = self.faces[k - 1]
                .iter()
                .enumerate()
                .map(|(i, s)| (s.as_slice(), i))
                .collect();
            let mut m = IntMatrix::zeros(self.faces[k - 1].len(), self.faces[k].len());
            for (j, s) in self.faces[k].iter().enumerate() {
                for i in 0..s.len() {
                    let mut face = s.clone();
                    face.remove(i);
                    let sign = if i % 2 == 0 { 1 } else { -1 };
                    m.set(index[face.as_slice()], j, BigInt::from(sign));
                }
            }
            boundaries.push(m);
        }
        ChainComplex::new(labels, boundaries)
            .expect("simplicial boundaries compose to zero")
            .with_simplices(self.faces.clone())
    }

    /// Faces of dimension at most `k`.
    pub fn skeleton(&self, k: usize) -> Self {
        let faces: Vec<Vec<Vec<u32>>> = self.faces.iter().take(k + 1).cloned().collect();
        let top: Vec<Vec<u32>> = faces.iter().flatten().cloned().collect();
        Self::on_vertices(self.vertices.clone(), &top).expect("faces use known vertices")
    }
}

fn is_subset(s: &[u32], t: &[u32]) -> bool {
    let mut it = t.iter();
    s.iter().all(|x| it.any(|y| y == x))
}

/// Deletion `Γ = {σ : v ∉ σ}` and link `Λ = {ρ : v ∉ ρ, ρ ∪ {v} ∈ Δ}` of a vertex.
/// The deletion keeps every other vertex; the link has exactly the vertices
/// adjacent to `v`.
pub fn delete_and_link(
    s: &SimplicialComplex,
    v: u32,
) -> Result<(SimplicialComplex, SimplicialComplex)> {
    if !s.vertices.contains(&v) {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n: s.vertices.iter().copied().max().unwrap_or(0),
        });
    }
    let others: Vec<u32> = s.vertices.iter().copied().filter(|&u| u != v).collect();
    let deletion_gens: Vec<Vec<u32>> = s
        .facets
        .iter()
        .map(|f| f.iter().copied().filter(|&u| u != v).collect())
        .collect();
    let link_gens: Vec<Vec<u32>> = s
        .facets
        .iter()
        .filter(|f| f.contains(&v) && f.len() > 1)
        .map(|f| f.iter().copied().filter(|&u| u != v).collect())
        .collect();
    let link_vertices: BTreeSet<u32> = link_gens.iter().flatten().copied().collect();
    let deletion = SimplicialComplex::on_vertices(others, &deletion_gens)?;
    let link = SimplicialComplex::on_vertices(link_vertices.into_iter().collect(), &link_gens)?;
    Ok((deletion, link))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rank_exact;

    fn bipyramid() -> SimplicialComplex {
        let facets = [[1, 2, 3], [1, 2, 4], [1, 2, 5], [1, 3, 4], [1, 3, 5], [2, 3, 4], [2, 3, 5]];
        SimplicialComplex::from_facets(5, &facets.map(|f| f.to_vec())).unwrap()
    }

    #[test]
    fn bipyramid_counts() {
        let b = bipyramid();
        assert_eq!(b.faces(2).len(), 7);
        assert_eq!(b.faces(1).len(), 9);
        assert_eq!(b.faces(0).len(), 5);
        let x = b.compile();
        assert_eq!(x.label(1, 0), "12");
        assert_eq!(rank_exact(x.boundary_ref(2)), 5);
    }

    #[test]
    fn edge_and_redundant_facets() {
        let e = SimplicialComplex::from_facets(2, &[vec![1, 2], vec![2]]).unwrap();
        assert_eq!(e.facets(), &[vec![1, 2]]);
        assert_eq!(e.dim(), 1);
        assert!(e.contains(&[]));
        assert!(e.contains(&[1, 2]));
        assert!(!e.contains(&[1, 3]));
        assert_eq!(
            SimplicialComplex::from_facets(2, &[vec![1, 3]]).unwrap_err(),
            Error::VertexOutOfRange { vertex: 3, n: 2 }
        );
    }

    #[test]
    fn all_triples_of_six() {
        let mut facets = Vec::new();
        for a in 1..=6 {
            for b in a + 1..=6 {
                for c in b + 1..=6 {
                    facets.push(vec![a, b, c]);
                }
            }
        }
        let k = SimplicialComplex::from_facets(6, &facets).unwrap();
        assert_eq!(k.faces(2).len(), 20);
        assert!(k.is_pure());
    }

    #[test]
    fn orientation_signs() {
        let t = SimplicialComplex::from_facets(3, &[vec![1, 2, 3]]).unwrap().compile();
        assert_eq!(t.labels(1), &["12", "13", "23"]);
        assert_eq!(t.boundary_ref(2), &IntMatrix::from_i64_rows(&[[1], [-1], [1]]));
        assert_eq!(
            t.boundary_ref(1),
            &IntMatrix::from_i64_rows(&[[-1, -1, 0], [1, 0, -1], [0, 1, 1]])
        );
    }

    #[test]
    fn long_labels() {
        assert_eq!(simplex_label(&[3, 10, 12]), "3,10,12");
        assert_eq!(simplex_label(&[1, 2]), "12");
    }

    #[test]
    fn cone_link_is_base() {
        let base = vec![vec![1, 2], vec![2, 3], vec![3, 1]];
        let cone: Vec<Vec<u32>> = base
            .iter()
            .map(|e| {
                let mut f = e.clone();
                f.push(4);
                f
            })
            .collect();
        let c = SimplicialComplex::from_facets(4, &cone).unwrap();
        let (deletion, link) = delete_and_link(&c, 4).unwrap();
        let b = SimplicialComplex::from_facets(3, &base).unwrap();
        assert_eq!(link, b);
        assert_eq!(deletion, b);
        let (_, lb) = delete_and_link(&bipyramid(), 1).unwrap();
        assert_eq!(lb.vertices(), &[2, 3, 4, 5]);
        assert_eq!(lb.faces(1).len(), 5);
    }

    #[test]
    fn skeleton_drops_top() {
        let b = bipyramid().skeleton(1);
        assert_eq!(b.dim(), 1);
        assert_eq!(b.faces(1).len(), 9);
    }
}
