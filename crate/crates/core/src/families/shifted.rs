//! Shifted simplicial complexes: faces form an order ideal in the
//! componentwise order.

use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::One;

use crate::complex::{delete_and_link, SimplicialComplex};
use crate::error::{Error, Result};

/// All increasing sequences of the same length lying componentwise below `f`.
fn below(f: &[u32]) -> Vec<Vec<u32>> {
    fn rec(f: &[u32], i: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == f.len() {
            out.push(cur.clone());
            return;
        }
        let lo = cur.last().map_or(1, |&v| v + 1);
        for v in lo..=f[i] {
            cur.push(v);
            rec(f, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(f, 0, &mut Vec::new(), &mut out);
    out
}

/// The smallest shifted complex containing the generating faces, on the
/// vertex set `1..=max vertex`.
pub fn shifted_complex(generators: &[Vec<u32>]) -> Result<SimplicialComplex> {
    let mut facets: BTreeSet<Vec<u32>> = BTreeSet::new();
    for g in generators {
        let mut g = g.clone();
        g.sort_unstable();
        g.dedup();
        if g.is_empty() || g[0] == 0 {
            return Err(Error::BadParameter("generators need positive vertices".into()));
        }
        facets.extend(below(&g));
    }
    let n = facets.iter().flatten().copied().max().unwrap_or(1);
    let facets: Vec<Vec<u32>> = facets.into_iter().collect();
    SimplicialComplex::from_facets(n, &facets)
}

/// Faces in each dimension form an order ideal under the componentwise order
/// on the vertex labels.
pub fn is_shifted(s: &SimplicialComplex) -> bool {
    let n = s.vertices().len() as u32;
    if s.vertices() != (1..=n).collect::<Vec<_>>() {
        return false;
    }
    (0..=s.dim()).all(|k| {
        s.faces(k).iter().all(|f| {
            (0..f.len()).all(|i| {
                let lo = if i == 0 { 1 } else { f[i - 1] + 1 };
                f[i] == lo || {
                    let mut g = f.clone();
                    g[i] -= 1;
                    s.contains(&g)
                }
            })
        })
    })
}

/// Signature `(S, T)` of a critical pair, with `T = {1, …, t}` stored as `t`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Signature {
    pub prefix: Vec<u32>,
    pub top: u32,
}

/// Signatures of the critical pairs `(σ, ρ)` of `Γ` in dimension `d`: `σ ∈ Γ`,
/// `ρ ∉ Γ`, and `ρ` covers `σ` by raising one entry by one. Entries of `ρ`
/// may exceed the vertex range.
pub fn critical_signatures(gamma: &SimplicialComplex, d: usize) -> Vec<Signature> {
    let mut out = Vec::new();
    for sigma in gamma.faces(d) {
        for j in 0..sigma.len() {
            let raised = sigma[j] + 1;
            if j + 1 < sigma.len() && sigma[j + 1] == raised {
                continue;
            }
            let mut rho = sigma.clone();
            rho[j] = raised;
            if !gamma.contains(&rho) {
                out.push(Signature {
                    prefix: sigma[..j].to_vec(),
                    top: sigma[j],
                });
            }
        }
    }
    out
}

/// Signatures of the deletion of vertex 1 of a pure shifted complex.
pub fn shifted_signatures(delta: &SimplicialComplex) -> Result<Vec<Signature>> {
    check(delta)?;
    let (gamma, _) = delete_and_link(delta, 1)?;
    Ok(critical_signatures(&gamma, delta.dim()))
}

fn check(delta: &SimplicialComplex) -> Result<()> {
    if !delta.is_pure() {
        return Err(Error::NotShifted("complex is not pure".into()));
    }
    if !is_shifted(delta) {
        return Err(Error::NotShifted("faces are not a componentwise order ideal".into()));
    }
    Ok(())
}

/// Vertex-weighted tree count of a pure shifted complex:
/// `v_1^{|Λ_{d−1}|} Π_{j≥2} v_j^{deg_Λ(j)} Π_{(S,T)} v_1^{−1} Σ_{j∈T} v_j`,
/// with `Λ` the link of vertex 1 and `v[i]` the weight of vertex `i + 1`.
pub fn shifted_tau_coarse(delta: &SimplicialComplex, v: &[BigRational]) -> Result<BigRational> {
    check(delta)?;
    let n = delta.vertices().len();
    if v.len() != n {
        return Err(Error::BadParameter(format!("need {n} vertex weights")));
    }
    let d = delta.dim();
    let (gamma, link) = delete_and_link(delta, 1)?;
    let link_top: Vec<&Vec<u32>> = if d == 0 {
        Vec::new()
    } else {
        link.faces(d - 1).iter().collect()
    };
    let mut out = BigRational::one();
    for _ in &link_top {
        out *= &v[0];
    }
    for f in &link_top {
        for &j in f.iter() {
            out *= &v[j as usize - 1];
        }
    }
    for sig in critical_signatures(&gamma, d) {
        let sum: BigRational = v[..sig.top as usize].iter().sum();
        out *= sum / &v[0];
    }
    Ok(out)
}

/// Number of facets containing each vertex, as a weakly decreasing list.
pub fn facet_degrees(delta: &SimplicialComplex) -> Vec<usize> {
    let mut deg: Vec<usize> = delta
        .vertices()
        .iter()
        .map(|v| delta.facets().iter().filter(|f| f.contains(v)).count())
        .collect();
    deg.sort_unstable_by(|a, b| b.cmp(a));
    deg
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bipyramid_is_generated_by_235() {
        let b = shifted_complex(&[vec![2, 3, 5]]).unwrap();
        let expected = [[1, 2, 3], [1, 2, 4], [1, 2, 5], [1, 3, 4], [1, 3, 5], [2, 3, 4], [2, 3, 5]];
        assert_eq!(b.facets(), &expected.map(|f| f.to_vec()));
        assert!(is_shifted(&b));
        let other = SimplicialComplex::from_facets(3, &[vec![2, 3]]).unwrap();
        assert!(!is_shifted(&other));
    }

    #[test]
    fn triangle_signature() {
        let k3 = shifted_complex(&[vec![2, 3]]).unwrap();
        let sigs = shifted_signatures(&k3).unwrap();
        assert_eq!(sigs, vec![Signature { prefix: vec![2], top: 3 }]);
        let v: Vec<BigRational> = [2, 3, 5].iter().map(|&x| BigRational::from_integer(x.into())).collect();
        assert_eq!(
            shifted_tau_coarse(&k3, &v).unwrap(),
            BigRational::from_integer((2 * 3 * 5 * 10).into())
        );
    }

    #[test]
    fn rejects_non_shifted() {
        let path = SimplicialComplex::from_facets(3, &[vec![1, 3], vec![2, 3]]).unwrap();
        assert!(matches!(shifted_signatures(&path), Err(Error::NotShifted(_))));
    }
}
