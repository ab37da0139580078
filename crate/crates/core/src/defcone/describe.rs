use crate::error::{Error, Result};
use crate::graphcore::{vertex_pairs, Graph, SubsetMask};

use super::{ConeDescription, FormTag, LinearForm};

/// Descriptions live in `R^{2^n}`.
pub const MAX_DESCRIPTION_VERTICES: usize = 16;

fn guard(g: &Graph) -> Result<()> {
    if g.n() > MAX_DESCRIPTION_VERTICES {
        return Err(Error::too_large("cone description", g.n(), MAX_DESCRIPTION_VERTICES));
    }
    Ok(())
}

/// The wall-crossing description: one form per pair of adjacent cells of the
/// refined braid fan, up to the symmetry of the circuit.
///
/// Equations: `h_∅ + h_V = 0`, then `n(u, v, S) = 0` for every non-edge
/// `{u, v}` and `S ⊆ V ∖ {u, v}`. Inequalities: `n(u, v, S) >= 0` for every
/// edge and `S ⊆ V ∖ {u, v}`. Pairs run lexicographically, `S` by mask.
pub fn generate_redundant_description(g: &Graph) -> Result<ConeDescription> {
    guard(g)?;
    let n = g.n();
    let mut equations = vec![LinearForm::apex(n)];
    let mut inequalities = Vec::new();
    for (u, v) in vertex_pairs(n) {
        let others = SubsetMask::full(n).without(u).without(v);
        let edge = g.has_edge(u, v);
        for rest in others.submasks() {
            if edge {
                let tag = FormTag::EdgeWall { u, v, rest };
                inequalities.push(LinearForm::wall(u, v, rest, tag));
            } else {
                let tag = FormTag::NonEdgeWall { u, v, rest };
                equations.push(LinearForm::wall(u, v, rest, tag));
            }
        }
    }
    Ok(ConeDescription {
        n,
        equations,
        inequalities,
    })
}

/// The irredundant description.
///
/// Equations: `h_∅ + h_V = 0`, then for each non-clique `S` with `|S| >= 2`
/// (ordered by size, then mask) the form `n(u, v, S ∖ {u, v})` for the
/// lexicographically smallest non-edge `{u, v} ⊆ S`. These are linearly
/// independent: `f_S` is the leading term of the form indexed by `S`.
///
/// Inequalities: `n(u, v, S) >= 0` for each edge `{u, v}` and each
/// `S ⊆ N(u) ∩ N(v)`. Every one of them defines a distinct facet.
pub fn generate_irredundant_description(g: &Graph) -> Result<ConeDescription> {
    guard(g)?;
    let n = g.n();
    let mut equations = vec![LinearForm::apex(n)];
    let mut non_cliques: Vec<SubsetMask> = SubsetMask::all(n)
        .filter(|s| s.len() >= 2 && !g.is_clique(*s))
        .collect();
    non_cliques.sort_by_key(|s| (s.len(), *s));
    for set in non_cliques {
        let (u, v) = g.smallest_non_edge_in(set).expect("non-clique has a non-edge");
        let rest = set.without(u).without(v);
        equations.push(LinearForm::wall(u, v, rest, FormTag::NonClique { set, u, v }));
    }
    let mut inequalities = Vec::new();
    for &(u, v) in g.edges() {
        let common = g.common_neighborhood(u, v)?;
        for rest in common.submasks() {
            let tag = FormTag::EdgeWall { u, v, rest };
            inequalities.push(LinearForm::wall(u, v, rest, tag));
        }
    }
    Ok(ConeDescription {
        n,
        equations,
        inequalities,
    })
}

/// Dimension counts of the deformation cone.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConeStats {
    /// Number of non-empty induced cliques.
    pub dim: usize,
    /// Translations, always `n`.
    pub lineality: usize,
    /// `Σ_{{u,v} ∈ E} 2^{|N(u) ∩ N(v)|}`.
    pub facets: usize,
    /// Simplicial modulo lineality, which happens exactly for triangle-free graphs.
    pub simplicial: bool,
}

pub fn stats(g: &Graph) -> Result<ConeStats> {
    guard(g)?;
    let facets = g
        .edges()
        .iter()
        .map(|&(u, v)| g.common_neighborhood(u, v).map(|c| 1usize << c.len()))
        .sum::<Result<usize>>()?;
    Ok(ConeStats {
        dim: g.induced_cliques()?.len(),
        lineality: g.n(),
        facets,
        simplicial: g.is_triangle_free(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(vs: &[usize]) -> SubsetMask {
        SubsetMask::from_vertices(vs.iter().copied())
    }

    fn c4() -> Graph {
        Graph::new(4, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap()
    }

    #[test]
    fn redundant_counts() {
        let k2 = generate_redundant_description(&Graph::complete(2)).unwrap();
        assert_eq!((k2.equations.len(), k2.inequalities.len()), (1, 1));
        let k3 = generate_redundant_description(&Graph::complete(3)).unwrap();
        assert_eq!((k3.equations.len(), k3.inequalities.len()), (1, 6));
        let c4 = generate_redundant_description(&c4()).unwrap();
        assert_eq!((c4.equations.len(), c4.inequalities.len()), (9, 16));
        assert!(generate_redundant_description(&Graph::empty(17)).is_err());
    }

    #[test]
    fn irredundant_k3_matches_the_listed_inequalities() {
        let d = generate_irredundant_description(&Graph::complete(3)).unwrap();
        assert_eq!(d.equations.len(), 1);
        assert_eq!(d.equations[0].coeffs(), &[(SubsetMask::EMPTY, 1), (set(&[0, 1, 2]), 1)]);
        // h_a + h_b >= h_∅ + h_ab and h_ac + h_bc >= h_c + h_abc
        let expected = [
            (set(&[0]), set(&[1]), SubsetMask::EMPTY, set(&[0, 1])),
            (set(&[0, 2]), set(&[1, 2]), set(&[2]), set(&[0, 1, 2])),
            (set(&[0]), set(&[2]), SubsetMask::EMPTY, set(&[0, 2])),
            (set(&[0, 1]), set(&[1, 2]), set(&[1]), set(&[0, 1, 2])),
            (set(&[1]), set(&[2]), SubsetMask::EMPTY, set(&[1, 2])),
            (set(&[0, 1]), set(&[0, 2]), set(&[0]), set(&[0, 1, 2])),
        ];
        assert_eq!(d.inequalities.len(), 6);
        for (form, (p, q, r, s)) in d.inequalities.iter().zip(expected) {
            assert_eq!(form.coefficient(p), 1);
            assert_eq!(form.coefficient(q), 1);
            assert_eq!(form.coefficient(r), -1);
            assert_eq!(form.coefficient(s), -1);
        }
    }

    #[test]
    fn irredundant_edgeless() {
        for n in 0..6 {
            let d = generate_irredundant_description(&Graph::empty(n)).unwrap();
            let big = SubsetMask::all(n).filter(|s| s.len() >= 2).count();
            assert_eq!(d.equations.len(), 1 + big);
            assert!(d.inequalities.is_empty());
        }
    }

    #[test]
    fn irredundant_c4_equations_are_pivoted_on_their_set() {
        let d = generate_irredundant_description(&c4()).unwrap();
        assert_eq!((d.equations.len(), d.inequalities.len()), (8, 4));
        for eq in &d.equations[1..] {
            let FormTag::NonClique { set, .. } = eq.tag() else {
                panic!("unexpected tag {}", eq.tag());
            };
            assert_eq!(eq.coefficient(set), -1);
            assert!(eq.coeffs().iter().all(|&(s, _)| s.is_subset_of(set)));
        }
    }

    #[test]
    fn stats_examples() {
        let k3 = stats(&Graph::complete(3)).unwrap();
        assert_eq!((k3.dim, k3.lineality, k3.facets, k3.simplicial), (7, 3, 6, false));
        let c4 = stats(&c4()).unwrap();
        assert_eq!((c4.dim, c4.lineality, c4.facets, c4.simplicial), (8, 4, 4, true));
        for n in 2..=6usize {
            let s = stats(&Graph::complete(n)).unwrap();
            assert_eq!(s.dim, (1 << n) - 1);
            assert_eq!(s.facets, n * (n - 1) / 2 * (1 << (n - 2)));
        }
    }
}
