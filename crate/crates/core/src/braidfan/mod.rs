//! The refined braid fan: rays `i_S`, its simplicial cells `(σ, apex)`, the
//! adjacencies between cells with their unique linear dependences, and the
//! ordered partitions indexing the faces of the graphical fan.
//!
//! Cells are kept symbolic. A cell is a permutation `σ` of the vertices plus an
//! apex in `{∅, V}`; its rays are `i_S` for the non-empty proper suffixes `S`
//! of `σ` together with `i_∅` or `i_V`.

mod partition;

pub use partition::{cone_rays_of_ordered_partition, enumerate_ordered_partitions, OrderedPartition};

use std::fmt;

use crate::error::{Error, Result};
use crate::graphcore::{permutation_positions, Graph, SubsetMask};

/// Cell enumeration visits `2 · n!` cells.
pub const MAX_FAN_VERTICES: usize = 8;

/// The `±1` vector `i_S = Σ_{v ∈ S} e_v - Σ_{v ∉ S} e_v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RayVector(Vec<i64>);

impl RayVector {
    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn dot<T: crate::Scalar>(&self, x: &[T]) -> T {
        self.0
            .iter()
            .zip(x)
            .fold(T::zero(), |acc, (&c, xv)| {
                if c > 0 {
                    acc + xv.clone()
                } else {
                    acc - xv.clone()
                }
            })
    }
}

pub fn ray_vector(s: SubsetMask, n: usize) -> RayVector {
    RayVector((0..n).map(|v| if s.contains(v) { 1 } else { -1 }).collect())
}

/// The `n + 1` suffixes `∅ ⊂ {σ_last} ⊂ .. ⊂ V` of a permutation read as a
/// total order; these are its upper sets.
pub fn upper_sets(perm: &[usize]) -> Result<Vec<SubsetMask>> {
    permutation_positions(perm, perm.len())?;
    let mut chain = Vec::with_capacity(perm.len() + 1);
    let mut s = SubsetMask::EMPTY;
    chain.push(s);
    for &v in perm.iter().rev() {
        s = s.with(v);
        chain.push(s);
    }
    Ok(chain)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Apex {
    /// The cell contains `i_∅ = -1_V`.
    Empty,
    /// The cell contains `i_V = 1_V`.
    Full,
}

/// A maximal cell of the refined braid fan.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RefinedCell {
    perm: Vec<usize>,
    apex: Apex,
}

impl RefinedCell {
    pub fn new(perm: Vec<usize>, apex: Apex) -> Result<Self> {
        permutation_positions(&perm, perm.len())?;
        Ok(RefinedCell { perm, apex })
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn apex(&self) -> Apex {
        self.apex
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    /// The `n` subsets `S` whose vectors `i_S` span the cell: non-empty proper
    /// suffixes of the permutation, then the apex set.
    pub fn rays(&self) -> Vec<SubsetMask> {
        let n = self.n();
        let chain = upper_sets(&self.perm).expect("validated permutation");
        let mut rays: Vec<SubsetMask> = chain[1..n].to_vec();
        rays.push(match self.apex {
            Apex::Empty => SubsetMask::EMPTY,
            Apex::Full => SubsetMask::full(n),
        });
        rays
    }
}

impl fmt::Display for RefinedCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let apex = match self.apex {
            Apex::Empty => "∅",
            Apex::Full => "V",
        };
        write!(f, "{:?}^{apex}", self.perm)
    }
}

/// An integer linear relation `Σ c_S i_S = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearDependence {
    terms: Vec<(SubsetMask, i64)>,
}

impl LinearDependence {
    pub fn terms(&self) -> &[(SubsetMask, i64)] {
        &self.terms
    }

    /// `Σ c_S i_S` evaluated coordinate-wise; zero for a genuine dependence.
    pub fn combination(&self, n: usize) -> Vec<i64> {
        let mut acc = vec![0; n];
        for &(s, c) in &self.terms {
            for (a, r) in acc.iter_mut().zip(ray_vector(s, n).coords()) {
                *a += c * r;
            }
        }
        acc
    }

    pub fn coefficient(&self, s: SubsetMask) -> i64 {
        self.terms
            .iter()
            .filter(|(t, _)| *t == s)
            .map(|(_, c)| c)
            .sum()
    }
}

/// How two adjacent cells differ.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Adjacency {
    /// Same permutation, apex `∅` versus apex `V`.
    ApexSwap,
    /// Permutations `P u v S` and `P v u S` with the same apex; `rest` is `S`.
    Transposition { u: usize, v: usize, rest: SubsetMask },
}

impl Adjacency {
    /// The unique relation supported on the rays of both cells.
    pub fn dependence(&self, n: usize) -> LinearDependence {
        let terms = match *self {
            Adjacency::ApexSwap => vec![(SubsetMask::EMPTY, 1), (SubsetMask::full(n), 1)],
            Adjacency::Transposition { u, v, rest } => vec![
                (rest.with(u), 1),
                (rest.with(v), 1),
                (rest, -1),
                (rest.with(u).with(v), -1),
            ],
        };
        LinearDependence { terms }
    }
}

/// Classifies a pair of cells, or fails if they do not share a facet.
pub fn adjacency(a: &RefinedCell, b: &RefinedCell) -> Result<Adjacency> {
    if a.n() != b.n() {
        return Err(Error::NotAdjacent);
    }
    if a.perm == b.perm {
        return if a.apex != b.apex {
            Ok(Adjacency::ApexSwap)
        } else {
            Err(Error::NotAdjacent)
        };
    }
    if a.apex != b.apex {
        return Err(Error::NotAdjacent);
    }
    let diff: Vec<usize> = (0..a.n()).filter(|&i| a.perm[i] != b.perm[i]).collect();
    match diff[..] {
        [i, j] if j == i + 1 && a.perm[i] == b.perm[j] && a.perm[j] == b.perm[i] => {
            let rest = SubsetMask::from_vertices(a.perm[j + 1..].iter().copied());
            Ok(Adjacency::Transposition {
                u: a.perm[i],
                v: a.perm[j],
                rest,
            })
        }
        _ => Err(Error::NotAdjacent),
    }
}

/// An unordered pair of adjacent cells and the circuit they support.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjacentPair {
    pub first: RefinedCell,
    pub second: RefinedCell,
    pub kind: Adjacency,
    pub dependence: LinearDependence,
}

/// Every unordered pair of adjacent maximal cells, generated combinatorially:
/// one apex swap per permutation, and for each apex one transposition pair per
/// permutation and ascent position.
pub fn adjacent_cell_pairs(n: usize) -> Result<impl Iterator<Item = AdjacentPair>> {
    if n > MAX_FAN_VERTICES {
        return Err(Error::too_large("refined braid fan", n, MAX_FAN_VERTICES));
    }
    Ok(Permutations::new(n).flat_map(move |perm| {
        let mut pairs = Vec::new();
        let lower = RefinedCell { perm: perm.clone(), apex: Apex::Empty };
        let upper = RefinedCell { perm: perm.clone(), apex: Apex::Full };
        let kind = Adjacency::ApexSwap;
        pairs.push(AdjacentPair {
            first: lower,
            second: upper,
            kind,
            dependence: kind.dependence(n),
        });
        for apex in [Apex::Empty, Apex::Full] {
            for i in 0..n.saturating_sub(1) {
                if perm[i] > perm[i + 1] {
                    continue;
                }
                let mut swapped = perm.clone();
                swapped.swap(i, i + 1);
                let kind = Adjacency::Transposition {
                    u: perm[i],
                    v: perm[i + 1],
                    rest: SubsetMask::from_vertices(perm[i + 2..].iter().copied()),
                };
                pairs.push(AdjacentPair {
                    first: RefinedCell { perm: perm.clone(), apex },
                    second: RefinedCell { perm: swapped, apex },
                    kind,
                    dependence: kind.dependence(n),
                });
            }
        }
        pairs
    }))
}

/// Whether two adjacent cells lie in the same maximal cone of the graphical
/// fan of `g`: apex swaps always do, a transposition of `u, v` does iff
/// `{u, v}` is not an edge.
pub fn same_graphical_cone(g: &Graph, a: &RefinedCell, b: &RefinedCell) -> Result<bool> {
    if a.n() != g.n() {
        return Err(Error::DimensionMismatch {
            expected: g.n(),
            got: a.n(),
        });
    }
    Ok(match adjacency(a, b)? {
        Adjacency::ApexSwap => true,
        Adjacency::Transposition { u, v, .. } => !g.has_edge(u, v),
    })
}

/// All cells of the refined braid fan on `n` vertices, `2 · n!` of them.
pub fn cells(n: usize) -> Result<Vec<RefinedCell>> {
    if n > MAX_FAN_VERTICES {
        return Err(Error::too_large("refined braid fan", n, MAX_FAN_VERTICES));
    }
    Ok(Permutations::new(n)
        .flat_map(|perm| {
            [Apex::Empty, Apex::Full].map(|apex| RefinedCell {
                perm: perm.clone(),
                apex,
            })
        })
        .collect())
}

/// Permutations of `0..n` in lexicographic order.
#[derive(Clone, Debug)]
pub struct Permutations {
    next: Option<Vec<usize>>,
}

impl Permutations {
    pub fn new(n: usize) -> Self {
        Permutations {
            next: Some((0..n).collect()),
        }
    }
}

impl Iterator for Permutations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let cur = self.next.take()?;
        let mut p = cur.clone();
        if let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) {
            let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).expect("ascent");
            p.swap(i - 1, j);
            p[i..].reverse();
            self.next = Some(p);
        }
        Some(cur)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(vs: &[usize]) -> SubsetMask {
        SubsetMask::from_vertices(vs.iter().copied())
    }

    #[test]
    fn ray_vectors() {
        assert_eq!(ray_vector(set(&[0]), 3).coords(), &[1, -1, -1]);
        assert_eq!(ray_vector(SubsetMask::EMPTY, 3).coords(), &[-1, -1, -1]);
        assert_eq!(ray_vector(set(&[0, 1]), 2).coords(), &[1, 1]);
        for n in 0..5 {
            let full: Vec<i64> = ray_vector(SubsetMask::full(n), n).coords().to_vec();
            let neg: Vec<i64> = ray_vector(SubsetMask::EMPTY, n).coords().iter().map(|c| -c).collect();
            assert_eq!(full, neg);
        }
    }

    #[test]
    fn upper_set_chains() {
        assert_eq!(
            upper_sets(&[0, 1, 2]).unwrap(),
            vec![SubsetMask::EMPTY, set(&[2]), set(&[1, 2]), set(&[0, 1, 2])]
        );
        assert_eq!(
            upper_sets(&[2, 0, 1]).unwrap(),
            vec![SubsetMask::EMPTY, set(&[1]), set(&[0, 1]), set(&[0, 1, 2])]
        );
        assert_eq!(upper_sets(&[0]).unwrap(), vec![SubsetMask::EMPTY, set(&[0])]);
        assert!(upper_sets(&[0, 0]).is_err());
    }

    #[test]
    fn cells_have_n_rays() {
        let c = RefinedCell::new(vec![1, 0, 2], Apex::Full).unwrap();
        assert_eq!(c.rays(), vec![set(&[2]), set(&[0, 2]), set(&[0, 1, 2])]);
        assert!(RefinedCell::new(vec![1, 1], Apex::Empty).is_err());
    }

    #[test]
    fn two_vertex_dependences() {
        let pairs: Vec<AdjacentPair> = adjacent_cell_pairs(2).unwrap().collect();
        let apex = pairs
            .iter()
            .find(|p| p.kind == Adjacency::ApexSwap)
            .unwrap();
        assert_eq!(apex.dependence.terms(), &[(SubsetMask::EMPTY, 1), (set(&[0, 1]), 1)]);
        let swap = pairs
            .iter()
            .find(|p| p.first.apex() == Apex::Empty && p.kind != Adjacency::ApexSwap)
            .unwrap();
        assert_eq!(swap.first.perm(), &[0, 1]);
        assert_eq!(swap.second.perm(), &[1, 0]);
        assert_eq!(swap.dependence.coefficient(set(&[0])), 1);
        assert_eq!(swap.dependence.coefficient(set(&[1])), 1);
        assert_eq!(swap.dependence.coefficient(SubsetMask::EMPTY), -1);
        assert_eq!(swap.dependence.coefficient(set(&[0, 1])), -1);
    }

    #[test]
    fn pair_counts() {
        assert_eq!(adjacent_cell_pairs(3).unwrap().count(), 18);
        assert_eq!(adjacent_cell_pairs(2).unwrap().count(), 4);
        assert!(adjacent_cell_pairs(9).is_err());
    }

    #[test]
    fn same_cone_classification() {
        let k3 = Graph::complete(3);
        let a = RefinedCell::new(vec![0, 1, 2], Apex::Empty).unwrap();
        let b = RefinedCell::new(vec![1, 0, 2], Apex::Empty).unwrap();
        let c = RefinedCell::new(vec![0, 1, 2], Apex::Full).unwrap();
        let d = RefinedCell::new(vec![2, 1, 0], Apex::Empty).unwrap();
        assert!(!same_graphical_cone(&k3, &a, &b).unwrap());
        assert!(same_graphical_cone(&Graph::empty(3), &a, &b).unwrap());
        assert!(same_graphical_cone(&k3, &a, &c).unwrap());
        assert_eq!(same_graphical_cone(&k3, &a, &d), Err(Error::NotAdjacent));
        assert_eq!(same_graphical_cone(&k3, &b, &c), Err(Error::NotAdjacent));
    }

    #[test]
    fn permutations_are_lexicographic() {
        let all: Vec<Vec<usize>> = Permutations::new(3).collect();
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], vec![0, 1, 2]);
        assert_eq!(all[5], vec![2, 1, 0]);
        assert_eq!(Permutations::new(0).count(), 1);
        assert_eq!(cells(3).unwrap().len(), 12);
    }
}
