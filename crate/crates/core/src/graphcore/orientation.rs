use crate::error::{Error, Result};

use super::{Graph, SubsetMask};

/// A direction for every edge of a graph, stored as `(tail, head)` arcs in the
/// graph's edge order.
///
/// A permutation `σ` is a linear extension when every arc `a -> b` has `a`
/// placed before `b`. Upper sets are the vertex sets closed under following
/// arcs forward, so the suffixes of a linear extension are upper sets.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Orientation {
    n: usize,
    arcs: Vec<(usize, usize)>,
}

impl Orientation {
    /// Orients the edges of `g` as given by `arcs`, which must name every edge
    /// exactly once (in any order) and contain no directed cycle.
    pub fn new(g: &Graph, arcs: &[(usize, usize)]) -> Result<Self> {
        if arcs.len() != g.edges().len() {
            return Err(Error::InvalidOrientation);
        }
        let mut slots = vec![None; arcs.len()];
        for &(a, b) in arcs {
            let i = g.edge_index(a, b).ok_or(Error::InvalidOrientation)?;
            if slots[i].replace((a, b)).is_some() || a == b {
                return Err(Error::InvalidOrientation);
            }
        }
        let o = Orientation {
            n: g.n(),
            arcs: slots.into_iter().map(|a| a.expect("all slots filled")).collect(),
        };
        if !o.is_acyclic() {
            return Err(Error::InvalidOrientation);
        }
        Ok(o)
    }

    /// The orientation induced by a total order: each edge points from the
    /// vertex placed earlier to the one placed later.
    pub fn from_order(g: &Graph, perm: &[usize]) -> Result<Self> {
        let pos = permutation_positions(perm, g.n())?;
        let arcs = g
            .edges()
            .iter()
            .map(|&(u, v)| if pos[u] < pos[v] { (u, v) } else { (v, u) })
            .collect();
        Ok(Orientation { n: g.n(), arcs })
    }

    pub(crate) fn from_arcs_unchecked(n: usize, arcs: Vec<(usize, usize)>) -> Self {
        Orientation { n, arcs }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    /// Out-neighbour masks.
    pub fn successors(&self) -> Vec<SubsetMask> {
        let mut succ = vec![SubsetMask::EMPTY; self.n];
        for &(a, b) in &self.arcs {
            succ[a] = succ[a].with(b);
        }
        succ
    }

    fn predecessors(&self) -> Vec<SubsetMask> {
        let mut pred = vec![SubsetMask::EMPTY; self.n];
        for &(a, b) in &self.arcs {
            pred[b] = pred[b].with(a);
        }
        pred
    }

    pub fn is_acyclic(&self) -> bool {
        self.linear_extension().is_some()
    }

    /// The smallest-vertex-first topological order, if the orientation is acyclic.
    pub fn linear_extension(&self) -> Option<Vec<usize>> {
        let pred = self.predecessors();
        let mut placed = SubsetMask::EMPTY;
        let mut order = Vec::with_capacity(self.n);
        while order.len() < self.n {
            let next = (0..self.n)
                .find(|&v| !placed.contains(v) && pred[v].is_subset_of(placed))?;
            placed = placed.with(next);
            order.push(next);
        }
        Some(order)
    }

    /// Every linear extension, in lexicographic order.
    pub fn linear_extensions(&self) -> Vec<Vec<usize>> {
        let pred = self.predecessors();
        let mut out = Vec::new();
        let mut prefix = Vec::with_capacity(self.n);
        extend_orders(&pred, self.n, SubsetMask::EMPTY, &mut prefix, &mut out);
        out
    }

    pub fn is_linear_extension(&self, perm: &[usize]) -> bool {
        match permutation_positions(perm, self.n) {
            Ok(pos) => self.arcs.iter().all(|&(a, b)| pos[a] < pos[b]),
            Err(_) => false,
        }
    }

    /// Whether `s` is closed under following arcs forward.
    pub fn is_upper_set(&self, s: SubsetMask) -> bool {
        self.arcs
            .iter()
            .all(|&(a, b)| !s.contains(a) || s.contains(b))
    }

    /// All upper sets (including `∅` and `V`) in increasing mask order.
    pub fn upper_sets(&self) -> Vec<SubsetMask> {
        SubsetMask::all(self.n)
            .filter(|&s| self.is_upper_set(s))
            .collect()
    }
}

fn extend_orders(
    pred: &[SubsetMask],
    n: usize,
    placed: SubsetMask,
    prefix: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if prefix.len() == n {
        out.push(prefix.clone());
        return;
    }
    for v in 0..n {
        if !placed.contains(v) && pred[v].is_subset_of(placed) {
            prefix.push(v);
            extend_orders(pred, n, placed.with(v), prefix, out);
            prefix.pop();
        }
    }
}

/// `pos[v]` = index of `v` in `perm`; errors unless `perm` permutes `0..n`.
pub(crate) fn permutation_positions(perm: &[usize], n: usize) -> Result<Vec<usize>> {
    if perm.len() != n {
        return Err(Error::InvalidPermutation(n));
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in perm.iter().enumerate() {
        if v >= n || pos[v] != usize::MAX {
            return Err(Error::InvalidPermutation(n));
        }
        pos[v] = i;
    }
    Ok(pos)
}
