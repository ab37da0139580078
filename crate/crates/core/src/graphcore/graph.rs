use crate::error::{Error, Result};

use super::orientation::Orientation;
use super::SubsetMask;

/// Largest vertex count representable with [`SubsetMask`].
pub const MAX_VERTICES: usize = 31;
/// Clique enumeration filters all `2^n` masks.
pub const MAX_CLIQUE_SEARCH: usize = 20;
/// Acyclic orientations are enumerated exhaustively.
pub const MAX_ORIENTATION_SEARCH: usize = 16;

/// A finite simple graph on the vertices `0..n`.
///
/// Edges are stored as `(min, max)` pairs in lexicographic order, next to a
/// neighbourhood mask per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<SubsetMask>,
}

impl Graph {
    /// Builds a graph, canonicalising edge order and dropping repeated edges.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n > MAX_VERTICES {
            return Err(Error::too_large("graph", n, MAX_VERTICES));
        }
        let mut canon = Vec::new();
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            canon.push((u.min(v), u.max(v)));
        }
        canon.sort_unstable();
        canon.dedup();
        let mut adj = vec![SubsetMask::EMPTY; n];
        for &(u, v) in &canon {
            adj[u] = adj[u].with(v);
            adj[v] = adj[v].with(u);
        }
        Ok(Graph {
            n,
            edges: canon,
            adj,
        })
    }

    pub fn empty(n: usize) -> Self {
        Graph::new(n, []).expect("edgeless graph")
    }

    pub fn complete(n: usize) -> Self {
        Graph::new(n, vertex_pairs(n)).expect("complete graph")
    }

    /// The path `0 - 1 - .. - (n-1)`.
    pub fn path(n: usize) -> Self {
        Graph::new(n, (1..n).map(|v| (v - 1, v))).expect("path graph")
    }

    /// The cycle `0 - 1 - .. - (n-1) - 0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        Graph::new(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle graph")
    }

    /// The graph whose edge set is selected by `mask` over [`vertex_pairs`]:
    /// bit `i` keeps the `i`-th pair in lexicographic order.
    ///
    /// Iterating `mask` over `0..2^(n(n-1)/2)` lists every labelled graph once.
    pub fn from_edge_mask(n: usize, mask: u64) -> Self {
        let pairs = vertex_pairs(n);
        let edges = pairs
            .into_iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, e)| e);
        Graph::new(n, edges).expect("edge mask graph")
    }

    /// Inverse of [`Graph::from_edge_mask`].
    pub fn edge_mask(&self) -> u64 {
        vertex_pairs(self.n)
            .into_iter()
            .enumerate()
            .filter(|&(_, (u, v))| self.has_edge(u, v))
            .fold(0, |m, (i, _)| m | 1 << i)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn vertex_set(&self) -> SubsetMask {
        SubsetMask::full(self.n)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    /// Position of `{u, v}` in [`Graph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    /// `N(v)`, the vertices adjacent to `v`.
    pub fn neighborhood(&self, v: usize) -> Result<SubsetMask> {
        self.adj
            .get(v)
            .copied()
            .ok_or(Error::VertexOutOfRange { vertex: v, n: self.n })
    }

    /// `N(u) ∩ N(v)`.
    pub fn common_neighborhood(&self, u: usize, v: usize) -> Result<SubsetMask> {
        Ok(self.neighborhood(u)? & self.neighborhood(v)?)
    }

    /// Whether `s` induces a complete subgraph. The empty set counts as a clique.
    pub fn is_clique(&self, s: SubsetMask) -> bool {
        s.vertices()
            .all(|v| s.without(v).is_subset_of(self.adj[v]))
    }

    /// All non-empty induced cliques, in increasing mask order.
    pub fn induced_cliques(&self) -> Result<Vec<SubsetMask>> {
        if self.n > MAX_CLIQUE_SEARCH {
            return Err(Error::too_large("clique enumeration", self.n, MAX_CLIQUE_SEARCH));
        }
        Ok(SubsetMask::all(self.n)
            .skip(1)
            .filter(|&s| self.is_clique(s))
            .collect())
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges
            .iter()
            .all(|&(u, v)| (self.adj[u] & self.adj[v]).is_empty())
    }

    /// The lexicographically smallest pair `u < v` inside `s` that is not an edge.
    pub fn smallest_non_edge_in(&self, s: SubsetMask) -> Option<(usize, usize)> {
        s.vertices().find_map(|u| {
            let missing = s.difference(self.adj[u]).without(u);
            missing
                .vertices()
                .find(|&v| v > u)
                .map(|v| (u, v))
        })
    }

    /// Whether `s` is non-empty and induces a connected subgraph.
    pub fn is_connected_subset(&self, s: SubsetMask) -> bool {
        match s.first() {
            None => false,
            Some(start) => self.reach_within(start, s) == s,
        }
    }

    /// Vertices reachable from `start` using only vertices of `within`.
    fn reach_within(&self, start: usize, within: SubsetMask) -> SubsetMask {
        let mut seen = SubsetMask::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = SubsetMask::EMPTY;
            for v in frontier.vertices() {
                next = next | self.adj[v];
            }
            frontier = next.intersection(within).difference(seen);
            seen = seen | frontier;
        }
        seen
    }

    /// The connected components, ordered by their smallest vertex.
    pub fn connected_components(&self) -> Vec<SubsetMask> {
        let mut rest = self.vertex_set();
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let comp = self.reach_within(v, rest);
            out.push(comp);
            rest = rest.difference(comp);
        }
        out
    }

    /// The component containing `v`.
    pub fn component_of(&self, v: usize) -> SubsetMask {
        self.reach_within(v, self.vertex_set())
    }

    /// Whether `s` is a biconnected subset: non-empty, connected, contained in
    /// a single component `C`, and with `C \ s` non-empty and connected.
    pub fn is_biconnected_subset(&self, s: SubsetMask) -> bool {
        if !self.is_connected_subset(s) {
            return false;
        }
        let comp = self.component_of(s.first().expect("non-empty"));
        self.is_connected_subset(comp.difference(s))
    }

    /// All acyclic orientations, by backtracking over the edges in order.
    ///
    /// Edge `i` of every returned orientation is `edges()[i]`, possibly reversed.
    /// Orientations are listed with `u -> v` (for `u < v`) explored first.
    pub fn acyclic_orientations(&self) -> Result<Vec<Orientation>> {
        if self.n > MAX_ORIENTATION_SEARCH {
            return Err(Error::too_large(
                "acyclic orientation enumeration",
                self.n,
                MAX_ORIENTATION_SEARCH,
            ));
        }
        let mut out = Vec::new();
        let mut arcs = Vec::with_capacity(self.edges.len());
        // reach[x] = vertices reachable from x (including x) via chosen arcs
        let reach: Vec<SubsetMask> = (0..self.n).map(SubsetMask::singleton).collect();
        self.orient_from(0, &reach, &mut arcs, &mut out);
        Ok(out)
    }

    fn orient_from(
        &self,
        i: usize,
        reach: &[SubsetMask],
        arcs: &mut Vec<(usize, usize)>,
        out: &mut Vec<Orientation>,
    ) {
        if i == self.edges.len() {
            out.push(Orientation::from_arcs_unchecked(self.n, arcs.clone()));
            return;
        }
        let (u, v) = self.edges[i];
        for (tail, head) in [(u, v), (v, u)] {
            if reach[head].contains(tail) {
                continue;
            }
            // everything reaching `tail` now also reaches everything `head` reaches
            let gained = reach[head];
            let next: Vec<SubsetMask> = reach
                .iter()
                .map(|&r| if r.contains(tail) { r | gained } else { r })
                .collect();
            arcs.push((tail, head));
            self.orient_from(i + 1, &next, arcs, out);
            arcs.pop();
        }
    }
}

/// All pairs `(u, v)` with `u < v < n`, lexicographically.
pub fn vertex_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}
