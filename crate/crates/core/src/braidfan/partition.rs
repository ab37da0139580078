use crate::error::{Error, Result};
use crate::graphcore::{Graph, Orientation, SubsetMask};

/// Exhaustive enumeration of ordered partitions.
pub const MAX_PARTITION_VERTICES: usize = 7;

/// A face of the graphical fan: a partition of `V` into connected parts
/// together with an acyclic orientation of the quotient graph.
///
/// Parts are listed in an order that is a linear extension of the quotient
/// orientation; `precedes` holds one `(i, j)` pair (with `i < j`) for each
/// pair of parts joined by an edge of the graph, meaning part `i` points to
/// part `j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrderedPartition {
    parts: Vec<SubsetMask>,
    precedes: Vec<(usize, usize)>,
}

impl OrderedPartition {
    /// Validates and canonicalises an ordered partition of `g`. `precedes`
    /// gives, for each quotient edge, the direction as indices into `parts`.
    pub fn new(g: &Graph, parts: Vec<SubsetMask>, precedes: &[(usize, usize)]) -> Result<Self> {
        let mut covered = SubsetMask::EMPTY;
        for &p in &parts {
            if p.is_empty() || !(p & covered).is_empty() {
                return Err(Error::InvalidPartition("parts must be non-empty and disjoint".into()));
            }
            if !p.is_subset_of(g.vertex_set()) || !g.is_connected_subset(p) {
                return Err(Error::InvalidPartition(format!("part {p} is not connected in the graph")));
            }
            covered = covered | p;
        }
        if covered != g.vertex_set() {
            return Err(Error::InvalidPartition("parts do not cover the vertex set".into()));
        }
        let quotient = quotient_graph(g, &parts);
        let arcs: Vec<(usize, usize)> = precedes.to_vec();
        let orientation = Orientation::new(&quotient, &arcs)
            .map_err(|_| Error::InvalidPartition("precedences must orient every quotient edge acyclically".into()))?;
        Ok(canonical(&parts, &orientation))
    }

    pub fn parts(&self) -> &[SubsetMask] {
        &self.parts
    }

    pub fn precedences(&self) -> &[(usize, usize)] {
        &self.precedes
    }

    /// `reach[i]` = indices of parts reachable from part `i` (including `i`),
    /// the transitive closure of the quotient orientation.
    pub fn reachability(&self) -> Vec<SubsetMask> {
        let k = self.parts.len();
        let mut reach: Vec<SubsetMask> = (0..k).map(SubsetMask::singleton).collect();
        // parts are topologically ordered, so a reverse sweep closes everything
        for i in (0..k).rev() {
            for &(a, b) in &self.precedes {
                if a == i {
                    reach[i] = reach[i] | reach[b];
                }
            }
        }
        reach
    }

    /// Whether the cone of `self` is a face of the cone of `other`, i.e. the
    /// rays of `self` are among the rays of `other`.
    pub fn is_face_of(&self, g: &Graph, other: &OrderedPartition) -> bool {
        let mine = cone_rays_of_ordered_partition(g, self);
        let theirs = cone_rays_of_ordered_partition(g, other);
        mine.iter().all(|s| theirs.binary_search(s).is_ok())
    }
}

fn quotient_graph(g: &Graph, parts: &[SubsetMask]) -> Graph {
    let mut owner = vec![0; g.n()];
    for (i, p) in parts.iter().enumerate() {
        for v in p.vertices() {
            owner[v] = i;
        }
    }
    let edges = g
        .edges()
        .iter()
        .map(|&(u, v)| (owner[u], owner[v]))
        .filter(|(a, b)| a != b);
    Graph::new(parts.len(), edges).expect("quotient graph")
}

/// Reorders parts along the smallest-first linear extension and re-indexes
/// the precedence pairs accordingly.
fn canonical(parts: &[SubsetMask], orientation: &Orientation) -> OrderedPartition {
    let order = orientation.linear_extension().expect("acyclic quotient orientation");
    let mut position = vec![0; parts.len()];
    for (i, &p) in order.iter().enumerate() {
        position[p] = i;
    }
    let mut precedes: Vec<(usize, usize)> = orientation
        .arcs()
        .iter()
        .map(|&(a, b)| (position[a], position[b]))
        .collect();
    precedes.sort_unstable();
    OrderedPartition {
        parts: order.iter().map(|&i| parts[i]).collect(),
        precedes,
    }
}

/// All ordered partitions of `g`: every set partition into connected parts,
/// paired with every acyclic orientation of its quotient graph.
pub fn enumerate_ordered_partitions(g: &Graph) -> Result<Vec<OrderedPartition>> {
    if g.n() > MAX_PARTITION_VERTICES {
        return Err(Error::too_large("ordered partition enumeration", g.n(), MAX_PARTITION_VERTICES));
    }
    let mut partitions = Vec::new();
    connected_partitions(g, g.vertex_set(), &mut Vec::new(), &mut partitions);
    let mut out = Vec::new();
    for parts in partitions {
        let quotient = quotient_graph(g, &parts);
        for orientation in quotient.acyclic_orientations()? {
            out.push(canonical(&parts, &orientation));
        }
    }
    Ok(out)
}

/// Set partitions of `rest` into connected blocks, blocks ordered by their
/// smallest vertex.
fn connected_partitions(
    g: &Graph,
    rest: SubsetMask,
    blocks: &mut Vec<SubsetMask>,
    out: &mut Vec<Vec<SubsetMask>>,
) {
    let Some(v) = rest.first() else {
        out.push(blocks.clone());
        return;
    };
    let others = rest.without(v);
    for extra in others.submasks() {
        let block = extra.with(v);
        if g.is_connected_subset(block) {
            blocks.push(block);
            connected_partitions(g, rest.difference(block), blocks, out);
            blocks.pop();
        }
    }
}

/// The subsets `S` (including `∅` and `V`) with `i_S` in the cone of the
/// ordered partition: unions of parts forming an upper set of the quotient
/// orientation. Sorted by mask.
pub fn cone_rays_of_ordered_partition(_g: &Graph, op: &OrderedPartition) -> Vec<SubsetMask> {
    let k = op.parts.len();
    let reach = op.reachability();
    let mut out: Vec<SubsetMask> = SubsetMask::all(k)
        .filter(|chosen| chosen.vertices().all(|i| reach[i].is_subset_of(*chosen)))
        .map(|chosen| {
            chosen
                .vertices()
                .fold(SubsetMask::EMPTY, |acc, i| acc | op.parts[i])
        })
        .collect();
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(vs: &[usize]) -> SubsetMask {
        SubsetMask::from_vertices(vs.iter().copied())
    }

    #[test]
    fn counts_for_small_graphs() {
        assert_eq!(enumerate_ordered_partitions(&Graph::complete(1)).unwrap().len(), 1);
        assert_eq!(enumerate_ordered_partitions(&Graph::complete(2)).unwrap().len(), 3);
        assert_eq!(enumerate_ordered_partitions(&Graph::complete(3)).unwrap().len(), 13);
        assert_eq!(enumerate_ordered_partitions(&Graph::empty(3)).unwrap().len(), 1);
        assert!(enumerate_ordered_partitions(&Graph::empty(8)).is_err());
    }

    #[test]
    fn k2_partitions_are_explicit() {
        let g = Graph::complete(2);
        let ops = enumerate_ordered_partitions(&g).unwrap();
        let single = OrderedPartition::new(&g, vec![set(&[0, 1])], &[]).unwrap();
        let up = OrderedPartition::new(&g, vec![set(&[0]), set(&[1])], &[(0, 1)]).unwrap();
        let down = OrderedPartition::new(&g, vec![set(&[0]), set(&[1])], &[(1, 0)]).unwrap();
        assert_eq!(down.parts(), &[set(&[1]), set(&[0])]);
        for op in [&single, &up, &down] {
            assert!(ops.contains(op));
        }
    }

    #[test]
    fn rays_of_ordered_partitions() {
        let k2 = Graph::complete(2);
        let single = OrderedPartition::new(&k2, vec![set(&[0, 1])], &[]).unwrap();
        assert_eq!(
            cone_rays_of_ordered_partition(&k2, &single),
            vec![SubsetMask::EMPTY, set(&[0, 1])]
        );
        let up = OrderedPartition::new(&k2, vec![set(&[0]), set(&[1])], &[(0, 1)]).unwrap();
        assert_eq!(
            cone_rays_of_ordered_partition(&k2, &up),
            vec![SubsetMask::EMPTY, set(&[1]), set(&[0, 1])]
        );
        let k3 = Graph::complete(3);
        let op = OrderedPartition::new(&k3, vec![set(&[0]), set(&[1, 2])], &[(0, 1)]).unwrap();
        assert_eq!(
            cone_rays_of_ordered_partition(&k3, &op),
            vec![SubsetMask::EMPTY, set(&[1, 2]), set(&[0, 1, 2])]
        );
        assert!(single.is_face_of(&k2, &up));
        assert!(!up.is_face_of(&k2, &single));
    }

    #[test]
    fn invalid_partitions_are_rejected() {
        let p3 = Graph::path(3);
        // {0,2} is disconnected
        assert!(OrderedPartition::new(&p3, vec![set(&[0, 2]), set(&[1])], &[(0, 1)]).is_err());
        // overlap
        assert!(OrderedPartition::new(&p3, vec![set(&[0, 1]), set(&[1, 2])], &[(0, 1)]).is_err());
        // missing a quotient edge direction
        assert!(OrderedPartition::new(&p3, vec![set(&[0]), set(&[1]), set(&[2])], &[(0, 1)]).is_err());
        // not covering
        assert!(OrderedPartition::new(&p3, vec![set(&[0, 1])], &[]).is_err());
    }
}
