//! Concrete polytopes `P_h`: support vectors, vertices through acyclic
//! orientations, and a brute-force validity check.
//!
//! For `h` in the deformation cone and a linear extension `σ` of an acyclic
//! orientation, the suffixes `∅ = S_0 ⊂ S_1 ⊂ .. ⊂ S_n = V` of `σ` are tight
//! at one common vertex `x`. Since `<i_{S_k}, x> - <i_{S_{k-1}}, x> = 2 x_{v_k}`
//! for `v_k = S_k ∖ S_{k-1}`, the vertex is `x_{v_k} = (h_{S_k} - h_{S_{k-1}}) / 2`.

use crate::defcone::{generate_irredundant_description, require_in_cone, HeightVector};
use crate::error::{Error, Result};
use crate::graphcore::{Graph, SubsetMask};
use crate::scalar::half;
use crate::Scalar;

pub use crate::graphcore::Orientation;

/// Vertex enumeration walks every acyclic orientation; keep it small.
pub const MAX_VERTEX_VERTICES: usize = 10;

/// Support vector of `Z_G`: `h_S = #{e : e ∩ S ≠ ∅} - #{e : e ∩ S = ∅}`.
pub fn support_of_zonotope<T: Scalar>(g: &Graph) -> HeightVector<T> {
    HeightVector::from_int_fn(g.n(), |s| {
        g.edges()
            .iter()
            .map(|&(u, v)| if s.contains(u) || s.contains(v) { 1 } else { -1 })
            .sum()
    })
}

/// `<i_S, x>` with `i_S = +1` on `S` and `-1` off it.
pub fn pairing<T: Scalar>(s: SubsetMask, x: &[T]) -> T {
    x.iter().enumerate().fold(T::zero(), |acc, (v, c)| {
        if s.contains(v) {
            acc + c.clone()
        } else {
            acc - c.clone()
        }
    })
}

/// The vertex tight on the suffix chain of `perm`. No cone check.
pub fn vertex_of_linear_extension<T: Scalar>(h: &HeightVector<T>, perm: &[usize]) -> Vec<T> {
    let mut x = vec![T::zero(); h.n()];
    let mut prev = SubsetMask::EMPTY;
    for &v in perm.iter().rev() {
        let next = prev.with(v);
        x[v] = half(h[next].clone() - h[prev].clone());
        prev = next;
    }
    x
}

fn check_orientation(g: &Graph, omega: &Orientation) -> Result<()> {
    let matches = omega.n() == g.n()
        && omega.arcs().len() == g.edges().len()
        && omega
            .arcs()
            .iter()
            .zip(g.edges())
            .all(|(&(a, b), &e)| (a.min(b), a.max(b)) == e);
    if matches && omega.is_acyclic() {
        Ok(())
    } else {
        Err(Error::InvalidOrientation)
    }
}

/// The vertex of `P_h` in the normal cone of `omega`.
pub fn vertex_of_orientation<T: Scalar>(
    g: &Graph,
    h: &HeightVector<T>,
    omega: &Orientation,
) -> Result<Vec<T>> {
    check_orientation(g, omega)?;
    require_in_cone(&generate_irredundant_description(g)?, h)?;
    let perm = omega.linear_extension().ok_or(Error::InvalidOrientation)?;
    Ok(vertex_of_linear_extension(h, &perm))
}

/// Distinct points, sorted lexicographically.
#[derive(Clone, Debug, PartialEq)]
pub struct VertexSet<T> {
    points: Vec<Vec<T>>,
}

impl<T: Scalar> VertexSet<T> {
    pub fn new(mut points: Vec<Vec<T>>) -> Self {
        points.sort_by(|a, b| a.partial_cmp(b).expect("comparable coordinates"));
        points.dedup();
        VertexSet { points }
    }

    pub fn points(&self) -> &[Vec<T>] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, x: &[T]) -> bool {
        self.points.iter().any(|p| p.as_slice() == x)
    }
}

fn guard(g: &Graph) -> Result<()> {
    if g.n() > MAX_VERTEX_VERTICES {
        return Err(Error::too_large("vertex enumeration", g.n(), MAX_VERTEX_VERTICES));
    }
    Ok(())
}

/// One vertex per acyclic orientation, deduplicated.
pub fn vertices<T: Scalar>(g: &Graph, h: &HeightVector<T>) -> Result<VertexSet<T>> {
    guard(g)?;
    if h.n() != g.n() {
        return Err(Error::DimensionMismatch {
            expected: 1 << g.n(),
            got: h.values().len(),
        });
    }
    require_in_cone(&generate_irredundant_description(g)?, h)?;
    let points = g
        .acyclic_orientations()?
        .iter()
        .map(|o| {
            let perm = o.linear_extension().expect("enumerated orientations are acyclic");
            vertex_of_linear_extension(h, &perm)
        })
        .collect();
    Ok(VertexSet::new(points))
}

#[derive(Clone, Debug, PartialEq)]
pub struct PolytopeReport<T> {
    /// Distinct candidate vertices checked.
    pub vertex_count: usize,
    /// `max_{S, x} <i_S, x> - h_S`; the check passes when this is `<= 0`.
    pub max_violation: Option<T>,
    /// Subsets with some candidate vertex strictly beyond `h_S`, and by how much.
    pub violations: Vec<(SubsetMask, T)>,
    /// Subsets whose inequality is tight at no candidate vertex.
    pub untight: Vec<SubsetMask>,
}

impl<T: Scalar> PolytopeReport<T> {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Applies the vertex formula for every acyclic orientation (without
/// checking cone membership) and tests the results against all `2^n`
/// inequalities `<i_S, x> <= h_S`.
pub fn validate_polytope<T: Scalar>(g: &Graph, h: &HeightVector<T>) -> Result<PolytopeReport<T>> {
    guard(g)?;
    if h.n() != g.n() {
        return Err(Error::DimensionMismatch {
            expected: 1 << g.n(),
            got: h.values().len(),
        });
    }
    let candidates = VertexSet::new(
        g.acyclic_orientations()?
            .iter()
            .map(|o| vertex_of_linear_extension(h, &o.linear_extension().expect("acyclic")))
            .collect(),
    );
    Ok(validate_points(h, candidates.points()))
}

/// Tests the given points against all `2^n` inequalities `<i_S, x> <= h_S`.
pub fn validate_points<T: Scalar>(h: &HeightVector<T>, points: &[Vec<T>]) -> PolytopeReport<T> {
    let mut max_violation: Option<T> = None;
    let mut violations = Vec::new();
    let mut untight = Vec::new();
    for s in SubsetMask::all(h.n()) {
        let best = points
            .iter()
            .map(|x| pairing(s, x) - h[s].clone())
            .fold(None, |m: Option<T>, d| match m {
                Some(m) if m >= d => Some(m),
                _ => Some(d),
            });
        let Some(best) = best else { continue };
        if best > T::zero() {
            violations.push((s, best.clone()));
        } else if best < T::zero() {
            untight.push(s);
        }
        if max_violation.as_ref().is_none_or(|m| best > *m) {
            max_violation = Some(best);
        }
    }
    PolytopeReport {
        vertex_count: points.len(),
        max_violation,
        violations,
        untight,
    }
}
