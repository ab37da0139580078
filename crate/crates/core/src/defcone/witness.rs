//! Certificates that each irredundant inequality defines its own facet.
//!
//! For an edge `{u, v}` and `S ⊆ N(u) ∩ N(v)` with `T = N(u) ∩ N(v) ∖ S`, the
//! witness is
//!
//! ```text
//! w = Σ_{s∈S} t^{uvs} - Σ_{t∈T} t^{uvt} + (|S|/2) c^{uv} + Σ_{{a,b} ∈ E∖{u,v}} c^{ab}
//! ```
//!
//! where `t^{xyz}_X = [{x,y,z} ⊆ X]` and `c^{xy}_X = [|{x,y} ∩ X| = 1]`. It
//! vanishes on every non-edge form, is strictly positive on every other facet
//! form, and is `<= 0` on `n(u, v, S)`.
//!
//! `w` is additionally shifted by the constant `(|T| - |S|)/2`. Constants are
//! killed by every wall form, and the shift makes `w_∅ + w_V = 0`, so the
//! witness lies in the linear span of the cone and not just on the non-edge
//! hyperplanes.

use crate::error::{Error, Result};
use crate::graphcore::{vertex_pairs, Graph, SubsetMask};
use crate::Scalar;

use super::{FormTag, HeightVector, LinearForm};

/// `t^{xyz}`: 1 on subsets containing all of `x, y, z`.
pub fn triple_vector<T: Scalar>(n: usize, x: usize, y: usize, z: usize) -> HeightVector<T> {
    let xyz = SubsetMask::from_vertices([x, y, z]);
    HeightVector::from_int_fn(n, |s| i64::from(xyz.is_subset_of(s)))
}

/// `c^{xy}`: 1 on subsets separating `x` from `y`.
pub fn cut_vector<T: Scalar>(n: usize, x: usize, y: usize) -> HeightVector<T> {
    HeightVector::from_int_fn(n, |s| i64::from(s.contains(x) != s.contains(y)))
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum WitnessScale {
    /// Coefficients exactly as in the construction, `|S|/2` included.
    #[default]
    Literal,
    /// Twice the literal witness; always integral.
    Doubled,
}

/// The facet witness for the inequality `n(u, v, s) >= 0`.
pub fn build_facet_witness<T: Scalar>(
    g: &Graph,
    u: usize,
    v: usize,
    s: SubsetMask,
) -> Result<HeightVector<T>> {
    build_facet_witness_scaled(g, u, v, s, WitnessScale::Literal)
}

pub fn build_facet_witness_scaled<T: Scalar>(
    g: &Graph,
    u: usize,
    v: usize,
    s: SubsetMask,
    scale: WitnessScale,
) -> Result<HeightVector<T>> {
    let n = g.n();
    let (u, v) = (u.min(v), u.max(v));
    if !g.has_edge(u, v) {
        return Err(Error::Precondition(format!("{{{u},{v}}} is not an edge")));
    }
    let common = g.common_neighborhood(u, v)?;
    if !s.is_subset_of(common) {
        return Err(Error::Precondition(format!(
            "{s} is not contained in N({u}) ∩ N({v}) = {common}"
        )));
    }
    let t = common.difference(s);
    // twice the witness, in integers: 2 t^S - 2 t^T + |S| c^{uv} + 2 Σ c^{ab} - (|S| - |T|)
    let doubled = HeightVector::<T>::from_int_fn(n, |x| {
        let mut value = 0i64;
        if x.contains(u) && x.contains(v) {
            value += 2 * (x & s).len() as i64;
            value -= 2 * (x & t).len() as i64;
        }
        for &(a, b) in g.edges() {
            if x.contains(a) != x.contains(b) {
                value += if (a, b) == (u, v) { s.len() as i64 } else { 2 };
            }
        }
        value - (s.len() as i64 - t.len() as i64)
    });
    Ok(match scale {
        WitnessScale::Doubled => doubled,
        WitnessScale::Literal => doubled.scale(&(T::one() / T::from_int(2))),
    })
}

/// Which clauses of the witness system hold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessReport {
    /// `<w, n(u,v,S)> <= 0`.
    pub designated_not_positive: bool,
    /// `<w, n(u,v,X)> > 0` for the other `X ⊆ N(u) ∩ N(v)`.
    pub same_edge_positive: bool,
    /// `<w, n(a,b,X)> > 0` for the other edges and `X ⊆ N(a) ∩ N(b)`.
    pub other_edges_positive: bool,
    /// `<w, n(a,b,X)> = 0` for every non-edge and every `X`.
    pub non_edges_vanish: bool,
    /// `w_∅ + w_V = 0`.
    pub apex_holds: bool,
    /// The first form breaking a clause.
    pub first_failure: Option<FormTag>,
}

impl WitnessReport {
    pub fn holds(&self) -> bool {
        self.designated_not_positive
            && self.same_edge_positive
            && self.other_edges_positive
            && self.non_edges_vanish
            && self.apex_holds
    }
}

/// Evaluates all wall forms at `w` and reports the witness clauses for the
/// facet `(u, v, s)`.
pub fn check_facet_witness<T: Scalar>(
    g: &Graph,
    u: usize,
    v: usize,
    s: SubsetMask,
    w: &HeightVector<T>,
) -> Result<WitnessReport> {
    let n = g.n();
    if w.n() != n {
        return Err(Error::DimensionMismatch {
            expected: 1 << n,
            got: w.values().len(),
        });
    }
    let (u, v) = (u.min(v), u.max(v));
    let mut report = WitnessReport {
        designated_not_positive: true,
        same_edge_positive: true,
        other_edges_positive: true,
        non_edges_vanish: true,
        apex_holds: LinearForm::apex(n).eval(w).is_zero(),
        first_failure: None,
    };
    if !report.apex_holds {
        report.first_failure = Some(FormTag::Apex);
    }
    let zero = T::zero();
    for (a, b) in vertex_pairs(n) {
        if g.has_edge(a, b) {
            let common = g.common_neighborhood(a, b)?;
            for x in common.submasks() {
                let tag = FormTag::EdgeWall { u: a, v: b, rest: x };
                let value = LinearForm::wall(a, b, x, tag).eval(w);
                let (ok, clause) = if (a, b) == (u, v) && x == s {
                    (value <= zero, &mut report.designated_not_positive)
                } else if (a, b) == (u, v) {
                    (value > zero, &mut report.same_edge_positive)
                } else {
                    (value > zero, &mut report.other_edges_positive)
                };
                if !ok {
                    *clause = false;
                    report.first_failure.get_or_insert(tag);
                }
            }
        } else {
            let others = SubsetMask::full(n).without(a).without(b);
            for x in others.submasks() {
                let tag = FormTag::NonEdgeWall { u: a, v: b, rest: x };
                if !LinearForm::wall(a, b, x, tag).eval(w).is_zero() {
                    report.non_edges_vanish = false;
                    report.first_failure.get_or_insert(tag);
                }
            }
        }
    }
    Ok(report)
}
