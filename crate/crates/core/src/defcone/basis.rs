use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graphcore::{Graph, SubsetMask};
use crate::Scalar;

use super::{generate_irredundant_description, require_in_cone, HeightVector};

/// Height vector of the simplex face `Δ_K = conv{ e_k : k ∈ K }`:
/// `h_S = +1` if `K` meets `S`, `-1` otherwise.
pub fn simplex_heights<T: Scalar>(k: SubsetMask, n: usize) -> HeightVector<T> {
    HeightVector::from_int_fn(n, |s| if (s & k).is_empty() { -1 } else { 1 })
}

/// `Δ_K` for every non-empty induced clique `K` of `g`.
pub fn clique_basis_heights<T: Scalar>(g: &Graph) -> Result<BTreeMap<SubsetMask, HeightVector<T>>> {
    Ok(g.induced_cliques()?
        .into_iter()
        .map(|k| (k, simplex_heights(k, g.n())))
        .collect())
}

/// `Σ_K y_K · h(Δ_K)`.
pub fn combine_simplices<T: Scalar>(n: usize, coefficients: &BTreeMap<SubsetMask, T>) -> HeightVector<T> {
    coefficients
        .iter()
        .fold(HeightVector::zeros(n), |acc, (&k, y)| {
            acc.add_scaled(y, &simplex_heights(k, n))
        })
}

/// Coordinates of `h` in the basis `{Δ_K}` of non-empty induced cliques.
///
/// Writing `g(T) = Σ_{∅ ≠ K ⊆ T} y_K`, one has
/// `h_S = g(V) - 2 g(V ∖ S)` and `h_∅ = -g(V)`, so
/// `g(T) = (-h_∅ - h_{V∖T}) / 2` and the `y_K` follow by Möbius inversion
/// over the subset lattice. For `h` in the linear span the coefficients of
/// non-cliques come out zero.
pub fn decompose_in_clique_basis<T: Scalar>(
    g: &Graph,
    h: &HeightVector<T>,
) -> Result<BTreeMap<SubsetMask, T>> {
    let desc = generate_irredundant_description(g)?;
    if h.n() != g.n() {
        return Err(Error::DimensionMismatch {
            expected: 1 << g.n(),
            got: h.values().len(),
        });
    }
    if let Some(eq) = desc.equations.iter().find(|f| !f.eval(h).is_zero()) {
        return Err(Error::NotInSpan(eq.tag()));
    }
    let n = g.n();
    let full = SubsetMask::full(n);
    let two = T::from_int(2);
    let mut y: Vec<T> = SubsetMask::all(n)
        .map(|t| (-h[SubsetMask::EMPTY].clone() - h[full.difference(t)].clone()) / two.clone())
        .collect();
    for bit in 0..n {
        for mask in 0..y.len() {
            if mask >> bit & 1 == 1 {
                let lower = y[mask ^ (1 << bit)].clone();
                y[mask] = y[mask].clone() - lower;
            }
        }
    }
    let mut out = BTreeMap::new();
    for (i, coeff) in y.into_iter().enumerate() {
        let k = SubsetMask::from_bits(i as u32);
        if !k.is_empty() && g.is_clique(k) {
            out.insert(k, coeff);
        } else if !coeff.is_zero() {
            return Err(Error::Invariant(format!(
                "height vector satisfies the span equations but has weight {coeff} on non-clique {k}"
            )));
        }
    }
    Ok(out)
}

/// A deformation of a triangle-free graphical zonotope written as a
/// translation plus nonnegative multiples of edge segments.
#[derive(Clone, Debug, PartialEq)]
pub struct ZonotopalDecomposition<T> {
    /// Coefficient of the point `Δ_{{v}} = e_v`, per vertex.
    pub translation: Vec<T>,
    /// `λ_e >= 0` per edge `(u, v)`, `u < v`.
    pub edges: BTreeMap<(usize, usize), T>,
}

impl<T: Scalar> ZonotopalDecomposition<T> {
    /// Edges with a non-zero coefficient: the subgraph whose graphical
    /// zonotope is normally equivalent to the decomposed polytope.
    pub fn support(&self) -> Vec<(usize, usize)> {
        self.edges
            .iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(&e, _)| e)
            .collect()
    }
}

/// For triangle-free `g` and `h` in the deformation cone, the unique
/// expression `h = Σ_v t_v e_v + Σ_e λ_e Δ_e` with `λ_e >= 0`.
pub fn triangle_free_decompose<T: Scalar>(
    g: &Graph,
    h: &HeightVector<T>,
) -> Result<ZonotopalDecomposition<T>> {
    if !g.is_triangle_free() {
        return Err(Error::NotTriangleFree);
    }
    require_in_cone(&generate_irredundant_description(g)?, h)?;
    let coeffs = decompose_in_clique_basis(g, h)?;
    let translation = (0..g.n())
        .map(|v| coeffs[&SubsetMask::singleton(v)].clone())
        .collect();
    let mut edges = BTreeMap::new();
    for &(u, v) in g.edges() {
        let lambda = coeffs[&SubsetMask::pair(u, v)].clone();
        if lambda < T::zero() {
            return Err(Error::Invariant(format!(
                "negative coefficient {lambda} on edge {{{u},{v}}} of a triangle-free cone"
            )));
        }
        edges.insert((u, v), lambda);
    }
    Ok(ZonotopalDecomposition { translation, edges })
}
