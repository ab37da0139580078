//! Cone-level oracles: projection to clique coordinates, extreme rays,
//! equality of two H-descriptions and facet tests.
//!
//! Nothing here looks at the closed-form facet structure. [`cones_equal`] and
//! [`is_facet`] work from the raw forms alone: equations are compared by rank,
//! inequalities are pulled back to a kernel basis of the equations, and
//! implication between inequalities is decided by an exact Farkas LP.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::defcone::{simplex_heights, ConeDescription, FormTag, HeightVector, LinearForm};
use crate::error::{Error, Result};
use crate::graphcore::{Graph, SubsetMask};
use crate::Rational;

use super::dd::{extreme_rays_of, primitive, primitive_from_rationals};
use super::{conic_combination, Matrix};

/// A pointed cone `{ y : <a, y> >= 0 }` in clique coordinates.
///
/// Coordinates are the induced cliques of size at least two; the singleton
/// cliques span the translations and are quotiented out.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointedConeRep {
    pub n: usize,
    pub coords: Vec<SubsetMask>,
    pub constraints: Vec<(FormTag, Vec<BigInt>)>,
}

impl PointedConeRep {
    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    /// Height vector `Σ_K y_K h(Δ_K)` of a point in these coordinates.
    pub fn heights_of(&self, y: &[BigInt]) -> HeightVector<Rational> {
        self.coords
            .iter()
            .zip(y)
            .fold(HeightVector::zeros(self.n), |acc, (&k, c)| {
                acc.add_scaled(&Rational::from_integer(c.clone()), &simplex_heights(k, self.n))
            })
    }

    /// Indices of constraints that define facets: a constraint counts when
    /// its normal is an extreme ray of the cone of all normals and it is the
    /// first constraint with that direction.
    pub fn facet_indices(&self) -> Vec<usize> {
        let normals: Vec<Vec<BigInt>> = self.constraints.iter().map(|(_, a)| a.clone()).collect();
        facet_flags(&normals)
            .into_iter()
            .enumerate()
            .filter_map(|(i, f)| f.then_some(i))
            .collect()
    }
}

/// `<form, h(Δ_K)>` for every clique `K`.
fn clique_coefficients(form: &LinearForm, cliques: &[SubsetMask]) -> Vec<BigInt> {
    cliques
        .iter()
        .map(|&k| {
            form.coeffs()
                .iter()
                .map(|&(s, c)| if (s & k).is_empty() { -c } else { c })
                .sum::<i64>()
                .into()
        })
        .collect()
}

/// Rewrites `desc` in clique coordinates.
///
/// Every equation must vanish on all clique vectors, and every inequality on
/// the singleton cliques; otherwise `desc` does not describe a cone whose
/// span is the clique span and an invariant error is returned.
pub fn project_to_span(g: &Graph, desc: &ConeDescription) -> Result<PointedConeRep> {
    if desc.n != g.n() {
        return Err(Error::DimensionMismatch {
            expected: g.n(),
            got: desc.n,
        });
    }
    let cliques = g.induced_cliques()?;
    for eq in &desc.equations {
        if clique_coefficients(eq, &cliques).iter().any(|c| !c.is_zero()) {
            return Err(Error::Invariant(format!(
                "equation {} does not vanish on the clique span",
                eq.tag()
            )));
        }
    }
    let keep: Vec<usize> = (0..cliques.len()).filter(|&i| cliques[i].len() >= 2).collect();
    let mut constraints = Vec::with_capacity(desc.inequalities.len());
    for f in &desc.inequalities {
        let full = clique_coefficients(f, &cliques);
        if cliques
            .iter()
            .zip(&full)
            .any(|(k, c)| k.len() == 1 && !c.is_zero())
        {
            return Err(Error::Invariant(format!(
                "inequality {} is not translation invariant",
                f.tag()
            )));
        }
        constraints.push((f.tag(), keep.iter().map(|&i| full[i].clone()).collect()));
    }
    Ok(PointedConeRep {
        n: g.n(),
        coords: keep.iter().map(|&i| cliques[i]).collect(),
        constraints,
    })
}

/// Extreme rays of a pointed cone, as primitive integer vectors in
/// lexicographic order. Constraints are inserted sorted by tag.
pub fn extreme_rays(rep: &PointedConeRep) -> Result<Vec<Vec<BigInt>>> {
    let mut sorted: Vec<&(FormTag, Vec<BigInt>)> = rep.constraints.iter().collect();
    sorted.sort_by_key(|(t, _)| *t);
    let normals: Vec<Vec<BigInt>> = sorted.into_iter().map(|(_, a)| a.clone()).collect();
    extreme_rays_of(&normals, rep.dim())
}

/// Facet test through the rays: `normal` is valid and the rays it vanishes
/// on span a hyperplane.
pub fn is_facet_by_rays(rep: &PointedConeRep, rays: &[Vec<BigInt>], normal: &[BigInt]) -> bool {
    let values: Vec<BigInt> = rays
        .iter()
        .map(|r| r.iter().zip(normal).map(|(x, y)| x * y).sum())
        .collect();
    if values.iter().any(Signed::is_negative) || normal.iter().all(Zero::is_zero) {
        return false;
    }
    let active: Vec<Vec<Rational>> = rays
        .iter()
        .zip(&values)
        .filter(|(_, v)| v.is_zero())
        .map(|(r, _)| r.iter().map(|x| Rational::from_integer(x.clone())).collect())
        .collect();
    let rank = Matrix::from_rows(rep.dim(), active).map_or(0, |m| m.rank());
    rank + 1 == rep.dim()
}

fn to_rationals(v: &[BigInt]) -> Vec<Rational> {
    v.iter().map(|x| Rational::from_integer(x.clone())).collect()
}

/// Marks the rows that define facets of `{ z : <a_i, z> >= 0 }`: the first
/// row of each direction that is extreme in the cone spanned by all rows.
pub fn facet_flags(normals: &[Vec<BigInt>]) -> Vec<bool> {
    let directions: Vec<Vec<BigInt>> = normals.iter().map(|a| primitive(a)).collect();
    let mut first: BTreeMap<&Vec<BigInt>, usize> = BTreeMap::new();
    for (i, d) in directions.iter().enumerate() {
        first.entry(d).or_insert(i);
    }
    let distinct: Vec<usize> = first.values().copied().collect();
    let mut flags = vec![false; normals.len()];
    for &i in &distinct {
        if directions[i].iter().all(Zero::is_zero) {
            continue;
        }
        let others: Vec<Vec<Rational>> = distinct
            .iter()
            .filter(|&&j| j != i && directions[j].iter().any(|x| !x.is_zero()))
            .map(|&j| to_rationals(&directions[j]))
            .collect();
        flags[i] = conic_combination(&others, &to_rationals(&directions[i])).is_none();
    }
    flags
}

/// Inequalities and equations pulled back along a kernel basis of the
/// equations, so the cone becomes full-dimensional.
#[derive(Clone, Debug)]
pub struct SpanProjection {
    pub n: usize,
    /// Rank of the equation system.
    pub equation_rank: usize,
    /// Kernel basis of the equations, one vector per coordinate.
    pub basis: Vec<Vec<Rational>>,
}

impl SpanProjection {
    pub fn new(desc: &ConeDescription) -> Result<Self> {
        let m = equation_matrix(desc)?;
        Ok(SpanProjection {
            n: desc.n,
            equation_rank: m.rank(),
            basis: m.kernel(),
        })
    }

    /// The form restricted to the span, as a primitive integer vector.
    pub fn project(&self, form: &LinearForm) -> Vec<BigInt> {
        let coords: Vec<Rational> = self
            .basis
            .iter()
            .map(|b| {
                form.coeffs()
                    .iter()
                    .fold(Rational::zero(), |acc, &(s, c)| {
                        acc + b[s.index()].clone() * Rational::from_integer(c.into())
                    })
            })
            .collect();
        primitive_from_rationals(&coords)
    }
}

/// Equations of `desc` as dense rows over `R^{2^n}`.
pub fn equation_matrix(desc: &ConeDescription) -> Result<Matrix<Rational>> {
    let cols = 1usize << desc.n;
    let rows = desc.equations.iter().map(|f| f.dense(desc.n)).collect();
    Matrix::from_rows(cols, rows)
}

/// Which side of a comparison a form came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    A,
    B,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Mismatch {
    /// Different ambient dimension.
    Ambient,
    /// The equation systems have different row spaces.
    SpanDiffers { rank_a: usize, rank_b: usize, rank_joint: usize },
    /// An inequality of one side is not implied by the other side.
    NotImplied { side: Side, tag: FormTag },
}

/// One facet of the common cone and the tags that define it on each side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetMatch {
    pub normal: Vec<BigInt>,
    pub a_tags: Vec<FormTag>,
    pub b_tags: Vec<FormTag>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeComparison {
    pub equal: bool,
    pub mismatch: Option<Mismatch>,
    /// Dimension of the common linear span, when the spans agree.
    pub span_dim: Option<usize>,
    /// Facets, each with every tag whose direction matches it.
    pub facets: Vec<FacetMatch>,
}

impl ConeComparison {
    fn unequal(mismatch: Mismatch) -> Self {
        ConeComparison {
            equal: false,
            mismatch: Some(mismatch),
            span_dim: None,
            facets: Vec::new(),
        }
    }

    /// Every facet is matched by exactly one tag on the given side.
    pub fn irredundant_on(&self, side: Side) -> bool {
        self.facets.iter().all(|f| match side {
            Side::A => f.a_tags.len() == 1,
            Side::B => f.b_tags.len() == 1,
        })
    }
}

/// Do two descriptions on the same ambient space cut out the same cone?
pub fn cones_equal(a: &ConeDescription, b: &ConeDescription) -> Result<ConeComparison> {
    if a.n != b.n {
        return Ok(ConeComparison::unequal(Mismatch::Ambient));
    }
    let ea = equation_matrix(a)?;
    let eb = equation_matrix(b)?;
    let joint = Matrix::from_rows(
        1 << a.n,
        a.equations
            .iter()
            .chain(&b.equations)
            .map(|f| f.dense::<Rational>(a.n))
            .collect(),
    )?;
    let (rank_a, rank_b, rank_joint) = (ea.rank(), eb.rank(), joint.rank());
    if rank_a != rank_joint || rank_b != rank_joint {
        return Ok(ConeComparison::unequal(Mismatch::SpanDiffers {
            rank_a,
            rank_b,
            rank_joint,
        }));
    }
    let proj = SpanProjection::new(a)?;
    let pa: Vec<Vec<BigInt>> = a.inequalities.iter().map(|f| proj.project(f)).collect();
    let pb: Vec<Vec<BigInt>> = b.inequalities.iter().map(|f| proj.project(f)).collect();

    for (side, forms, own, other) in [
        (Side::B, &b.inequalities, &pb, &pa),
        (Side::A, &a.inequalities, &pa, &pb),
    ] {
        let generators: Vec<Vec<Rational>> = other.iter().map(|v| to_rationals(v)).collect();
        for (f, v) in forms.iter().zip(own) {
            let direct = v.iter().all(Zero::is_zero) || other.contains(v);
            if !direct && conic_combination(&generators, &to_rationals(v)).is_none() {
                return Ok(ConeComparison::unequal(Mismatch::NotImplied { side, tag: f.tag() }));
            }
        }
    }

    let mut facets: Vec<FacetMatch> = Vec::new();
    for (i, is_facet) in facet_flags(&pa).into_iter().enumerate() {
        if !is_facet {
            continue;
        }
        let normal = pa[i].clone();
        let tags = |forms: &[LinearForm], proj_rows: &[Vec<BigInt>]| -> Vec<FormTag> {
            forms
                .iter()
                .zip(proj_rows)
                .filter(|(_, v)| **v == normal)
                .map(|(f, _)| f.tag())
                .collect()
        };
        facets.push(FacetMatch {
            a_tags: tags(&a.inequalities, &pa),
            b_tags: tags(&b.inequalities, &pb),
            normal,
        });
    }
    facets.sort_by(|x, y| x.normal.cmp(&y.normal));
    Ok(ConeComparison {
        equal: true,
        mismatch: None,
        span_dim: Some(proj.basis.len()),
        facets,
    })
}

/// Does `form` define a facet of the cone of `desc`?
///
/// The form must be valid on the cone and its restriction to the span must
/// point along an extreme ray of the cone of inequality normals. When several
/// inequalities of `desc` restrict to the same direction, only the first of
/// them is reported as the facet; the others are implied by it.
pub fn is_facet(desc: &ConeDescription, form: &LinearForm) -> Result<bool> {
    if form.coeffs().iter().any(|(s, _)| s.index() >= 1 << desc.n) {
        return Err(Error::DimensionMismatch {
            expected: 1 << desc.n,
            got: form.coeffs().last().map_or(0, |(s, _)| s.index() + 1),
        });
    }
    let proj = SpanProjection::new(desc)?;
    let q = proj.project(form);
    if q.iter().all(Zero::is_zero) {
        return Ok(false);
    }
    let rows: Vec<Vec<BigInt>> = desc.inequalities.iter().map(|f| proj.project(f)).collect();
    let flags = facet_flags(&rows);
    let first_same = rows.iter().position(|r| *r == q);
    match first_same {
        Some(i) if flags[i] => Ok(match desc.inequalities.iter().position(|f| f == form) {
            Some(own) => own == i,
            None => true,
        }),
        _ => Ok(false),
    }
}

/// [`is_facet`] for every inequality of `desc`, sharing one projection.
pub fn inequality_facet_flags(desc: &ConeDescription) -> Result<Vec<bool>> {
    let proj = SpanProjection::new(desc)?;
    let rows: Vec<Vec<BigInt>> = desc.inequalities.iter().map(|f| proj.project(f)).collect();
    Ok(facet_flags(&rows))
}

/// Number of facets and dimension of the pointed cone obtained from `desc`
/// by quotienting the lineality `{ h : every form vanishes }`.
pub fn pointed_facets_and_dim(desc: &ConeDescription) -> Result<(usize, usize)> {
    let proj = SpanProjection::new(desc)?;
    let rows: Vec<Vec<BigInt>> = desc.inequalities.iter().map(|f| proj.project(f)).collect();
    let facets = facet_flags(&rows).into_iter().filter(|&f| f).count();
    let rank = Matrix::from_rows(proj.basis.len(), rows.iter().map(|r| to_rationals(r)).collect())?
        .rank();
    Ok((facets, rank))
}

/// `true` for the zero vector and for vectors with a positive leading entry.
pub fn leading_positive(v: &[BigInt]) -> bool {
    v.iter().find(|x| !x.is_zero()).is_none_or(|x| x.is_positive())
}

/// Positive scalar multiple test for integer vectors.
pub fn positively_parallel(a: &[BigInt], b: &[BigInt]) -> bool {
    a.len() == b.len() && primitive(a) == primitive(b) && !a.iter().all(Zero::is_zero)
}

#[cfg(test)]
fn unit(dim: usize, i: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); dim];
    v[i] = BigInt::from(1);
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::defcone::{generate_irredundant_description, generate_redundant_description};

    #[test]
    fn k3_bipyramid() {
        let g = Graph::complete(3);
        let rep = project_to_span(&g, &generate_irredundant_description(&g).unwrap()).unwrap();
        assert_eq!(rep.dim(), 4);
        assert_eq!(rep.constraints.len(), 6);
        let rays = extreme_rays(&rep).unwrap();
        assert_eq!(rays.len(), 5);
        // the three edge directions are rays
        for i in 0..3 {
            assert!(rays.contains(&unit(4, i)));
        }
        assert_eq!(rep.facet_indices().len(), 6);
        for (_, a) in &rep.constraints {
            assert!(is_facet_by_rays(&rep, &rays, a));
        }
    }

    #[test]
    fn c4_simplex() {
        let g = Graph::cycle(4);
        let rep = project_to_span(&g, &generate_irredundant_description(&g).unwrap()).unwrap();
        assert_eq!(rep.dim(), 4);
        let rays = extreme_rays(&rep).unwrap();
        assert_eq!(rays.len(), 4);
        for i in 0..4 {
            assert!(rays.contains(&unit(4, i)));
        }
    }

    #[test]
    fn edgeless_is_a_point() {
        let g = Graph::empty(3);
        let rep = project_to_span(&g, &generate_irredundant_description(&g).unwrap()).unwrap();
        assert_eq!(rep.dim(), 0);
        assert!(extreme_rays(&rep).unwrap().is_empty());
    }

    #[test]
    fn inconsistent_equation_is_fatal() {
        let g = Graph::complete(2);
        let mut d = generate_irredundant_description(&g).unwrap();
        d.equations.push(LinearForm::new([(SubsetMask::singleton(0), 1)], FormTag::Apex));
        assert!(project_to_span(&g, &d).is_err());
    }

    #[test]
    fn equality_and_deletion() {
        let g = Graph::complete(3);
        let irr = generate_irredundant_description(&g).unwrap();
        let red = generate_redundant_description(&g).unwrap();
        let same = cones_equal(&irr, &irr).unwrap();
        assert!(same.equal && same.irredundant_on(Side::A));
        let cmp = cones_equal(&red, &irr).unwrap();
        assert!(cmp.equal, "{cmp:?}");
        assert_eq!(cmp.facets.len(), 6);
        assert!(cmp.irredundant_on(Side::B));
        assert!(cones_equal(&irr, &red).unwrap().equal);

        let mut smaller = irr.clone();
        let tag = smaller.inequalities[0].tag();
        smaller.remove_inequality(tag);
        let cmp = cones_equal(&irr, &smaller).unwrap();
        assert!(!cmp.equal);
        assert_eq!(cmp.mismatch, Some(Mismatch::NotImplied { side: Side::A, tag }));
    }

    #[test]
    fn span_mismatch() {
        let g = Graph::cycle(4);
        let irr = generate_irredundant_description(&g).unwrap();
        let mut fewer = irr.clone();
        fewer.equations.pop();
        let cmp = cones_equal(&irr, &fewer).unwrap();
        assert!(matches!(cmp.mismatch, Some(Mismatch::SpanDiffers { .. })));
    }

    #[test]
    fn facet_tests() {
        let g = Graph::complete(3);
        let irr = generate_irredundant_description(&g).unwrap();
        for f in &irr.inequalities {
            assert!(is_facet(&irr, f).unwrap());
        }
        let sum = irr.inequalities[0].plus(&irr.inequalities[1]);
        assert!(!is_facet(&irr, &sum).unwrap());

        let c4 = Graph::cycle(4);
        let red = generate_redundant_description(&c4).unwrap();
        for f in &red.inequalities {
            let FormTag::EdgeWall { rest, .. } = f.tag() else { unreachable!() };
            assert_eq!(is_facet(&red, f).unwrap(), rest.is_empty(), "{}", f.tag());
        }
    }

    #[test]
    fn pointed_counts() {
        for (g, facets, dim) in [
            (Graph::complete(3), 6, 4),
            (Graph::cycle(4), 4, 4),
            (Graph::path(3), 2, 2),
        ] {
            let d = generate_redundant_description(&g).unwrap();
            assert_eq!(pointed_facets_and_dim(&d).unwrap(), (facets, dim));
        }
    }

    #[test]
    fn parallel_vectors() {
        let a: Vec<BigInt> = vec![2.into(), 0.into(), (-4).into()];
        let b: Vec<BigInt> = vec![1.into(), 0.into(), (-2).into()];
        let c: Vec<BigInt> = vec![(-1).into(), 0.into(), 2.into()];
        assert!(positively_parallel(&a, &b));
        assert!(!positively_parallel(&a, &c));
        assert!(leading_positive(&a) && !leading_positive(&c));
    }
}
