//! Independent exact polyhedral engine: linear algebra, a Farkas LP, double
//! description, and cone comparisons built from them.

mod cone;
mod dd;
mod lp;
mod matrix;

pub use cone::{
    cones_equal, equation_matrix, extreme_rays, facet_flags, inequality_facet_flags, is_facet, is_facet_by_rays,
    leading_positive, pointed_facets_and_dim, positively_parallel, project_to_span,
    ConeComparison, FacetMatch, Mismatch, PointedConeRep, Side, SpanProjection,
};
pub use dd::{extreme_rays_of, primitive, primitive_from_rationals, MAX_RAYS};
pub use lp::conic_combination;
pub use matrix::{Matrix, NoSolution};


/// Rank of a matrix; exact for exact scalars.
pub fn rank<T: crate::Scalar>(m: &Matrix<T>) -> usize {
    m.rank()
}
