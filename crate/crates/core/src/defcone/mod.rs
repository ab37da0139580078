//! The deformation cone of a graphical zonotope, as a cone of height vectors.
//!
//! [`generate_redundant_description`] emits one wall-crossing form per pair of
//! adjacent cells of the refined braid fan. [`generate_irredundant_description`]
//! keeps one equation per non-clique and one inequality per facet. Everything
//! here is exact: forms have small integer coefficients and are evaluated in
//! the caller's [`Scalar`](crate::Scalar).

mod basis;
mod describe;
mod form;
mod height;
mod membership;
mod witness;

pub use basis::{
    clique_basis_heights, combine_simplices, decompose_in_clique_basis, simplex_heights,
    triangle_free_decompose, ZonotopalDecomposition,
};
pub use describe::{
    generate_irredundant_description, generate_redundant_description, stats, ConeStats,
    MAX_DESCRIPTION_VERTICES,
};
pub use form::{ConeDescription, FormTag, LinearForm};
pub use height::HeightVector;
pub use membership::{contains, require_in_cone, Membership};
pub use witness::{
    build_facet_witness, build_facet_witness_scaled, check_facet_witness, cut_vector,
    triple_vector, WitnessReport, WitnessScale,
};
