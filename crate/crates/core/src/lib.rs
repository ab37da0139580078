//! Deformation cones of graphical zonotopes.
//!
//! For a simple graph `G` on `{0, .., n-1}` the graphical zonotope `Z_G` is the
//! Minkowski sum of the segments `[e_u, e_v]` over the edges of `G`. A height
//! vector `h ∈ R^{2^n}` describes the polytope
//! `P_h = { x : <i_S, x> <= h_S for all S }` where `i_S` is `+1` on `S` and
//! `-1` off it. This crate computes which height vectors give deformations of
//! `Z_G`, in closed form, and checks those closed forms against an independent
//! exact polyhedral oracle.
//!
//! The numeric code is generic over [`Scalar`]; [`Rational`] is the default
//! exact instantiation and the aliases below fix it.

pub mod braidfan;
pub mod defcone;
mod error;
pub mod geometry;
pub mod graphcore;
pub mod io;
pub mod polyoracle;
mod scalar;

pub use error::{Error, Result};
pub use scalar::Scalar;

pub use graphcore::{Graph, Orientation, SubsetMask};

/// Arbitrary-precision rational, the default scalar.
pub type Rational = num_rational::BigRational;
/// Arbitrary-precision integer used for ray and normal coordinates.
pub type Integer = num_bigint::BigInt;

pub type HeightVectorQ = defcone::HeightVector<Rational>;
pub type MatrixQ = polyoracle::Matrix<Rational>;
pub type VertexSetQ = geometry::VertexSet<Rational>;
