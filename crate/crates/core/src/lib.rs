//! Exact lattice geometry for toric log del Pezzo surfaces.
//!
//! A toric log del Pezzo surface is determined by an LDP-polygon: a convex
//! lattice polygon with the origin in its interior and primitive vertices.
//! This crate validates such polygons, reads off singularity data and the
//! log del Pezzo criterion from the face fan, decides unimodular
//! equivalence, builds the parametric families with one, two or three
//! singular points, and enumerates every polygon with vertices in a box.
//!
//! The geometry is generic over the integer [`Scalar`]; the aliases below fix
//! it to `i64`, which is what the families, the enumerator and the CLI use.

pub mod enumeration;
pub mod equivalence;
pub mod error;
pub mod families;
pub mod lattice;
pub mod polygon;
pub mod scalar;
pub mod surface;

pub use equivalence::{are_equivalent, are_equivalent_with, canonical_form, canonical_form_with, Mode};
pub use error::{Error, Result};
pub use lattice::{apply_map, det2, is_primitive, solve_map};
pub use polygon::{parse_vertices, format_vertices, twice_area, validate_fan, validate_ldp_polygon};
pub use scalar::Scalar;
pub use surface::{analyze, blow_down, blow_down_candidates, blow_up, f_value, nonsingular_arc_contiguous};

pub type Ray = lattice::RayVector<i64>;
pub type Unimodular = lattice::UnimodularMap<i64>;
pub type Fan = polygon::FanCycle<i64>;
pub type Polygon = polygon::LdpPolygon<i64>;
pub type Report = surface::SurfaceReport<i64>;
pub type Cone = surface::ConeRecord<i64>;
pub type Canonical = equivalence::CanonicalForm<i64>;
