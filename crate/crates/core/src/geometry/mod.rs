//! Points, curves, curve families, pairwise intersections, projections,
//! and the plain-text formats they travel in.

pub mod curve;
pub mod family;
pub mod intersect;
pub mod io;
pub mod point;
pub mod projection;

pub use curve::{curve_in_variety, restrict_to_curve, Curve, CurveKind, Parametrization};
pub use family::CurveFamily;
pub use intersect::curve_pair_intersections;
pub use point::Point;
pub use projection::{make_projection, try_projection, GenericityCertificate, ProjectionMap};
