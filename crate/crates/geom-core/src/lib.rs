//! Double-precision planar geometry for diameter-one convex polygons:
//! points, monotone-chain hulls, and the three polygon metrics
//! (perimeter, width, diameter) with explicit tolerances.

mod hull;
mod metrics;
mod numfmt;
mod point;
mod polygon;

pub use hull::{convex_hull, is_strictly_convex, COLLINEAR_REL_TOL};
pub use metrics::{
    diameter, diameter_calipers, diameter_points, perimeter, perimeter_points, width,
    width_points, Metrics, METRIC_BOUND_SLACK,
};
pub use numfmt::fmt_sig17;
pub use point::{reflect_x, Point2};
pub use polygon::{ConvexPolygon, UNIT_DIST_ABS_TOL};

use thiserror::Error;

/// Errors raised by geometric operations and polygon validation.
#[derive(Debug, Error)]
pub enum GeomError {
    /// Too few points, non-finite coordinates, or an all-collinear set.
    #[error("degenerate input: {0}")]
    Degenerate(String),
    /// The vertex cycle is not strictly convex.
    #[error("not strictly convex: {0}")]
    NotConvex(String),
    /// A distance or metric fell outside its required band.
    #[error("bound violated: {0}")]
    BoundViolation(String),
}
