//! Convex small polygons: an ordered vertex cycle plus the vertex pairs
//! designated as unit diameters.

use crate::metrics::diameter_points;
use crate::{is_strictly_convex, GeomError, Point2};

/// Absolute tolerance on unit distances: designated diameter pairs and
/// the overall diameter must lie within this band of 1.
pub const UNIT_DIST_ABS_TOL: f64 = 1e-12;

/// A strictly convex polygon of diameter one. `diameter_pairs` indexes
/// vertex pairs asserted to realize distance 1; `validate` re-checks them
/// rather than trusting the builder.
#[derive(Debug, Clone)]
pub struct ConvexPolygon {
    /// Vertices in boundary order.
    pub vertices: Vec<Point2>,
    /// Index pairs asserted to lie at distance 1.
    pub diameter_pairs: Vec<(usize, usize)>,
    /// Display tag, e.g. "D_32".
    pub label: String,
}

impl ConvexPolygon {
    /// Validating constructor: checks the strictly convex cycle, every
    /// designated pair, and smallness (max pairwise distance 1).
    pub fn new(
        vertices: Vec<Point2>,
        diameter_pairs: Vec<(usize, usize)>,
        label: impl Into<String>,
    ) -> Result<Self, GeomError> {
        let poly = Self {
            vertices,
            diameter_pairs,
            label: label.into(),
        };
        poly.validate()?;
        Ok(poly)
    }

    pub fn validate(&self) -> Result<(), GeomError> {
        if self.vertices.len() < 3 {
            return Err(GeomError::Degenerate(format!(
                "polygon {:?} has {} vertices, need at least 3",
                self.label,
                self.vertices.len()
            )));
        }
        if let Some(p) = self.vertices.iter().find(|p| !p.is_finite()) {
            return Err(GeomError::Degenerate(format!(
                "polygon {:?} has a non-finite vertex ({}, {})",
                self.label, p.x, p.y
            )));
        }
        if !is_strictly_convex(&self.vertices) {
            return Err(GeomError::NotConvex(format!(
                "polygon {:?} fails the strict convexity test",
                self.label
            )));
        }
        for &(i, j) in &self.diameter_pairs {
            if i >= self.vertices.len() || j >= self.vertices.len() || i == j {
                return Err(GeomError::Degenerate(format!(
                    "polygon {:?} diameter pair ({i}, {j}) out of range",
                    self.label
                )));
            }
            let d = self.vertices[i].dist(&self.vertices[j]);
            if (d - 1.0).abs() > UNIT_DIST_ABS_TOL {
                return Err(GeomError::BoundViolation(format!(
                    "polygon {:?} pair ({i}, {j}) has length {d:.17}, not 1",
                    self.label
                )));
            }
        }
        let dia = diameter_points(&self.vertices);
        if (dia - 1.0).abs() > UNIT_DIST_ABS_TOL {
            return Err(GeomError::BoundViolation(format!(
                "polygon {:?} has diameter {dia:.17}, not 1 (smallness)",
                self.label
            )));
        }
        Ok(())
    }
}
