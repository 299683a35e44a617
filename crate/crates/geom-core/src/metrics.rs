//! The three polygon metrics and the per-n record comparing them with
//! the universal upper bounds.

use std::f64::consts::PI;

use crate::{is_strictly_convex, ConvexPolygon, GeomError, Point2};

/// Slack allowed when comparing a measured metric against its bound.
pub const METRIC_BOUND_SLACK: f64 = 1e-12;

/// Max pairwise vertex distance by exhaustive pair scan. This is the
/// reference path; `diameter_calipers` must agree with it.
pub fn diameter_points(vertices: &[Point2]) -> f64 {
    let mut best = 0.0f64;
    for (i, p) in vertices.iter().enumerate() {
        for q in &vertices[i + 1..] {
            best = best.max(p.dist(q));
        }
    }
    best
}

/// Sum of consecutive vertex distances, closing the cycle.
pub fn perimeter_points(vertices: &[Point2]) -> f64 {
    let m = vertices.len();
    (0..m)
        .map(|i| vertices[i].dist(&vertices[(i + 1) % m]))
        .sum()
}

/// Minimum over sides of the maximum vertex distance to the side's
/// supporting line.
pub fn width_points(vertices: &[Point2]) -> f64 {
    let m = vertices.len();
    let mut w = f64::INFINITY;
    for i in 0..m {
        let a = &vertices[i];
        let b = &vertices[(i + 1) % m];
        let ex = b.x - a.x;
        let ey = b.y - a.y;
        let len = ex.hypot(ey);
        let mut h = 0.0f64;
        for q in vertices {
            h = h.max(((q.x - a.x) * ey - (q.y - a.y) * ex).abs() / len);
        }
        w = w.min(h);
    }
    w
}

fn require_cycle(poly: &ConvexPolygon) -> Result<(), GeomError> {
    if poly.vertices.len() < 3 {
        return Err(GeomError::Degenerate(format!(
            "polygon {:?} has {} vertices, need at least 3",
            poly.label,
            poly.vertices.len()
        )));
    }
    Ok(())
}

pub fn diameter(poly: &ConvexPolygon) -> Result<f64, GeomError> {
    require_cycle(poly)?;
    Ok(diameter_points(&poly.vertices))
}

pub fn perimeter(poly: &ConvexPolygon) -> Result<f64, GeomError> {
    require_cycle(poly)?;
    Ok(perimeter_points(&poly.vertices))
}

pub fn width(poly: &ConvexPolygon) -> Result<f64, GeomError> {
    require_cycle(poly)?;
    if !is_strictly_convex(&poly.vertices) {
        return Err(GeomError::NotConvex(format!(
            "width of {:?} needs a strictly convex cycle",
            poly.label
        )));
    }
    Ok(width_points(&poly.vertices))
}

/// Antipodal-pair walk over a strictly convex counterclockwise cycle.
/// Faster than the pair scan; cross-checked against it in tests.
pub fn diameter_calipers(vertices: &[Point2]) -> Result<f64, GeomError> {
    let m = vertices.len();
    if m < 3 {
        return Err(GeomError::Degenerate(format!(
            "calipers need at least 3 vertices, got {m}"
        )));
    }
    if !is_strictly_convex(vertices) {
        return Err(GeomError::NotConvex(
            "calipers need a strictly convex cycle".to_string(),
        ));
    }
    let area2 = |a: &Point2, b: &Point2, c: &Point2| {
        ((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)).abs()
    };
    let mut best = 0.0f64;
    let mut j = 1usize;
    let mut steps = 0usize;
    for i in 0..m {
        let ni = (i + 1) % m;
        while steps <= 2 * m
            && area2(&vertices[i], &vertices[ni], &vertices[(j + 1) % m])
                > area2(&vertices[i], &vertices[ni], &vertices[j])
        {
            j = (j + 1) % m;
            steps += 1;
        }
        best = best.max(vertices[i].dist(&vertices[j]));
        best = best.max(vertices[ni].dist(&vertices[j]));
    }
    Ok(best)
}

/// Measured metrics for an n-vertex polygon alongside the diameter-one
/// upper bounds for that n.
#[derive(Debug, Clone, Copy)]
pub struct Metrics {
    pub perimeter: f64,
    pub width: f64,
    pub diameter: f64,
    pub n: u32,
    pub upper_perimeter: f64,
    pub upper_width: f64,
}

impl Metrics {
    /// 2n sin(pi/2n), the perimeter bound for diameter-one n-gons.
    pub fn upper_perimeter_for(n: u32) -> f64 {
        let nf = f64::from(n);
        2.0 * nf * (PI / (2.0 * nf)).sin()
    }

    /// cos(pi/2n), the width bound for diameter-one n-gons.
    pub fn upper_width_for(n: u32) -> f64 {
        (PI / (2.0 * f64::from(n))).cos()
    }

    /// Measure a polygon and check the metric ordering invariants.
    pub fn measure(poly: &ConvexPolygon, n: u32) -> Result<Self, GeomError> {
        let m = Self {
            perimeter: perimeter(poly)?,
            width: width(poly)?,
            diameter: diameter(poly)?,
            n,
            upper_perimeter: Self::upper_perimeter_for(n),
            upper_width: Self::upper_width_for(n),
        };
        m.check()?;
        Ok(m)
    }

    /// Package closed-form perimeter and width values (diameter 1 by
    /// definition) under the same invariants as measured metrics.
    pub fn from_closed_form(n: u32, perimeter: f64, width: f64) -> Result<Self, GeomError> {
        let m = Self {
            perimeter,
            width,
            diameter: 1.0,
            n,
            upper_perimeter: Self::upper_perimeter_for(n),
            upper_width: Self::upper_width_for(n),
        };
        m.check()?;
        Ok(m)
    }

    fn check(&self) -> Result<(), GeomError> {
        if self.perimeter > self.upper_perimeter + METRIC_BOUND_SLACK {
            return Err(GeomError::BoundViolation(format!(
                "perimeter {} exceeds bound {} for n = {}",
                self.perimeter, self.upper_perimeter, self.n
            )));
        }
        if self.width > self.upper_width + METRIC_BOUND_SLACK {
            return Err(GeomError::BoundViolation(format!(
                "width {} exceeds bound {} for n = {}",
                self.width, self.upper_width, self.n
            )));
        }
        if !(self.width > 0.0 && self.width < self.diameter) {
            return Err(GeomError::BoundViolation(format!(
                "width {} must lie strictly between 0 and the diameter {}",
                self.width, self.diameter
            )));
        }
        Ok(())
    }
}
