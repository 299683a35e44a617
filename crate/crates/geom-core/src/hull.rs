//! Monotone-chain convex hull and strict-convexity testing.

use crate::{GeomError, Point2};

/// Turns whose cross product is within this factor of the operand scale
/// are treated as collinear. Constructed vertices are O(1) in magnitude,
/// so a relative test keeps the threshold meaningful at every scale.
pub const COLLINEAR_REL_TOL: f64 = 1e-12;

fn cross(o: &Point2, a: &Point2, b: &Point2) -> f64 {
    (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)
}

/// |a-o| * |b-o| bounds |cross(o, a, b)|, so it serves as the scale for
/// the relative collinearity test.
fn cross_scale(o: &Point2, a: &Point2, b: &Point2) -> f64 {
    o.dist(a) * o.dist(b)
}

fn turns_left(o: &Point2, a: &Point2, b: &Point2) -> bool {
    cross(o, a, b) > COLLINEAR_REL_TOL * cross_scale(o, a, b)
}

/// Counterclockwise convex hull of a point set. Points within the
/// collinearity tolerance of a hull edge are dropped, so the result is
/// strictly convex. The first hull vertex is the lexicographically
/// smallest input point.
pub fn convex_hull(points: &[Point2]) -> Result<Vec<Point2>, GeomError> {
    if points.len() < 3 {
        return Err(GeomError::Degenerate(format!(
            "convex hull needs at least 3 points, got {}",
            points.len()
        )));
    }
    if let Some(p) = points.iter().find(|p| !p.is_finite()) {
        return Err(GeomError::Degenerate(format!(
            "non-finite coordinate ({}, {})",
            p.x, p.y
        )));
    }

    let mut pts: Vec<Point2> = points.to_vec();
    pts.sort_by(|p, q| p.x.total_cmp(&q.x).then(p.y.total_cmp(&q.y)));
    pts.dedup_by(|p, q| p.x == q.x && p.y == q.y);

    let mut lower: Vec<Point2> = Vec::with_capacity(pts.len());
    for p in &pts {
        while lower.len() >= 2 && !turns_left(&lower[lower.len() - 2], &lower[lower.len() - 1], p)
        {
            lower.pop();
        }
        lower.push(*p);
    }
    let mut upper: Vec<Point2> = Vec::with_capacity(pts.len());
    for p in pts.iter().rev() {
        while upper.len() >= 2 && !turns_left(&upper[upper.len() - 2], &upper[upper.len() - 1], p)
        {
            upper.pop();
        }
        upper.push(*p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    if lower.len() < 3 {
        return Err(GeomError::Degenerate(
            "all points are collinear within tolerance".to_string(),
        ));
    }
    Ok(lower)
}

/// True iff every consecutive turn has the same orientation sign and none
/// is within the collinearity tolerance of zero. Accepts either traversal
/// direction; returns false on any degeneracy.
pub fn is_strictly_convex(vertices: &[Point2]) -> bool {
    let m = vertices.len();
    if m < 3 || vertices.iter().any(|p| !p.is_finite()) {
        return false;
    }
    let mut sign = 0.0f64;
    for i in 0..m {
        let o = &vertices[i];
        let a = &vertices[(i + 1) % m];
        let b = &vertices[(i + 2) % m];
        let c = cross(o, a, b);
        if c.abs() <= COLLINEAR_REL_TOL * cross_scale(o, a, b) {
            return false;
        }
        if sign == 0.0 {
            sign = c.signum();
        } else if c.signum() != sign {
            return false;
        }
    }
    true
}
