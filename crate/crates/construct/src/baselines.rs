//! The two baseline families: regular polygons with unit main
//! diagonal, and Reinhardt polygons obtained by spreading extra
//! vertices along the arcs of a Reuleaux polygon.

use std::f64::consts::PI;

use geom_core::{convex_hull, ConvexPolygon, Point2};

use crate::ConstructError;

fn rotate_about(center: Point2, p: Point2, angle: f64) -> Point2 {
    let dx = p.x - center.x;
    let dy = p.y - center.y;
    let (sa, ca) = angle.sin_cos();
    Point2::new(center.x + dx * ca - dy * sa, center.y + dx * sa + dy * ca)
}

/// Regular n-gon, n even, scaled so opposite vertices are distance 1
/// apart.
pub fn build_regular(n: u32) -> Result<ConvexPolygon, ConstructError> {
    if n < 4 {
        return Err(ConstructError::Parameter(format!(
            "regular baseline needs n >= 4, got n = {n}"
        )));
    }
    if n % 2 != 0 {
        return Err(ConstructError::OutOfScope(format!(
            "regular baseline covers even n only, got n = {n}"
        )));
    }
    let half = (n / 2) as usize;
    let vertices: Vec<Point2> = (0..n as usize)
        .map(|j| {
            let theta = 2.0 * PI * j as f64 / f64::from(n);
            Point2::new(0.5 * theta.cos(), 0.5 * theta.sin())
        })
        .collect();
    let pairs: Vec<(usize, usize)> = (0..half).map(|j| (j, j + half)).collect();
    Ok(ConvexPolygon::new(vertices, pairs, format!("R_{n}"))?)
}

/// Reinhardt polygon on n vertices built over the Reuleaux polygon of
/// odd order m: the m corners of the Reuleaux polygon plus n/m − 1
/// equally spaced vertices along each of its unit-radius arcs.
pub fn build_reinhardt(m: u32, n: u32) -> Result<ConvexPolygon, ConstructError> {
    if m < 3 || m % 2 == 0 {
        return Err(ConstructError::Parameter(format!(
            "Reuleaux order must be odd and at least 3, got m = {m}"
        )));
    }
    if n < m || n % m != 0 {
        return Err(ConstructError::Parameter(format!(
            "vertex count must be a positive multiple of m = {m}, got n = {n}"
        )));
    }
    let mu = m as usize;
    let per_arc = (n / m) as usize;
    let r = 1.0 / (2.0 * (PI / (2.0 * f64::from(m))).cos());
    let corners: Vec<Point2> = (0..mu)
        .map(|i| {
            let phi = 2.0 * PI * i as f64 / f64::from(m) + PI / 2.0;
            Point2::new(r * phi.cos(), r * phi.sin())
        })
        .collect();

    let step = PI / f64::from(n);
    let mut points = Vec::with_capacity(n as usize);
    for i in 0..mu {
        let a = corners[i];
        let b = corners[(i + 1) % mu];
        let center = corners[(i + (mu + 1) / 2) % mu];
        let cross = (a.x - center.x) * (b.y - center.y) - (a.y - center.y) * (b.x - center.x);
        let sense = if cross >= 0.0 { 1.0 } else { -1.0 };
        points.push(a);
        for t in 1..per_arc {
            points.push(rotate_about(center, a, sense * step * t as f64));
        }
    }

    let hull = convex_hull(&points)?;
    if hull.len() != n as usize {
        return Err(ConstructError::invariant(
            "hull-vertex-count",
            format!("hull keeps {} of {n} vertices", hull.len()),
        ));
    }
    let mut pairs = Vec::new();
    for i in 0..hull.len() {
        for j in i + 1..hull.len() {
            if (hull[i].dist(&hull[j]) - 1.0).abs() <= 1e-12 {
                pairs.push((i, j));
            }
        }
    }
    Ok(ConvexPolygon::new(hull, pairs, format!("R_{m}_{n}"))?)
}
