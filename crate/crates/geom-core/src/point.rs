//! Points in the plane, in units of the polygon diameter.

/// A planar point. Both coordinates are expected to be finite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    /// Euclidean distance to another point.
    pub fn dist(&self, other: &Point2) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }
}

/// Mirror image across the y-axis.
pub fn reflect_x(p: Point2) -> Point2 {
    Point2::new(-p.x, p.y)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reflect_flips_x_only() {
        let p = reflect_x(Point2::new(0.5, 0.3));
        assert_eq!(p, Point2::new(-0.5, 0.3));
    }

    #[test]
    fn reflect_fixes_axis_points() {
        let p = reflect_x(Point2::new(0.0, 1.0));
        assert_eq!(p, Point2::new(0.0, 1.0));
    }

    #[test]
    fn dist_is_symmetric() {
        let a = Point2::new(0.0, 0.0);
        let b = Point2::new(3.0, 4.0);
        assert_eq!(a.dist(&b), 5.0);
        assert_eq!(b.dist(&a), 5.0);
    }
}
