use std::f64::consts::PI;

use geom_core::{
    convex_hull, diameter_calipers, diameter_points, fmt_sig17, is_strictly_convex,
    perimeter_points, width_points, Point2,
};
use proptest::prelude::*;

fn cloud() -> impl Strategy<Value = Vec<Point2>> {
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 3..40)
        .prop_map(|v| v.into_iter().map(|(x, y)| Point2::new(x, y)).collect())
}

proptest! {
    #[test]
    fn hull_is_idempotent_and_strictly_convex(pts in cloud()) {
        let Ok(hull) = convex_hull(&pts) else { return Ok(()); };
        prop_assert!(is_strictly_convex(&hull));
        let again = convex_hull(&hull).unwrap();
        prop_assert_eq!(hull, again);
    }

    #[test]
    fn calipers_agree_with_pair_scan(pts in cloud()) {
        let Ok(hull) = convex_hull(&pts) else { return Ok(()); };
        let brute = diameter_points(&hull);
        let fast = diameter_calipers(&hull).unwrap();
        prop_assert!((brute - fast).abs() <= 1e-15, "brute {brute} fast {fast}");
    }

    #[test]
    fn width_below_diameter_and_perimeter_below_pi_d(pts in cloud()) {
        let Ok(hull) = convex_hull(&pts) else { return Ok(()); };
        let d = diameter_points(&hull);
        prop_assert!(width_points(&hull) < d + 1e-15);
        prop_assert!(perimeter_points(&hull) <= PI * d + 1e-9);
    }

    #[test]
    fn sig17_round_trips(x in any::<f64>()) {
        prop_assume!(x.is_finite());
        let s = fmt_sig17(x);
        prop_assert!(!s.contains('e') && !s.contains('E'));
        prop_assert_eq!(s.parse::<f64>().unwrap().to_bits(), x.to_bits());
    }
}
