//! Assembly of the chain polygons: run the sign search, solve for the
//! turning angle, sweep the diameter chain over the right half of the
//! boundary, mirror across the y-axis, and validate every structural
//! invariant before handing the polygon out.

use std::collections::{BTreeSet, HashMap};
use std::f64::consts::PI;

use geom_core::{
    convex_hull, diameter_points, is_strictly_convex, reflect_x, ConvexPolygon, Metrics, Point2,
};
use signopt::{block_pattern_result, solve_delta, SignSearchResult};

use crate::chain::{apply_pattern_step, ChainState};
use crate::spec::{angle_schedule, PolygonSpec};
use crate::ConstructError;

/// The half-boundary angle schedule must sum to π/2 this tightly.
pub const SCHEDULE_SUM_TOL: f64 = 1e-13;
/// Chain endpoint x-coordinates must land on ±1/2 this tightly.
pub const CLOSURE_TOL: f64 = 1e-12;
/// Mirrored vertices must coincide with their partners this tightly.
pub const MIRROR_TOL: f64 = 1e-12;
/// Measured perimeter and width must match their closed forms this tightly.
pub const GEO_CLOSED_AGREE_TOL: f64 = 1e-10;

/// Sweep the chain over one half of the boundary. Returns the vertices
/// v_0 … v_{n/2+1} in index order together with the diameter pairs the
/// sweep traversed, all in chain indexing.
pub fn build_chain(
    spec: &PolygonSpec,
) -> Result<(Vec<Point2>, Vec<(usize, usize)>), ConstructError> {
    let sched = angle_schedule(spec);
    let sum: f64 = sched.iter().sum();
    if (sum - PI / 2.0).abs() > SCHEDULE_SUM_TOL {
        return Err(ConstructError::invariant(
            "schedule-sum",
            format!("angle schedule sums to {sum}, expected {}", PI / 2.0),
        ));
    }
    let mut vertices = vec![Point2::new(0.0, 1.0), Point2::new(0.0, 0.0)];
    let mut pairs = vec![(0usize, 1usize)];
    let mut state = ChainState::start();
    for (k, &c) in spec.c.iter().enumerate() {
        let (next, v_even, v_odd) =
            apply_pattern_step(&state, c, sched[2 * k], sched[2 * k + 1])?;
        vertices.push(v_even);
        vertices.push(v_odd);
        if c == 1 {
            pairs.push((2 * k + 1, 2 * k + 2));
            pairs.push((2 * k + 2, 2 * k + 3));
        } else {
            pairs.push((2 * k, 2 * k + 3));
            pairs.push((2 * k + 3, 2 * k + 2));
        }
        state = next;
    }
    Ok((vertices, pairs))
}

fn mirror_index(n: usize, j: usize) -> usize {
    if j <= 1 {
        j
    } else {
        n + 1 - j
    }
}

/// Build the n-gon for a sign-search result: solve for delta, sweep the
/// chain, mirror, hull, validate.
pub fn build_dn_from_result(
    result: &SignSearchResult,
) -> Result<(ConvexPolygon, PolygonSpec, Metrics), ConstructError> {
    let n = result.best.n();
    let delta = solve_delta(n, result.sigma)?.delta;
    let spec = PolygonSpec::new(result.best.clone(), delta)?;
    assemble(&spec)
}

/// Build the n-gon with the repeated-block-expansion vector, the
/// vector behind the published reference values.
pub fn build_dn(n: u32) -> Result<(ConvexPolygon, PolygonSpec, Metrics), ConstructError> {
    build_dn_from_result(&block_pattern_result(n)?)
}

/// Diagnostic build with the turning angle forced to zero. The chain
/// then misses the closure line x = 1/2, so this always returns the
/// closure-invariant error; it exists to exercise the validator.
pub fn build_dn_delta_zero(n: u32) -> Result<(ConvexPolygon, PolygonSpec, Metrics), ConstructError> {
    let result = block_pattern_result(n)?;
    let spec = PolygonSpec::new(result.best.clone(), 0.0)?;
    assemble(&spec)
}

fn assemble(spec: &PolygonSpec) -> Result<(ConvexPolygon, PolygonSpec, Metrics), ConstructError> {
    let n = spec.n as usize;
    let (chain, chain_pairs) = build_chain(spec)?;

    let last_built = chain[n / 2 + 1];
    let closing_x = chain[n / 2].x;
    if (closing_x - 0.5).abs() > CLOSURE_TOL {
        return Err(ConstructError::invariant(
            "closure",
            format!("x_{} = {closing_x}, expected 1/2", n / 2),
        ));
    }
    if (last_built.x + 0.5).abs() > CLOSURE_TOL {
        return Err(ConstructError::invariant(
            "closure",
            format!("x_{} = {}, expected -1/2", n / 2 + 1, last_built.x),
        ));
    }
    let mirrored_mid = reflect_x(chain[n / 2]);
    if last_built.dist(&mirrored_mid) > MIRROR_TOL {
        return Err(ConstructError::invariant(
            "mirror-symmetry",
            format!(
                "vertex {} ends at ({}, {}), its mirror partner demands ({}, {})",
                n / 2 + 1,
                last_built.x,
                last_built.y,
                mirrored_mid.x,
                mirrored_mid.y
            ),
        ));
    }

    let mut full = vec![Point2::new(0.0, 0.0); n];
    full[..=n / 2].copy_from_slice(&chain[..=n / 2]);
    for j in 2..=n / 2 {
        full[n + 1 - j] = reflect_x(chain[j]);
    }

    for (j, v) in full.iter().enumerate() {
        let partner = full[mirror_index(n, j) % n];
        if reflect_x(*v).dist(&partner) > MIRROR_TOL {
            return Err(ConstructError::invariant(
                "mirror-symmetry",
                format!("vertex {j} has no mirror partner within tolerance"),
            ));
        }
    }

    let mut pair_set = BTreeSet::new();
    for &(a, b) in &chain_pairs {
        for (p, q) in [(a, b), (mirror_index(n, a) % n, mirror_index(n, b) % n)] {
            pair_set.insert((p.min(q), p.max(q)));
        }
    }

    let diameter = diameter_points(&full);
    if (diameter - 1.0).abs() > CLOSURE_TOL {
        return Err(ConstructError::invariant(
            "smallness",
            format!("vertex set has diameter {diameter}, expected 1"),
        ));
    }
    for &(a, b) in &pair_set {
        let len = full[a].dist(&full[b]);
        if (len - 1.0).abs() > CLOSURE_TOL {
            return Err(ConstructError::invariant(
                "diameter-pairs",
                format!("designated pair ({a}, {b}) has length {len}"),
            ));
        }
    }

    let hull = convex_hull(&full)?;
    if hull.len() != n {
        return Err(ConstructError::invariant(
            "hull-vertex-count",
            format!("hull keeps {} of {n} vertices", hull.len()),
        ));
    }
    if !is_strictly_convex(&hull) {
        return Err(ConstructError::invariant(
            "strict-convexity",
            "hull cycle is not strictly convex".to_string(),
        ));
    }

    let index_of: HashMap<(u64, u64), usize> = hull
        .iter()
        .enumerate()
        .map(|(i, p)| ((p.x.to_bits(), p.y.to_bits()), i))
        .collect();
    let mut hull_pairs = Vec::with_capacity(pair_set.len());
    for &(a, b) in &pair_set {
        let pa = index_of[&(full[a].x.to_bits(), full[a].y.to_bits())];
        let pb = index_of[&(full[b].x.to_bits(), full[b].y.to_bits())];
        hull_pairs.push((pa.min(pb), pa.max(pb)));
    }
    hull_pairs.sort_unstable();
    hull_pairs.dedup();

    let label = format!("D_{n}");
    let polygon = ConvexPolygon::new(hull, hull_pairs, &label)?;
    let metrics = Metrics::measure(&polygon, spec.n)?;

    let nf = f64::from(spec.n);
    let closed_perimeter = 2.0 * nf * (PI / (2.0 * nf)).sin() * (spec.delta / 2.0).cos();
    if (metrics.perimeter - closed_perimeter).abs() > GEO_CLOSED_AGREE_TOL {
        return Err(ConstructError::invariant(
            "perimeter-agreement",
            format!(
                "measured perimeter {} vs closed form {closed_perimeter}",
                metrics.perimeter
            ),
        ));
    }
    let closed_width = (PI / (2.0 * nf) + spec.delta / 2.0).cos();
    if (metrics.width - closed_width).abs() > GEO_CLOSED_AGREE_TOL {
        return Err(ConstructError::invariant(
            "width-agreement",
            format!("measured width {} vs closed form {closed_width}", metrics.width),
        ));
    }

    Ok((polygon, spec.clone(), metrics))
}
