//! The moving diameter. A chain state holds one unit segment from the
//! current odd-indexed vertex (the pivot) to the current even-indexed
//! vertex (the free end); each pattern block rotates it twice and
//! leaves behind the two vertices it swept over.

use geom_core::Point2;

use crate::ConstructError;

/// Allowed drift of the pivot-to-free distance from 1.
pub const CHAIN_UNIT_TOL: f64 = 1e-13;
/// A produced segment further than this from unit length fails the step.
pub const SEGMENT_FAIL_TOL: f64 = 1e-12;

/// Rotate `p` about `center` clockwise by `angle` radians.
pub fn rotate_cw(center: Point2, p: Point2, angle: f64) -> Point2 {
    let dx = p.x - center.x;
    let dy = p.y - center.y;
    let (sa, ca) = angle.sin_cos();
    Point2::new(center.x + dx * ca + dy * sa, center.y - dx * sa + dy * ca)
}

/// One unit diameter of the chain: pivot is vertex 2k+1, free is vertex
/// 2k, and after `step_index` blocks the free end sits at direction
/// (sin θ, cos θ) from the pivot with θ = step_index·2π/n.
#[derive(Debug, Clone, Copy)]
pub struct ChainState {
    pub pivot: Point2,
    pub free: Point2,
    pub step_index: usize,
}

impl ChainState {
    /// The initial diameter: pivot at the origin, free end straight up.
    pub fn start() -> Self {
        Self {
            pivot: Point2::new(0.0, 0.0),
            free: Point2::new(0.0, 1.0),
            step_index: 0,
        }
    }
}

/// Execute one pattern block k, producing vertices 2k+2 and 2k+3
/// (returned in that index order) and the advanced chain state.
///
/// b_k = +1 swings the free end first: rotate it about the pivot by
/// alpha_first (new vertex 2k+2), then rotate the pivot about that new
/// vertex by alpha_second (new vertex 2k+3). b_k = −1 swings the pivot
/// first: rotate it about the free end by alpha_first (new vertex
/// 2k+3), then rotate the free end about that new vertex by
/// alpha_second (new vertex 2k+2). Both rotations are clockwise, so the
/// chain walks clockwise around the boundary either way.
pub fn apply_pattern_step(
    state: &ChainState,
    b_k: i8,
    alpha_first: f64,
    alpha_second: f64,
) -> Result<(ChainState, Point2, Point2), ConstructError> {
    if b_k != 1 && b_k != -1 {
        return Err(ConstructError::Parameter(format!(
            "pattern selector must be +1 or -1, got {b_k}"
        )));
    }
    let needle = state.pivot.dist(&state.free);
    if (needle - 1.0).abs() > CHAIN_UNIT_TOL {
        return Err(ConstructError::Numerical(format!(
            "chain diameter drifted to length {needle} before block {}",
            state.step_index
        )));
    }
    let (v_even, v_odd) = if b_k == 1 {
        let v_even = rotate_cw(state.pivot, state.free, alpha_first);
        let v_odd = rotate_cw(v_even, state.pivot, alpha_second);
        (v_even, v_odd)
    } else {
        let v_odd = rotate_cw(state.free, state.pivot, alpha_first);
        let v_even = rotate_cw(v_odd, state.free, alpha_second);
        (v_even, v_odd)
    };
    for (a, b, which) in [
        (
            if b_k == 1 { state.pivot } else { state.free },
            if b_k == 1 { v_even } else { v_odd },
            "first",
        ),
        (v_odd, v_even, "second"),
    ] {
        let len = a.dist(&b);
        if (len - 1.0).abs() > SEGMENT_FAIL_TOL {
            return Err(ConstructError::Numerical(format!(
                "{which} rotation of block {} produced a segment of length {len}",
                state.step_index
            )));
        }
    }
    let next = ChainState {
        pivot: v_odd,
        free: v_even,
        step_index: state.step_index + 1,
    };
    Ok((next, v_even, v_odd))
}
