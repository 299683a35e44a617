use std::f64::consts::PI;

use signopt::SignVector;

use crate::ConstructError;

/// Everything needed to rebuild a chain polygon: the sign vector, the
/// working orientation c of its entries, and the turning angle delta.
///
/// c equals b entry for entry up to one global sign flip, fixed so the
/// oriented signed sum is nonpositive; the chain reads c both for
/// pattern selection and for the angle schedule, so the product
/// b_k·c_k is +1 throughout and the closure equation is solvable with
/// delta ≥ 0.
#[derive(Debug, Clone)]
pub struct PolygonSpec {
    pub n: u32,
    pub b: SignVector,
    pub c: Vec<i8>,
    pub delta: f64,
}

impl PolygonSpec {
    pub fn new(b: SignVector, delta: f64) -> Result<Self, ConstructError> {
        let n = b.n();
        if n < 16 {
            return Err(ConstructError::Parameter(format!(
                "chain polygons start at n = 16, got n = {n}"
            )));
        }
        let limit = PI / f64::from(n);
        if !(0.0..limit).contains(&delta) {
            return Err(ConstructError::Parameter(format!(
                "delta = {delta} is outside [0, {limit}) for n = {n}"
            )));
        }
        let c = b.oriented_entries();
        Ok(Self { n, b, c, delta })
    }
}

/// The n/2 rotation angles consumed by the chain: block k contributes
/// π/n + c_k·delta followed by π/n − c_k·delta, so each block turns by
/// exactly 2π/n and the whole half-boundary by π/2.
pub fn angle_schedule(spec: &PolygonSpec) -> Vec<f64> {
    let base = PI / f64::from(spec.n);
    spec.c
        .iter()
        .flat_map(|&c| {
            let swing = f64::from(c) * spec.delta;
            [base + swing, base - swing]
        })
        .collect()
}
