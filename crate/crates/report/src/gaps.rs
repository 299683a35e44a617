use std::f64::consts::PI;

use construct::{closed_form_gaps, Family};
use serde::Serialize;
use signopt::{block_pattern_result, solve_delta};

use crate::ReportError;

/// One scaled gap to an upper bound next to its n → ∞ limit.
#[derive(Debug, Clone, Serialize)]
pub struct RatioCheck {
    /// Which metric and family the gap belongs to.
    pub label: &'static str,
    /// Gap times the appropriate power of n over the matching power of π.
    pub ratio: f64,
    pub limit: f64,
    /// Absolute distance from the limit.
    pub deviation: f64,
}

/// Asymptotic diagnostics for one n: all six scaled gaps, and the
/// turning-angle bound delta ≤ (1 − cos(π/n))·sigma satisfied by the
/// chain polygon.
#[derive(Debug, Clone, Serialize)]
pub struct GapReport {
    pub n: u32,
    pub ratios: Vec<RatioCheck>,
    pub delta: f64,
    pub delta_bound: f64,
    pub delta_bound_holds: bool,
}

fn ratio(label: &'static str, gap: f64, n_power: i32, pi_power: i32, limit: f64, nf: f64) -> RatioCheck {
    let ratio = gap * nf.powi(n_power) / PI.powi(pi_power);
    RatioCheck {
        label,
        ratio,
        limit,
        deviation: (ratio - limit).abs(),
    }
}

/// Evaluate the scaled gaps for each n. The gaps come from
/// cancellation-free closed forms, so the ratios stay accurate even
/// where the direct differences would lose most of their digits.
pub fn gap_diagnostics(n_list: &[u32]) -> Result<Vec<GapReport>, ReportError> {
    n_list
        .iter()
        .map(|&n| {
            let nf = f64::from(n);
            let r = closed_form_gaps(n, Family::Rn)?;
            let b = closed_form_gaps(n, Family::Bn)?;
            let c = closed_form_gaps(n, Family::Cn)?;
            let ratios = vec![
                ratio("perimeter-gap-regular", r.perimeter_gap, 2, 3, 0.125, nf),
                ratio("width-gap-regular", r.width_gap, 2, 2, 0.375, nf),
                ratio("perimeter-gap-first-competitor", b.perimeter_gap, 6, 7, 1.0 / 32.0, nf),
                ratio("width-gap-first-competitor", b.width_gap, 4, 4, 0.125, nf),
                ratio("perimeter-gap-second-competitor", c.perimeter_gap, 8, 9, 0.125, nf),
                ratio("width-gap-second-competitor", c.width_gap, 5, 5, 0.25, nf),
            ];
            let result = block_pattern_result(n)?;
            let sol = solve_delta(n, result.sigma)?;
            let delta_bound = (1.0 - (PI / nf).cos()) * result.sigma;
            Ok(GapReport {
                n,
                ratios,
                delta: sol.delta,
                delta_bound,
                delta_bound_holds: sol.delta <= delta_bound,
            })
        })
        .collect()
}
