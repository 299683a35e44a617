//! Closed-form perimeter and width for every family, plus
//! cancellation-free expressions for their gaps to the upper bounds.

use std::f64::consts::PI;

use geom_core::Metrics;
use signopt::{block_pattern_result, solve_delta, DeltaSolution, SignSearchResult};

use crate::ConstructError;

/// The polygon families with closed-form metrics.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Regular n-gon with unit main diagonal.
    Rn,
    /// First closed-form competitor family (metrics only).
    Bn,
    /// Second, stronger closed-form competitor family (metrics only).
    Cn,
    /// The chain polygon built by this crate.
    Dn,
    /// The perimeter and width upper bounds themselves.
    Upper,
}

/// Half-angle offsets entering the B and C closed forms.
fn b_offset(nf: f64) -> f64 {
    0.5 * (0.5 * (2.0 * PI / nf).sin()).asin()
}

fn c_offset(nf: f64) -> f64 {
    let s = (PI / nf).sin();
    0.5 * ((2.0 * PI / nf).tan() * (PI / nf).tan()).atan()
        - 0.5
            * ((2.0 * PI / nf).sin() * s / (4.0 * s * s + (4.0 * PI / nf).cos()).sqrt()).asin()
}

fn require_family_n(n: u32, family: Family) -> Result<f64, ConstructError> {
    let min = match family {
        Family::Rn | Family::Bn | Family::Upper => 4,
        Family::Cn | Family::Dn => 16,
    };
    if !n.is_power_of_two() || n < min {
        return Err(ConstructError::Parameter(format!(
            "family {family:?} is defined for powers of two n >= {min}, got n = {n}"
        )));
    }
    Ok(f64::from(n))
}

/// Closed-form metrics for the chain polygon described by a
/// sign-search result, along with the turning angle it uses.
pub fn dn_closed_form(
    result: &SignSearchResult,
) -> Result<(Metrics, DeltaSolution), ConstructError> {
    let n = result.best.n();
    let nf = require_family_n(n, Family::Dn)?;
    let sol = solve_delta(n, result.sigma)?;
    let l = 2.0 * nf * (PI / (2.0 * nf)).sin() * (sol.delta / 2.0).cos();
    let w = (PI / (2.0 * nf) + sol.delta / 2.0).cos();
    Ok((Metrics::from_closed_form(n, l, w)?, sol))
}

/// Closed-form perimeter and width of a family at a given n. The Dn
/// entry uses the repeated-block-expansion vector.
pub fn closed_form_reference(n: u32, family: Family) -> Result<Metrics, ConstructError> {
    let nf = require_family_n(n, family)?;
    let lead = 2.0 * nf * (PI / (2.0 * nf)).sin();
    let (l, w) = match family {
        Family::Rn => (nf * (PI / nf).sin(), (PI / nf).cos()),
        Family::Bn => {
            let u = b_offset(nf);
            (lead * (PI / (2.0 * nf) - u).cos(), (PI / nf - u).cos())
        }
        Family::Cn => {
            let a = c_offset(nf);
            (lead * a.cos(), (PI / (2.0 * nf) + a).cos())
        }
        Family::Dn => {
            return Ok(dn_closed_form(&block_pattern_result(n)?)?.0);
        }
        Family::Upper => (lead, (PI / (2.0 * nf)).cos()),
    };
    Ok(Metrics::from_closed_form(n, l, w)?)
}

/// Gaps of a family's closed-form metrics below the upper bounds, in a
/// product form that avoids subtracting nearly equal quantities.
#[derive(Debug, Clone, Copy)]
pub struct ClosedFormGaps {
    pub perimeter_gap: f64,
    pub width_gap: f64,
}

pub fn closed_form_gaps(n: u32, family: Family) -> Result<ClosedFormGaps, ConstructError> {
    let nf = require_family_n(n, family)?;
    let lead = 2.0 * nf * (PI / (2.0 * nf)).sin();
    let half_sin_sq = |x: f64| {
        let s = (x / 2.0).sin();
        2.0 * s * s
    };
    let (perimeter_gap, width_gap) = match family {
        Family::Rn => (
            lead * half_sin_sq(PI / (2.0 * nf)),
            2.0 * (3.0 * PI / (4.0 * nf)).sin() * (PI / (4.0 * nf)).sin(),
        ),
        Family::Bn => {
            let u = b_offset(nf);
            let theta = PI / (2.0 * nf) - u;
            (
                lead * half_sin_sq(theta),
                2.0 * ((PI / (2.0 * nf) + PI / nf - u) / 2.0).sin()
                    * ((PI / nf - u - PI / (2.0 * nf)) / 2.0).sin(),
            )
        }
        Family::Cn => {
            let a = c_offset(nf);
            (
                lead * half_sin_sq(a),
                2.0 * (PI / (2.0 * nf) + a / 2.0).sin() * (a / 2.0).sin(),
            )
        }
        Family::Dn => {
            let (_, sol) = dn_closed_form(&block_pattern_result(n)?)?;
            (
                lead * half_sin_sq(sol.delta / 2.0),
                2.0 * (PI / (2.0 * nf) + sol.delta / 4.0).sin() * (sol.delta / 4.0).sin(),
            )
        }
        Family::Upper => {
            return Err(ConstructError::Parameter(
                "the bound family has no gap to itself".to_string(),
            ));
        }
    };
    Ok(ClosedFormGaps {
        perimeter_gap,
        width_gap,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn regular_square_closed_form() {
        let m = closed_form_reference(4, Family::Rn).unwrap();
        assert!((m.perimeter - 2.0 * 2.0f64.sqrt()).abs() < 1e-15);
        assert!((m.width - 2.0f64.sqrt() / 2.0).abs() < 1e-15);
    }

    #[test]
    fn family_domain_checks() {
        assert!(matches!(
            closed_form_reference(8, Family::Cn),
            Err(ConstructError::Parameter(_))
        ));
        assert!(matches!(
            closed_form_reference(24, Family::Rn),
            Err(ConstructError::Parameter(_))
        ));
        assert!(matches!(
            closed_form_gaps(16, Family::Upper),
            Err(ConstructError::Parameter(_))
        ));
    }

    #[test]
    fn gaps_match_direct_subtraction_roughly() {
        for family in [Family::Rn, Family::Bn, Family::Cn, Family::Dn] {
            let n = 16u32;
            let m = closed_form_reference(n, family).unwrap();
            let upper = closed_form_reference(n, Family::Upper).unwrap();
            let g = closed_form_gaps(n, family).unwrap();
            assert!(
                (g.perimeter_gap - (upper.perimeter - m.perimeter)).abs() < 1e-12,
                "{family:?}"
            );
            assert!(
                (g.width_gap - (upper.width - m.width)).abs() < 1e-12,
                "{family:?}"
            );
        }
    }
}
