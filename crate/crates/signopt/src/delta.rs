use std::f64::consts::PI;

use crate::SignOptError;

/// Residual bound the polished root must meet.
pub const DELTA_RESIDUAL_TOL: f64 = 1e-14;

/// Root of σ(cos δ − cos(π/n)) = sin δ on [0, π/n).
#[derive(Debug, Clone, Copy)]
pub struct DeltaSolution {
    pub n: u32,
    pub sigma: f64,
    pub delta: f64,
    pub residual: f64,
}

/// Solve σ(cos δ − cos(π/n)) = sin δ for δ. The closed form
/// δ = arccos(q cos(π/n)) − arccos(q) with q = σ/√(1+σ²) lands on the
/// root already; a few Newton steps absorb the rounding.
pub fn solve_delta(n: u32, sigma: f64) -> Result<DeltaSolution, SignOptError> {
    if n < 4 {
        return Err(SignOptError::Parameter(format!(
            "the turning angle is defined for n >= 4, got n = {n}"
        )));
    }
    if !(sigma >= 0.0 && sigma.is_finite()) {
        return Err(SignOptError::Parameter(format!(
            "sigma must be finite and nonnegative, got {sigma}"
        )));
    }
    let limit = PI / f64::from(n);
    let cos_limit = limit.cos();
    let f = |x: f64| sigma * (x.cos() - cos_limit) - x.sin();
    let df = |x: f64| -sigma * x.sin() - x.cos();

    let q = sigma / (1.0 + sigma * sigma).sqrt();
    let mut delta = (q * cos_limit).acos() - q.acos();
    let mut residual = f(delta).abs();
    for _ in 0..5 {
        if residual <= DELTA_RESIDUAL_TOL {
            break;
        }
        let step = f(delta) / df(delta);
        let next = delta - step;
        if !next.is_finite() {
            break;
        }
        delta = next;
        residual = f(delta).abs();
    }
    if residual > DELTA_RESIDUAL_TOL || !(0.0..limit).contains(&delta) {
        return Err(SignOptError::Numerical(format!(
            "no root of the turning-angle equation in [0, {limit}) for n = {n}, \
             sigma = {sigma}: delta = {delta}, residual = {residual}"
        )));
    }
    Ok(DeltaSolution {
        n,
        sigma,
        delta,
        residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_sigma_gives_zero_delta() {
        let d = solve_delta(16, 0.0).unwrap();
        assert_eq!(d.delta, 0.0);
        assert_eq!(d.residual, 0.0);
    }

    #[test]
    fn delta_stays_below_linear_bound() {
        let n = 16u32;
        let sigma = 0.07;
        let d = solve_delta(n, sigma).unwrap();
        assert!(d.delta > 0.0);
        assert!(d.delta <= (1.0 - (PI / f64::from(n)).cos()) * sigma);
    }

    #[test]
    fn invalid_inputs_are_rejected() {
        assert!(matches!(solve_delta(2, 0.1), Err(SignOptError::Parameter(_))));
        assert!(matches!(
            solve_delta(16, -0.1),
            Err(SignOptError::Parameter(_))
        ));
        assert!(matches!(
            solve_delta(16, f64::NAN),
            Err(SignOptError::Parameter(_))
        ));
    }
}
