use std::f64::consts::PI;

use crate::SignOptError;

fn require_s(s: u32) -> Result<(), SignOptError> {
    if s < 2 {
        return Err(SignOptError::Parameter(format!(
            "the bound is defined for s >= 2, got s = {s}"
        )));
    }
    Ok(())
}

/// 2^{s−2} · Π_{k=1..s} sin(π/2^k), an upper bound on the minimal
/// objective at n = 2^s. Tight at s = 2 and s = 3.
pub fn m_upper_bound(s: u32) -> Result<f64, SignOptError> {
    require_s(s)?;
    let product: f64 = (1..=s).map(|k| (PI / 2f64.powi(k as i32)).sin()).product();
    Ok(2f64.powi(s as i32 - 2) * product)
}

/// The looser closed form (√2/π²) · π^s / 2^{s(s−1)/2}, for cross-checks.
pub fn m_upper_bound_closed(s: u32) -> Result<f64, SignOptError> {
    require_s(s)?;
    let half_exp = (s * (s - 1) / 2) as i32;
    Ok(2f64.sqrt() / (PI * PI) * PI.powi(s as i32) / 2f64.powi(half_exp))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_s_values_are_tight() {
        assert!((m_upper_bound(2).unwrap() - (PI / 4.0).sin()).abs() < 1e-15);
        let m8 = 2.0 * (PI / 4.0).sin() * (PI / 8.0).sin();
        assert!((m_upper_bound(3).unwrap() - m8).abs() < 1e-15);
    }

    #[test]
    fn product_form_stays_under_closed_form() {
        for s in 3..=12 {
            let p = m_upper_bound(s).unwrap();
            let c = m_upper_bound_closed(s).unwrap();
            assert!(p <= c + 1e-15, "s = {s}: {p} vs {c}");
        }
    }

    #[test]
    fn too_small_s_is_rejected() {
        assert!(matches!(m_upper_bound(1), Err(SignOptError::Parameter(_))));
        assert!(matches!(
            m_upper_bound_closed(0),
            Err(SignOptError::Parameter(_))
        ));
    }
}
