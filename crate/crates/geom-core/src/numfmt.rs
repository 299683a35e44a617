//! Plain-decimal float formatting at 17 significant digits, enough to
//! reconstruct the original bits on parse.

/// Format with 17 significant digits, no exponent notation. Zero keeps
/// its sign so the output always parses back to the original bits.
pub fn fmt_sig17(x: f64) -> String {
    if x == 0.0 {
        return if x.is_sign_negative() { "-0" } else { "0" }.to_string();
    }
    let mag = x.abs().log10().floor() as i32;
    let prec = (16 - mag).max(0) as usize;
    format!("{:.*}", prec, x)
}

#[cfg(test)]
mod tests {
    use super::fmt_sig17;

    #[test]
    fn zero_is_bare_and_signed() {
        assert_eq!(fmt_sig17(0.0), "0");
        assert_eq!(fmt_sig17(-0.0), "-0");
        assert_eq!(fmt_sig17(-0.0).parse::<f64>().unwrap().to_bits(), (-0.0f64).to_bits());
    }

    #[test]
    fn round_trips_assorted_magnitudes() {
        for &x in &[
            1.0,
            -1.0,
            0.5,
            3.141277250932773,
            0.999698818696204,
            1.5830404486585742e-3,
            3.9684604491441178e-9,
            -6.8184224746636879e-5,
            123456.789,
        ] {
            let s = fmt_sig17(x);
            assert!(!s.contains('e') && !s.contains('E'), "{s}");
            assert_eq!(s.parse::<f64>().unwrap(), x, "{s}");
        }
    }

    #[test]
    fn large_values_keep_integer_digits() {
        assert_eq!(fmt_sig17(2.0), "2.0000000000000000");
        let s = fmt_sig17(1e20);
        assert_eq!(s.parse::<f64>().unwrap(), 1e20);
    }
}
