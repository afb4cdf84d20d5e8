//! Exponential modal filter for post-processing under-resolved spectral
//! reconstructions.

/// Damping strength that sends the top mode to machine epsilon:
/// sigma(1) = exp(-a) = eps_machine.
pub fn default_filter_strength() -> f64 {
    -f64::EPSILON.ln()
}

/// Scale each Legendre mode by sigma(n/N) = exp(-a (n/N)^p).
///
/// The plain exponential has p = 1; the exponent is exposed for
/// experimentation and defaults to 1 in the drivers. The zeroth mode is
/// always untouched and the multipliers decrease strictly with n.
pub fn exponential_filter(coeffs: &[f64], a: f64, exponent: f64) -> Vec<f64> {
    let n = coeffs.len().saturating_sub(1).max(1) as f64;
    coeffs
        .iter()
        .enumerate()
        .map(|(k, &c)| c * (-a * (k as f64 / n).powf(exponent)).exp())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_mode_is_untouched() {
        let filtered = exponential_filter(&[2.5, 1.0, 1.0], default_filter_strength(), 1.0);
        assert_eq!(filtered[0], 2.5);
    }

    #[test]
    fn top_mode_is_scaled_to_machine_epsilon() {
        let coeffs = vec![1.0; 17];
        let filtered = exponential_filter(&coeffs, default_filter_strength(), 1.0);
        let sigma_top = filtered[16];
        assert!((sigma_top - f64::EPSILON).abs() <= 1e-12 * f64::EPSILON.max(sigma_top));
    }

    #[test]
    fn zeros_stay_zero() {
        let filtered = exponential_filter(&[0.0; 8], 3.0, 1.0);
        assert!(filtered.iter().all(|&c| c == 0.0));
    }

    #[test]
    fn multipliers_contract_and_decrease() {
        let coeffs = vec![1.0; 33];
        let filtered = exponential_filter(&coeffs, default_filter_strength(), 1.0);
        for k in 0..filtered.len() {
            assert!(filtered[k].abs() <= 1.0);
            if k > 0 {
                assert!(filtered[k] < filtered[k - 1]);
            }
        }
    }

    #[test]
    fn exponent_two_damps_low_modes_less() {
        let coeffs = vec![1.0; 17];
        let p1 = exponential_filter(&coeffs, 4.0, 1.0);
        let p2 = exponential_filter(&coeffs, 4.0, 2.0);
        for k in 1..16 {
            assert!(p2[k] > p1[k], "mode {k}");
        }
    }
}
