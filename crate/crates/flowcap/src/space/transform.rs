//! Transforms between Legendre coefficients and point values.
//!
//! Analysis uses collocation at Gauss-Lobatto nodes with the discrete
//! orthogonality of the quadrature; the discrete norm of the top mode
//! differs from the continuous 2/(2n+1), so the norms are accumulated
//! numerically and the round trip is exact on polynomials of matching degree.

use crate::error::{Error, Result};
use crate::space::legendre::legendre_value;

/// Evaluate sum_n coeffs[n] L_n at each point.
pub fn spectral_synthesis(coeffs: &[f64], points: &[f64]) -> Vec<f64> {
    points
        .iter()
        .map(|&x| synthesize_at(coeffs, x))
        .collect()
}

/// Evaluate a Legendre series at a single point.
pub fn synthesize_at(coeffs: &[f64], x: f64) -> f64 {
    match coeffs.len() {
        0 => 0.0,
        1 => coeffs[0],
        _ => {
            let mut acc = coeffs[0] + coeffs[1] * x;
            let mut p_prev = 1.0;
            let mut p = x;
            for (k, &c) in coeffs.iter().enumerate().skip(2) {
                let kf = k as f64;
                let p_next = ((2.0 * kf - 1.0) * x * p - (kf - 1.0) * p_prev) / kf;
                p_prev = p;
                p = p_next;
                acc += c * p;
            }
            acc
        }
    }
}

/// Recover Legendre coefficients from values at the Gauss-Lobatto nodes of
/// the matching rule.
pub fn spectral_analysis(
    values: &[f64],
    nodes: &[f64],
    weights: &[f64],
) -> Result<Vec<f64>> {
    if values.len() != nodes.len() || nodes.len() != weights.len() {
        return Err(Error::ShapeMismatch(format!(
            "analysis needs matching sizes, got {} values on a {}-node rule",
            values.len(),
            nodes.len()
        )));
    }
    let n = nodes.len() - 1; // polynomial degree of the rule
    let mut coeffs = vec![0.0; n + 1];
    for (mode, c) in coeffs.iter_mut().enumerate() {
        let mut num = 0.0;
        let mut norm = 0.0;
        for q in 0..=n {
            let l = legendre_value(mode, nodes[q]);
            num += weights[q] * l * values[q];
            norm += weights[q] * l * l;
        }
        *c = num / norm;
    }
    Ok(coeffs)
}

/// Coefficients of the derivative of a Legendre series.
pub fn legendre_derivative_coeffs(coeffs: &[f64]) -> Vec<f64> {
    let n = coeffs.len();
    if n <= 1 {
        return vec![0.0; n.max(1)];
    }
    let mut deriv = vec![0.0; n - 1];
    // b_k = (2k+1) (a_{k+1} + b_{k+2} / (2k+5)), descending in k.
    for k in (0..n - 1).rev() {
        let tail = if k + 2 < n - 1 {
            deriv[k + 2] / (2.0 * (k as f64) + 5.0)
        } else {
            0.0
        };
        deriv[k] = (2.0 * (k as f64) + 1.0) * (coeffs[k + 1] + tail);
    }
    deriv
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::legendre::gauss_lobatto;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    #[test]
    fn single_mode_synthesis() {
        // only the L_1 coefficient set: value is the point itself
        let values = spectral_synthesis(&[0.0, 1.0], &[0.25]);
        assert_eq!(values, vec![0.25]);
    }

    #[test]
    fn zero_coefficients_give_zero_values() {
        let values = spectral_synthesis(&[0.0; 9], &[-0.4, 0.0, 0.9]);
        assert!(values.iter().all(|&v| v == 0.0));
    }

    #[test]
    fn round_trip_on_random_polynomial() {
        let mut rng = StdRng::seed_from_u64(42);
        for n in [4usize, 16, 33] {
            let (nodes, weights) = gauss_lobatto(n).unwrap();
            let coeffs: Vec<f64> = (0..=n).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let values = spectral_synthesis(&coeffs, &nodes);
            let recovered = spectral_analysis(&values, &nodes, &weights).unwrap();
            let resampled = spectral_synthesis(&recovered, &nodes);
            for (a, b) in values.iter().zip(&resampled) {
                assert!((a - b).abs() < 1e-10, "n = {n}");
            }
            for (a, b) in coeffs.iter().zip(&recovered) {
                assert!((a - b).abs() < 1e-10, "n = {n}");
            }
        }
    }

    #[test]
    fn analysis_rejects_mismatched_sizes() {
        let (nodes, weights) = gauss_lobatto(4).unwrap();
        assert!(spectral_analysis(&[0.0; 3], &nodes, &weights).is_err());
    }

    #[test]
    fn derivative_coefficients_match_finite_differences() {
        let coeffs = [0.3, -1.2, 0.5, 0.8, -0.1, 0.25];
        let deriv = legendre_derivative_coeffs(&coeffs);
        let h = 1e-6;
        for i in 0..11 {
            let x = -0.95 + 0.19 * i as f64;
            let d = synthesize_at(&deriv, x);
            let fd = (synthesize_at(&coeffs, x + h) - synthesize_at(&coeffs, x - h)) / (2.0 * h);
            assert!((d - fd).abs() < 1e-6 * (1.0 + d.abs()), "x = {x}");
        }
    }
}
