//! Legendre polynomials and the Gauss quadrature rules built on them.

use crate::error::{Error, Result};

/// L_n(x) by the three-term recurrence.
pub fn legendre_value(n: usize, x: f64) -> f64 {
    legendre_with_derivative(n, x).0
}

/// (L_n(x), L_n'(x)).
///
/// The derivative is accumulated alongside the value with
/// L_k' = L_{k-2}' + (2k - 1) L_{k-1}, which is stable on all of [-1, 1]
/// including the endpoints.
pub fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    if n == 0 {
        return (1.0, 0.0);
    }
    if n == 1 {
        return (x, 1.0);
    }
    let mut p_prev = 1.0; // L_{k-2}
    let mut p = x; // L_{k-1}
    let mut d_prev = 0.0; // L_{k-2}'
    let mut d = 1.0; // L_{k-1}'
    for k in 2..=n {
        let kf = k as f64;
        let p_next = ((2.0 * kf - 1.0) * x * p - (kf - 1.0) * p_prev) / kf;
        let d_next = d_prev + (2.0 * kf - 1.0) * p;
        p_prev = p;
        p = p_next;
        d_prev = d;
        d = d_next;
    }
    (p, d)
}

/// Legendre-Gauss-Lobatto rule with n + 1 points on [-1, 1], endpoints
/// included; exact for polynomials of degree <= 2n - 1.
pub fn gauss_lobatto(n: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "Gauss-Lobatto rule needs degree >= 2, got {n}"
        )));
    }
    let nf = n as f64;
    let mut nodes = vec![0.0; n + 1];
    let mut weights = vec![0.0; n + 1];
    nodes[0] = -1.0;
    nodes[n] = 1.0;
    // Interior nodes are the roots of L_n'. Newton from the Chebyshev-Lobatto
    // points converges in a handful of iterations.
    for j in 1..n {
        let mut x = -(std::f64::consts::PI * j as f64 / nf).cos();
        for _ in 0..100 {
            let (v, d) = legendre_with_derivative(n, x);
            // L_n'' from the Legendre differential equation, valid for |x| < 1.
            let d2 = (2.0 * x * d - nf * (nf + 1.0) * v) / (1.0 - x * x);
            let step = d / d2;
            x -= step;
            if step.abs() < 1e-15 {
                break;
            }
        }
        nodes[j] = x;
    }
    nodes.sort_by(|a, b| a.partial_cmp(b).unwrap());
    for j in 0..=n {
        let v = legendre_value(n, nodes[j]);
        weights[j] = 2.0 / (nf * (nf + 1.0) * v * v);
    }
    Ok((nodes, weights))
}

/// Gauss-Legendre rule with n interior points on (-1, 1); exact for
/// polynomials of degree <= 2n - 1. No node touches the endpoints.
pub fn gauss_legendre(n: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "Gauss rule needs at least one point".into(),
        ));
    }
    let nf = n as f64;
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for j in 0..n {
        let mut x =
            (std::f64::consts::PI * (j as f64 + 0.75) / (nf + 0.5)).cos();
        for _ in 0..100 {
            let (v, d) = legendre_with_derivative(n, x);
            let step = v / d;
            x -= step;
            if step.abs() < 1e-15 {
                break;
            }
        }
        let (_, d) = legendre_with_derivative(n, x);
        nodes[j] = x;
        weights[j] = 2.0 / ((1.0 - x * x) * d * d);
    }
    nodes.reverse();
    weights.reverse();
    Ok((nodes, weights))
}
