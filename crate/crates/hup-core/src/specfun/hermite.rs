//! Hermite functions: the `L²(R)`-normalized eigenfunctions of the harmonic
//! oscillator and their scaled multi-dimensional products.

use super::MultiIndex;

/// Normalized 1-D Hermite function `h_k(t) = (2^k k! √π)^{-1/2} H_k(t) e^{-t²/2}`
/// via the stable recurrence
/// `h_{k+1} = √(2/(k+1)) t h_k − √(k/(k+1)) h_{k-1}`.
pub fn hermite_1d(k: u32, t: f64) -> f64 {
    let h0 = std::f64::consts::PI.powf(-0.25) * (-t * t / 2.0).exp();
    if k == 0 {
        return h0;
    }
    let mut prev = h0;
    let mut cur = std::f64::consts::SQRT_2 * t * h0;
    for m in 1..k {
        let m = m as f64;
        let next = (2.0 / (m + 1.0)).sqrt() * t * cur - (m / (m + 1.0)).sqrt() * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Scaled multi-dimensional Hermite function
/// `φ_α^λ(x) = |λ|^{n/4} Π_j h_{α_j}(√|λ| x_j)`.
///
/// Panics if `dim(x) != dim(α)` or `λ = 0`.
pub fn hermite_function(alpha: &MultiIndex, x: &[f64], lambda: f64) -> f64 {
    assert_eq!(alpha.dim(), x.len(), "dimension mismatch");
    assert!(lambda != 0.0, "λ must be nonzero");
    let s = lambda.abs().sqrt();
    let n = x.len() as i32;
    let mut prod = lambda.abs().powf(n as f64 / 4.0);
    for (j, &xj) in x.iter().enumerate() {
        prod *= hermite_1d(alpha[j], s * xj);
    }
    prod
}
