//! Generalized Laguerre polynomials `L_k^ν` and Laguerre functions
//! `φ_k^ν(x) = L_k^ν(x²/2) e^{-x²/4}`.

use crate::{Error, Result};

use super::gamma::binomial_falling;

/// `L_k^ν(x)` by the stable forward three-term recurrence
/// `(m+1) L_{m+1} = (2m+ν+1-x) L_m - (m+ν) L_{m-1}`.
///
/// `ν` may be any real that is not a negative integer `<= -1`.
pub fn laguerre(k: u32, nu: f64, x: f64) -> Result<f64> {
    if nu <= -1.0 && nu == nu.floor() {
        return Err(Error::Domain(format!(
            "Laguerre order ν = {nu} is a negative integer; binomial undefined"
        )));
    }
    Ok(laguerre_unchecked(k, nu, x))
}

pub(crate) fn laguerre_unchecked(k: u32, nu: f64, x: f64) -> f64 {
    if k == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut cur = 1.0 + nu - x;
    for m in 1..k {
        let m = m as f64;
        let next = ((2.0 * m + nu + 1.0 - x) * cur - (m + nu) * prev) / (m + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// `L_k^ν(x)` by the defining binomial sum. Suffers cancellation for large
/// `k`; kept as an independent cross-check for `k <= 10`.
pub fn laguerre_sum(k: u32, nu: f64, x: f64) -> Result<f64> {
    if nu <= -1.0 && nu == nu.floor() {
        return Err(Error::Domain(format!(
            "Laguerre order ν = {nu} is a negative integer; binomial undefined"
        )));
    }
    let mut acc = 0.0;
    let mut xpow = 1.0; // (-x)^j / j!
    for j in 0..=k {
        acc += binomial_falling(nu + k as f64, k - j) * xpow;
        xpow *= -x / (j as f64 + 1.0);
    }
    Ok(acc)
}

/// Laguerre function `φ_k^{n-1}` on `C^n`, evaluated at any point with
/// `|z| = r`: `L_k^{n-1}(r²/2) e^{-r²/4}`.
pub fn laguerre_function(k: u32, n: usize, r: f64) -> Result<f64> {
    if n == 0 {
        return Err(Error::Domain("dimension n must be >= 1".into()));
    }
    if r < 0.0 {
        return Err(Error::Domain(format!("radius must be non-negative, got {r}")));
    }
    Ok(laguerre_fn(k, (n - 1) as f64, r))
}

/// Laguerre function of arbitrary real order: `φ_k^ν(x) = L_k^ν(x²/2) e^{-x²/4}`.
pub fn laguerre_fn(k: u32, nu: f64, x: f64) -> f64 {
    laguerre_unchecked(k, nu, x * x / 2.0) * (-x * x / 4.0).exp()
}

/// Scaled Laguerre function `φ_{k,λ}^ν(x) = φ_k^ν(√|λ| x)`.
pub fn laguerre_fn_scaled(k: u32, nu: f64, lambda: f64, x: f64) -> f64 {
    laguerre_fn(k, nu, lambda.abs().sqrt() * x)
}
