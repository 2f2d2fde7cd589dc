//! Gegenbauer (ultraspherical) polynomials `G_l^β` and their derivatives.

use super::gamma::pochhammer;

fn gegenbauer_poly(l: u32, beta: f64, t: f64) -> f64 {
    if l == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut cur = 2.0 * beta * t;
    for m in 2..=l {
        let m = m as f64;
        let next = (2.0 * t * (m + beta - 1.0) * cur - (m + 2.0 * beta - 2.0) * prev) / m;
        prev = cur;
        cur = next;
    }
    cur
}

/// `m`-th derivative of the Gegenbauer polynomial `G_l^β` at `t`.
///
/// Uses the exact ladder `D^m G_l^β = 2^m (β)_m G_{l-m}^{β+m}`; `m = 0` gives
/// the polynomial value. Returns 0 when `m > l`.
pub fn gegenbauer(l: u32, beta: f64, t: f64, m: u32) -> f64 {
    if m > l {
        return 0.0;
    }
    let factor = 2.0_f64.powi(m as i32) * pochhammer(beta, m);
    factor * gegenbauer_poly(l - m, beta + m as f64, t)
}

/// Chebyshev polynomial of the first kind `T_l(t)`; the β -> 0 degenerate
/// member of the Gegenbauer family, used for zonal kernels on `S^1`.
pub fn chebyshev_t(l: u32, t: f64) -> f64 {
    if l == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut cur = t;
    for _ in 2..=l {
        let next = 2.0 * t * cur - prev;
        prev = cur;
        cur = next;
    }
    cur
}
