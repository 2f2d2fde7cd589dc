//! Log-Gamma and generalized binomial coefficients.

use std::f64::consts::PI;

/// Lanczos coefficients, g = 7, n = 9.
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

fn ln_gamma_positive(x: f64) -> f64 {
    debug_assert!(x > 0.0);
    let z = x - 1.0;
    let mut acc = LANCZOS[0];
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        acc += c / (z + i as f64);
    }
    let t = z + 7.5;
    0.5 * (2.0 * PI).ln() + (z + 0.5) * t.ln() - t + acc.ln()
}

/// `ln Γ(x)` for `x > 0`.
pub fn ln_gamma(x: f64) -> f64 {
    assert!(x > 0.0, "ln_gamma requires a positive argument, got {x}");
    ln_gamma_positive(x)
}

/// `(ln |Γ(x)|, sign of Γ(x))` for any non-pole `x`.
///
/// Uses the reflection formula for `x <= 0`. Poles (non-positive integers)
/// return `(+inf, 0.0)`.
pub fn ln_gamma_sign(x: f64) -> (f64, f64) {
    if x > 0.0 {
        return (ln_gamma_positive(x), 1.0);
    }
    if x == x.floor() {
        return (f64::INFINITY, 0.0);
    }
    // Γ(x) = π / (sin(πx) Γ(1-x)), 1-x > 1 > 0
    let s = (PI * x).sin();
    let ln_abs = PI.ln() - s.abs().ln() - ln_gamma_positive(1.0 - x);
    (ln_abs, s.signum())
}

/// Generalized binomial `C(v, m)` with integer lower index via the falling
/// factorial `v (v-1) ... (v-m+1) / m!`. Exact structure for any real `v`.
pub fn binomial_falling(v: f64, m: u32) -> f64 {
    let mut num = 1.0;
    for i in 0..m {
        num *= (v - i as f64) / (i as f64 + 1.0);
    }
    num
}

/// Generalized binomial `C(a, b) = Γ(a+1) / (Γ(b+1) Γ(a-b+1))` for real
/// `a, b` with all three arguments away from poles.
pub fn binomial_real(a: f64, b: f64) -> f64 {
    let (la, sa) = ln_gamma_sign(a + 1.0);
    let (lb, sb) = ln_gamma_sign(b + 1.0);
    let (lc, sc) = ln_gamma_sign(a - b + 1.0);
    sa * sb * sc * (la - lb - lc).exp()
}

/// Pochhammer symbol `(x)_m = x (x+1) ... (x+m-1)`.
pub fn pochhammer(x: f64, m: u32) -> f64 {
    (0..m).fold(1.0, |acc, i| acc * (x + i as f64))
}
