//! Zonal harmonics `Z_ξ^{(l)}` — reproducing kernels of the degree-`l`
//! spherical-harmonic spaces — realized as calibrated multiples of Gegenbauer
//! polynomials in `ξ·η`.
//!
//! The proportionality constant is pinned numerically, once per `(l, d)`, by
//! enforcing the reproducing identity on one fixed harmonic; the constant and
//! its verification residual are kept for reports.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::geometry::sphere_quadrature;
use crate::specfun::{chebyshev_t, gegenbauer};
use crate::{Error, Result, C64};

use super::bigraded::harmonic_basis;

/// A calibrated zonal constant and the residual of its verification on an
/// independent harmonic.
#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct ZonalConstant {
    pub l: u32,
    pub d: usize,
    pub constant: f64,
    pub residual: f64,
}

fn cache() -> &'static Mutex<HashMap<(u32, usize), ZonalConstant>> {
    static CACHE: OnceLock<Mutex<HashMap<(u32, usize), ZonalConstant>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The radial profile: `G_l^{(d-2)/2}(t)` for `d >= 3`, `T_l(t)` for `d = 2`.
pub fn zonal_profile(l: u32, d: usize, t: f64) -> f64 {
    if d == 2 {
        chebyshev_t(l, t)
    } else {
        gegenbauer(l, (d as f64 - 2.0) / 2.0, t, 0)
    }
}

/// Deterministic pole used for calibration.
fn calibration_pole(n: usize) -> Vec<C64> {
    let raw: Vec<f64> = (0..2 * n)
        .map(|k| 1.0 / (1.3 + 0.7 * k as f64) * if k % 3 == 1 { -1.0 } else { 1.0 })
        .collect();
    let norm: f64 = raw.iter().map(|x| x * x).sum::<f64>().sqrt();
    crate::to_complex(&raw.iter().map(|x| x / norm).collect::<Vec<f64>>())
}

fn real_dot(a: &[C64], b: &[C64]) -> f64 {
    // ξ·η in R^{2n}: Re Σ z_j conj(w_j)
    a.iter().zip(b).map(|(x, y)| (x * y.conj()).re).sum()
}

/// Calibrated constant `c_{l,d}` with `Z_ξ^{(l)}(η) = c_{l,d} G_l^{(d-2)/2}(ξ·η)`.
///
/// Only even `d = 2n`, `n ∈ {1,2,3}` can be calibrated (the harmonic bases are
/// built on `C^n`).
pub fn zonal_constant(l: u32, d: usize) -> Result<ZonalConstant> {
    if let Some(c) = cache().lock().unwrap().get(&(l, d)) {
        return Ok(*c);
    }
    if d % 2 != 0 || !(1..=3).contains(&(d / 2)) {
        return Err(Error::Unsupported(format!(
            "zonal calibration needs d = 2n with n in 1..=3, got d = {d}"
        )));
    }
    let n = d / 2;
    let computed = if l == 0 {
        // reproducing on constants: Z^{(0)} = 1 / σ(S^{d-1})
        let rule = sphere_quadrature(n, 1.0, 2)?;
        ZonalConstant { l, d, constant: 1.0 / rule.total_mass, residual: 0.0 }
    } else {
        let rule = sphere_quadrature(n, 1.0, 2 * l as usize + 4)?;
        let pole = calibration_pole(n);
        // primary harmonic for the constant, secondary for the residual
        let primary = harmonic_basis(n, l, 0)?;
        let y0 = &primary.elements[0];
        let integral = rule.integrate(|eta| {
            C64::new(zonal_profile(l, d, real_dot(&pole, eta)), 0.0) * y0.eval(eta)
        });
        let at_pole = y0.eval(&pole);
        if integral.norm() < 1e-14 || at_pole.norm() < 1e-14 {
            return Err(Error::Domain(format!(
                "degenerate calibration for zonal l={l}, d={d}"
            )));
        }
        let ratio = at_pole / integral;
        // the constant is real for the Gegenbauer kernel
        let constant = ratio.re;
        let secondary = harmonic_basis(n, 0, l)?;
        let y1 = &secondary.elements[secondary.dim() - 1];
        let check = rule.integrate(|eta| {
            C64::new(constant * zonal_profile(l, d, real_dot(&pole, eta)), 0.0) * y1.eval(eta)
        });
        let want = y1.eval(&pole);
        let residual = (check - want).norm() / want.norm().max(1e-12);
        ZonalConstant { l, d, constant, residual }
    };
    cache().lock().unwrap().insert((l, d), computed);
    Ok(computed)
}

/// Zonal harmonic `Z_ξ^{(l)}(η)` on `S^{d-1}`, `d = 2n`; depends on `(ξ, η)`
/// only through `ξ·η`.
pub fn zonal(l: u32, d: usize, xi: &[C64], eta: &[C64]) -> Result<f64> {
    let c = zonal_constant(l, d)?;
    Ok(c.constant * zonal_profile(l, d, real_dot(xi, eta)))
}

/// All calibrated zonal constants gathered so far (for report calibration
/// blocks), sorted by `(d, l)`.
pub fn zonal_calibration_snapshot() -> Vec<ZonalConstant> {
    let mut v: Vec<ZonalConstant> = cache().lock().unwrap().values().cloned().collect();
    v.sort_by(|a, b| (a.d, a.l).cmp(&(b.d, b.l)));
    v
}
