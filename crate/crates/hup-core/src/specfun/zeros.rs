//! Real-zero location for the Laguerre and Bessel families: scan for sign
//! changes, then refine by bisection followed by secant polish.

use crate::{Error, Result};

use super::bessel::bessel_j;
use super::laguerre::laguerre_unchecked;
use super::SpecValue;

/// Which function family to locate zeros of.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ZeroFamily {
    /// `x -> L_degree^order(x)`
    Laguerre { degree: u32, order: f64 },
    /// `x -> J_order(x)`
    BesselJ { order: f64 },
}

impl ZeroFamily {
    fn eval(&self, x: f64) -> f64 {
        match *self {
            ZeroFamily::Laguerre { degree, order } => laguerre_unchecked(degree, order, x),
            ZeroFamily::BesselJ { order } => bessel_j(order, x).unwrap_or(f64::NAN),
        }
    }

    fn default_scan_points(&self, interval: (f64, f64)) -> usize {
        let len = interval.1 - interval.0;
        match *self {
            ZeroFamily::Laguerre { degree, .. } => (200 * degree as usize).max(2000),
            // J oscillates with period ~π for large x
            ZeroFamily::BesselJ { .. } => ((len * 40.0) as usize).max(2000),
        }
    }
}

/// All zeros of the chosen family inside `interval`, sorted ascending, each
/// bracketed by a sign change on the scan grid and refined to 1e-12 absolute.
///
/// Returns `Error::Bracketing` when no sign change exists on the interval.
pub fn real_zeros(family: ZeroFamily, interval: (f64, f64)) -> Result<Vec<SpecValue>> {
    let (a, b) = interval;
    if !(a < b) {
        return Err(Error::Domain(format!("empty interval [{a}, {b}]")));
    }
    let m = family.default_scan_points(interval);
    let h = (b - a) / m as f64;
    let mut zeros = Vec::new();
    let mut x_prev = a;
    let mut f_prev = family.eval(a);
    for i in 1..=m {
        let x = a + i as f64 * h;
        let f = family.eval(x);
        if f_prev == 0.0 {
            zeros.push(SpecValue::new(x_prev, 0.0));
        } else if f_prev * f < 0.0 {
            zeros.push(refine(&family, x_prev, x, f_prev, f));
        }
        x_prev = x;
        f_prev = f;
    }
    if f_prev == 0.0 {
        zeros.push(SpecValue::new(x_prev, 0.0));
    }
    if zeros.is_empty() {
        return Err(Error::Bracketing(format!(
            "no sign change of {family:?} on [{a}, {b}] ({m} scan points)"
        )));
    }
    Ok(zeros)
}

const TOL: f64 = 1e-12;

fn refine(family: &ZeroFamily, mut lo: f64, mut hi: f64, mut flo: f64, mut fhi: f64) -> SpecValue {
    // bisection until the bracket is tight
    for _ in 0..60 {
        if hi - lo < TOL {
            break;
        }
        let mid = 0.5 * (lo + hi);
        let fm = family.eval(mid);
        if fm == 0.0 {
            return SpecValue::new(mid, 0.0);
        }
        if flo * fm < 0.0 {
            hi = mid;
            fhi = fm;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    // secant polish from the bracket endpoints
    let mut x0 = lo;
    let mut x1 = hi;
    let mut f0 = flo;
    let mut f1 = fhi;
    for _ in 0..8 {
        if (f1 - f0).abs() < f64::MIN_POSITIVE {
            break;
        }
        let x2 = x1 - f1 * (x1 - x0) / (f1 - f0);
        if !x2.is_finite() || x2 < lo - TOL || x2 > hi + TOL {
            break;
        }
        x0 = x1;
        f0 = f1;
        x1 = x2;
        f1 = family.eval(x2);
        if (x1 - x0).abs() < TOL * 0.01 {
            break;
        }
    }
    SpecValue::new(x1, (hi - lo).max(TOL))
}
