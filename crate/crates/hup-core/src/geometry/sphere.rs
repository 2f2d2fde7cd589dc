//! Sphere and geodesic-sphere quadrature.
//!
//! `S^{2n-1}` rules are built in torus coordinates `z_j = √v_j e^{iξ_j}` with
//! `(v_1..v_n)` on the probability simplex: the surface measure there is
//! `2^{-(n-1)} dv dξ`, so a Gauss–Legendre rule in the simplex variables and
//! uniform (trapezoid) rules in the angles integrate every monomial of total
//! degree `≤ d` exactly — angular averages of `e^{isξ}` vanish exactly for
//! `0 < |s| < N_ξ`, and the surviving `α = β` terms are polynomials in `v`.

use std::f64::consts::PI;

use crate::{Error, Result, C64};

use super::QuadratureRule;

/// Gauss–Legendre nodes and weights on `[-1, 1]` by Newton iteration.
pub fn gauss_legendre(m: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(m >= 1);
    let mut nodes = vec![0.0; m];
    let mut weights = vec![0.0; m];
    for i in 0..m.div_ceil(2) {
        // Chebyshev-like initial guess for the i-th root (descending)
        let mut x = (PI * (i as f64 + 0.75) / (m as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            // Legendre P_m(x) and its derivative
            let mut p0 = 1.0;
            let mut p1 = x;
            for k in 2..=m {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            dp = m as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        nodes[i] = -x;
        nodes[m - 1 - i] = x;
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[m - 1 - i] = w;
    }
    (nodes, weights)
}

/// Gauss–Legendre on `[0, 1]`.
fn gauss_legendre_01(m: usize) -> (Vec<f64>, Vec<f64>) {
    let (x, w) = gauss_legendre(m);
    (
        x.iter().map(|t| 0.5 * (t + 1.0)).collect(),
        w.iter().map(|t| 0.5 * t).collect(),
    )
}

/// Surface area of `S_r^{2n-1}`: `2 π^n / (n-1)! · r^{2n-1}`.
pub fn sphere_surface_area(n: usize, r: f64) -> f64 {
    let mut fact = 1.0;
    for k in 1..n {
        fact *= k as f64;
    }
    2.0 * PI.powi(n as i32) / fact * r.powi(2 * n as i32 - 1)
}

/// Quadrature on `S_r^{2n-1} ⊂ C^n` exact for all polynomials in
/// `(z, z̄)` of total degree `≤ degree`. Supported for `n ∈ {1, 2, 3}`.
pub fn sphere_quadrature(n: usize, r: f64, degree: usize) -> Result<QuadratureRule> {
    if !(1..=3).contains(&n) {
        return Err(Error::Unsupported(format!(
            "sphere quadrature implemented for n in 1..=3, got {n}"
        )));
    }
    if r <= 0.0 {
        return Err(Error::Domain(format!("radius must be positive, got {r}")));
    }
    let unit = unit_sphere_rule(n, degree);
    Ok(if r == 1.0 {
        unit
    } else {
        unit.scaled(r, 2 * n - 1)
    })
}

fn unit_sphere_rule(n: usize, degree: usize) -> QuadratureRule {
    let n_xi = degree + 2;
    let d_angle = 2.0 * PI / n_xi as f64;
    let mut nodes = Vec::new();
    let mut weights = Vec::new();

    // moduli grid: (v, weight) pairs on the simplex, including the 2^{-(n-1)}
    // measure factor and Jacobians
    let moduli: Vec<(Vec<f64>, f64)> = match n {
        1 => vec![(vec![1.0], 1.0)],
        2 => {
            let g = degree / 4 + 2;
            let (x, w) = gauss_legendre_01(g);
            x.iter()
                .zip(&w)
                .map(|(&v1, &wv)| (vec![v1, 1.0 - v1], 0.5 * wv))
                .collect()
        }
        3 => {
            let g = degree / 4 + 2;
            let (x, wx) = gauss_legendre_01(g);
            let mut out = Vec::new();
            for (&x1, &w1) in x.iter().zip(&wx) {
                for (&x2, &w2) in x.iter().zip(&wx) {
                    let v1 = x1;
                    let v2 = (1.0 - x1) * x2;
                    let v3 = (1.0 - x1) * (1.0 - x2);
                    out.push((vec![v1, v2, v3], 0.25 * w1 * w2 * (1.0 - x1)));
                }
            }
            out
        }
        _ => unreachable!(),
    };

    let angle_weight = d_angle.powi(n as i32);
    let mut angle_idx = vec![0usize; n];
    for (v, wv) in &moduli {
        let s: Vec<f64> = v.iter().map(|t| t.max(0.0).sqrt()).collect();
        angle_idx.iter_mut().for_each(|a| *a = 0);
        loop {
            let node: Vec<C64> = (0..n)
                .map(|j| {
                    let th = angle_idx[j] as f64 * d_angle;
                    C64::from_polar(s[j], th)
                })
                .collect();
            nodes.push(node);
            weights.push(wv * angle_weight);
            // odometer over the n angle indices
            let mut j = 0;
            loop {
                angle_idx[j] += 1;
                if angle_idx[j] < n_xi {
                    break;
                }
                angle_idx[j] = 0;
                j += 1;
                if j == n {
                    break;
                }
            }
            if j == n {
                break;
            }
        }
    }

    QuadratureRule {
        nodes,
        weights,
        exactness_degree: degree,
        total_mass: sphere_surface_area(n, 1.0),
    }
}

/// Orthonormal frame of the orthogonal complement of the unit vector `w` in
/// `R^m`: Gram–Schmidt over the standard basis, largest residual first.
fn complement_frame(w: &[f64]) -> Vec<Vec<f64>> {
    let m = w.len();
    let mut residuals: Vec<Vec<f64>> = (0..m)
        .map(|i| {
            let mut e = vec![0.0; m];
            e[i] = 1.0;
            let proj = w[i];
            for (k, ek) in e.iter_mut().enumerate() {
                *ek -= proj * w[k];
            }
            e
        })
        .collect();
    let mut frame: Vec<Vec<f64>> = Vec::with_capacity(m - 1);
    for _ in 0..m - 1 {
        // orthogonalize against the frame so far, then pick the largest pivot
        let mut best = 0;
        let mut best_norm = -1.0;
        for (i, r) in residuals.iter().enumerate() {
            let norm: f64 = r.iter().map(|x| x * x).sum();
            if norm > best_norm {
                best_norm = norm;
                best = i;
            }
        }
        let mut v = residuals.swap_remove(best);
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        for x in v.iter_mut() {
            *x /= norm;
        }
        for r in residuals.iter_mut() {
            let proj: f64 = r.iter().zip(&v).map(|(a, b)| a * b).sum();
            for (rk, vk) in r.iter_mut().zip(&v) {
                *rk -= proj * vk;
            }
        }
        frame.push(v);
    }
    frame
}

/// Unit-sphere rule on `S^{m-1} ⊂ R^m` for even `m-1 ∈ {0, 2, 4}` given in
/// real coordinates, used for geodesic spheres inside `S^{2n-1}`.
fn even_sphere_rule(m: usize, degree: usize) -> (Vec<Vec<f64>>, Vec<f64>) {
    match m {
        1 => (vec![vec![1.0], vec![-1.0]], vec![1.0, 1.0]),
        3 => {
            let g = degree / 2 + 2;
            let (c, wc) = gauss_legendre(g);
            let n_phi = degree + 2;
            let dphi = 2.0 * PI / n_phi as f64;
            let mut nodes = Vec::new();
            let mut weights = Vec::new();
            for (&ci, &wi) in c.iter().zip(&wc) {
                let s = (1.0 - ci * ci).sqrt();
                for a in 0..n_phi {
                    let phi = a as f64 * dphi;
                    nodes.push(vec![ci, s * phi.cos(), s * phi.sin()]);
                    weights.push(wi * dphi);
                }
            }
            (nodes, weights)
        }
        5 => {
            let g = degree / 2 + 2;
            let (c, wc) = gauss_legendre(g);
            let inner = unit_sphere_rule(2, degree); // S^3 in C^2
            let mut nodes = Vec::new();
            let mut weights = Vec::new();
            for (&ci, &wi) in c.iter().zip(&wc) {
                let s = (1.0 - ci * ci).sqrt();
                for (u, &wu) in inner.nodes.iter().zip(&inner.weights) {
                    let ur = crate::to_real(u);
                    let mut node = vec![ci];
                    node.extend(ur.iter().map(|x| s * x));
                    nodes.push(node);
                    weights.push(wi * (1.0 - ci * ci) * wu);
                }
            }
            (nodes, weights)
        }
        _ => panic!("even_sphere_rule supports m in {{1,3,5}}, got {m}"),
    }
}

/// Normalized quadrature on the geodesic sphere
/// `S_ω^t = {ν ∈ S^{2n-1} : ω·ν = t}` (total mass 1, per the normalized
/// surface measure convention).
pub fn geodesic_quadrature(omega: &[C64], t: f64, degree: usize) -> Result<QuadratureRule> {
    let n = omega.len();
    if !(1..=3).contains(&n) {
        return Err(Error::Unsupported(format!(
            "geodesic quadrature implemented for n in 1..=3, got {n}"
        )));
    }
    if t.abs() >= 1.0 {
        return Err(Error::Domain(format!("need |t| < 1, got {t}")));
    }
    let w = crate::to_real(omega);
    let norm: f64 = w.iter().map(|x| x * x).sum::<f64>().sqrt();
    if (norm - 1.0).abs() > 1e-10 {
        return Err(Error::Domain(format!("pole must be a unit vector, |ω| = {norm}")));
    }
    let frame = complement_frame(&w);
    let rad = (1.0 - t * t).sqrt();
    let (sub_nodes, sub_weights) = even_sphere_rule(2 * n - 1, degree);
    let mass: f64 = sub_weights.iter().sum();
    let mut nodes = Vec::with_capacity(sub_nodes.len());
    let mut weights = Vec::with_capacity(sub_nodes.len());
    for (u, &wu) in sub_nodes.iter().zip(&sub_weights) {
        let mut x: Vec<f64> = w.iter().map(|&wi| t * wi).collect();
        for (k, frame_k) in frame.iter().enumerate() {
            for (xi, fi) in x.iter_mut().zip(frame_k) {
                *xi += rad * u[k] * fi;
            }
        }
        nodes.push(crate::to_complex(&x));
        weights.push(wu / mass);
    }
    Ok(QuadratureRule {
        nodes,
        weights,
        exactness_degree: degree,
        total_mass: 1.0,
    })
}
