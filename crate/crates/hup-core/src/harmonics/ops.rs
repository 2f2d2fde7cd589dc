//! Spherical-harmonic projections, the Funk–Hecke constant, Cesàro weights
//! and geodesic means.

use std::f64::consts::PI;

use crate::geometry::{gauss_legendre, geodesic_quadrature, sphere_quadrature};
use crate::specfun::ln_gamma;
use crate::{Error, Result, C64};

use super::bigraded::HarmonicTable;
use super::sphere_fn::{SphereComponent, SphereFunction};
use super::zonal::{zonal, zonal_constant, zonal_profile};

/// Degree-`l` spherical-harmonic projection evaluated at `ξ`:
/// `Π_l f(ξ) = ∫ Z_ξ^{(l)}(η) f(η) dσ(η)`.
pub fn project_l(f: &SphereFunction, l: u32, xi: &[C64]) -> Result<C64> {
    let degree = (f.band_limit + l) as usize + 4;
    let rule = sphere_quadrature(f.n, 1.0, degree)?;
    let d = 2 * f.n;
    Ok(rule.integrate(|eta| C64::new(zonal(l, d, xi, eta).unwrap(), 0.0) * f.eval(eta)))
}

/// Same as [`project_l`] for sampled data on an explicit rule; rejects rules
/// whose exactness degree cannot resolve `band_limit + l`.
pub fn project_l_values(
    values: &[C64],
    rule: &crate::geometry::QuadratureRule,
    band_limit: u32,
    l: u32,
    n: usize,
    xi: &[C64],
) -> Result<C64> {
    if rule.exactness_degree < (band_limit + l) as usize {
        return Err(Error::Resolution(format!(
            "rule degree {} < band limit {} + l {}",
            rule.exactness_degree, band_limit, l
        )));
    }
    let d = 2 * n;
    let mut acc = C64::new(0.0, 0.0);
    for ((eta, &w), v) in rule.nodes.iter().zip(&rule.weights).zip(values) {
        acc += C64::new(zonal(l, d, xi, eta)?, 0.0) * v * w;
    }
    Ok(acc)
}

/// The `(p, q)` spherical-harmonic projection, computed by averaging
/// `ξ -> f(e^{iθ} ξ)` against `e^{-i(p-q)θ}` over a uniform θ-grid and then
/// projecting the result to degree `p + q`.
///
/// The θ-grid defaults to `4L + 5` points; grids below `2L + 1` alias and are
/// rejected.
pub fn project_pq(f: &SphereFunction, p: u32, q: u32) -> Result<SphereFunction> {
    let n_theta = 4 * f.band_limit as usize + 5;
    project_pq_with_grid(f, p, q, n_theta)
}

pub fn project_pq_with_grid(
    f: &SphereFunction,
    p: u32,
    q: u32,
    n_theta: usize,
) -> Result<SphereFunction> {
    if n_theta < 2 * f.band_limit as usize + 1 {
        return Err(Error::Resolution(format!(
            "θ-grid of {n_theta} points aliases at band limit {} (need >= {})",
            f.band_limit,
            2 * f.band_limit + 1
        )));
    }
    let l = p + q;
    let s = p as i64 - q as i64;
    let rule = sphere_quadrature(f.n, 1.0, 2 * f.band_limit.max(l) as usize + 2)?;
    // θ-average against e^{-isθ}: keeps exactly the classes with p'-q' = s
    let avg: Vec<C64> = rule
        .nodes
        .iter()
        .map(|z| {
            let mut acc = C64::new(0.0, 0.0);
            for k in 0..n_theta {
                let th = 2.0 * PI * k as f64 / n_theta as f64;
                let rot = C64::from_polar(1.0, th);
                let zr: Vec<C64> = z.iter().map(|w| w * rot).collect();
                acc += f.eval(&zr) * C64::from_polar(1.0, -s as f64 * th);
            }
            acc / n_theta as f64
        })
        .collect();
    // analysis against H_{p,q} picks out the degree p+q part
    let basis = super::bigraded::harmonic_basis(f.n, p, q)?;
    let mut coeffs = vec![C64::new(0.0, 0.0); basis.dim()];
    for (j, e) in basis.elements.iter().enumerate() {
        let mut acc = C64::new(0.0, 0.0);
        for ((z, &w), v) in rule.nodes.iter().zip(&rule.weights).zip(&avg) {
            acc += v * e.eval(z).conj() * w;
        }
        coeffs[j] = acc;
    }
    Ok(SphereFunction::from_component(
        f.n,
        SphereComponent { p, q, basis, coeffs },
    ))
}

/// Funk–Hecke constant `C_l` with
/// `∫ F(ξ·η) Y(η) dσ(η) = C_l Y(ξ)` for every `Y ∈ H_l` on `S^{2n-1}`.
///
/// `C_l = α_l ∫_{-1}^{1} F(t) G_l^{n-1}(t) (1-t²)^{(2n-3)/2} dt`, with the
/// paper-unspecified `α_l` pinned through the calibrated zonal constant:
/// `α_l = 1 / (c_{l,2n} ∫ G_l² (1-t²)^{(2n-3)/2} dt)`.
pub fn funk_hecke<F: Fn(f64) -> f64>(f: F, l: u32, n: usize) -> Result<f64> {
    let d = 2 * n;
    let c = zonal_constant(l, d)?;
    // ∫_{-1}^1 g(t) (1-t²)^{(2n-3)/2} dt = ∫_0^π g(cos θ) sin^{2n-2}θ dθ
    let m = 260 + 4 * l as usize;
    let (x, w) = gauss_legendre(m);
    let weighted = |g: &dyn Fn(f64) -> f64| -> f64 {
        x.iter()
            .zip(&w)
            .map(|(&xi, &wi)| {
                let th = PI * (xi + 1.0) / 2.0;
                let t = th.cos();
                g(t) * th.sin().powi(2 * n as i32 - 2) * wi * PI / 2.0
            })
            .sum()
    };
    let gl_sq = weighted(&|t| zonal_profile(l, d, t).powi(2));
    let f_int = weighted(&|t| f(t) * zonal_profile(l, d, t));
    Ok(f_int / (c.constant * gl_sq))
}

/// Cesàro weight `A_l^m(δ) = C(m-l+δ, δ) / C(m+δ, δ)` for `0 <= l <= m`,
/// `δ > 0`.
pub fn cesaro_weight(l: u32, m: u32, delta: f64) -> Result<f64> {
    if l > m {
        return Err(Error::Domain(format!("need l <= m, got l={l}, m={m}")));
    }
    if delta <= 0.0 {
        return Err(Error::Domain(format!("need δ > 0, got {delta}")));
    }
    let mf = m as f64;
    let lf = l as f64;
    let log = ln_gamma(mf - lf + delta + 1.0) - ln_gamma(mf - lf + 1.0)
        - (ln_gamma(mf + delta + 1.0) - ln_gamma(mf + 1.0));
    Ok(log.exp())
}

/// Geodesic spherical mean `f̃(ω, t)`: the average of `f` over
/// `S_ω^t = {ν : ω·ν = t}` with the normalized measure.
pub fn geodesic_mean(f: &SphereFunction, omega: &[C64], t: f64) -> Result<C64> {
    let rule = geodesic_quadrature(omega, t, f.band_limit as usize + 4)?;
    Ok(rule.integrate(|z| f.eval(z)))
}

/// Callable variant of [`geodesic_mean`] with an explicit quadrature degree.
pub fn geodesic_mean_fn<F: Fn(&[C64]) -> C64>(
    f: F,
    omega: &[C64],
    t: f64,
    degree: usize,
) -> Result<C64> {
    let rule = geodesic_quadrature(omega, t, degree)?;
    Ok(rule.integrate(f))
}

/// Build a band-limited function whose degree `<= L` projections all vanish
/// at the pole `ω`, by subtracting matched zonal multiples. Used by the
/// geodesic-mean equivalence experiments.
pub fn annihilate_projections_at(
    f: &SphereFunction,
    table: &HarmonicTable,
    omega: &[C64],
) -> Result<SphereFunction> {
    let d = 2 * f.n;
    let mut g = f.clone();
    for l in 0..=f.band_limit {
        let val = project_l(&g, l, omega)?;
        if val.norm() == 0.0 {
            continue;
        }
        let z_at_pole = zonal(l, d, omega, omega)?;
        // subtract (Π_l g(ω)/Z_ω(ω)) Z_ω^{(l)}; expand the zonal in the
        // orthonormal basis of degree l via analysis on a rule
        let rule = sphere_quadrature(f.n, 1.0, 2 * f.band_limit as usize + 4)?;
        let scale = val / z_at_pole;
        for ((p, q), basis) in table.classes() {
            if p + q != l {
                continue;
            }
            let mut coeffs = vec![C64::new(0.0, 0.0); basis.dim()];
            for (j, e) in basis.elements.iter().enumerate() {
                let mut acc = C64::new(0.0, 0.0);
                for (z, &w) in rule.nodes.iter().zip(&rule.weights) {
                    acc += C64::new(zonal(l, d, omega, z)?, 0.0) * e.eval(z).conj() * w;
                }
                coeffs[j] = acc;
            }
            // merge -scale * zonal_component into g
            let existing = g.components.iter_mut().find(|c| c.p == *p && c.q == *q);
            match existing {
                Some(c) => {
                    for (a, b) in c.coeffs.iter_mut().zip(&coeffs) {
                        *a -= scale * b;
                    }
                }
                None => {
                    let mut neg = coeffs.clone();
                    neg.iter_mut().for_each(|c| *c = -scale * *c);
                    g.components.push(SphereComponent {
                        p: *p,
                        q: *q,
                        basis: std::sync::Arc::clone(basis),
                        coeffs: neg,
                    });
                }
            }
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cnorm;
    use crate::harmonics::{harmonic_basis, HarmonicTable, SphereFunction};
    use approx::assert_relative_eq;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;
    use rand_distr::StandardNormal;

    fn random_unit(n: usize, rng: &mut ChaCha8Rng) -> Vec<C64> {
        let mut z: Vec<C64> = (0..n)
            .map(|_| C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)))
            .collect();
        let norm = cnorm(&z);
        z.iter_mut().for_each(|w| *w /= norm);
        z
    }

    #[test]
    fn project_l_is_identity_on_own_class_and_kills_others() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        let basis = harmonic_basis(2, 1, 1).unwrap();
        let f = SphereFunction::basis_element(&basis, 1);
        let xi = random_unit(2, &mut rng);
        let same = project_l(&f, 2, &xi).unwrap();
        let want = f.eval(&xi);
        assert!((same - want).norm() < 1e-9, "{same} vs {want}");
        for l in [0u32, 1, 3] {
            let off = project_l(&f, l, &xi).unwrap();
            assert!(off.norm() < 1e-9, "leak into degree {l}: {off}");
        }
    }

    #[test]
    fn projection_synthesis_reconstructs() {
        // Σ_l Π_l f = f at random points
        let mut rng = ChaCha8Rng::seed_from_u64(33);
        let table = HarmonicTable::new(2, 3).unwrap();
        let f = SphereFunction::random(&table, &mut rng);
        for _ in 0..5 {
            let xi = random_unit(2, &mut rng);
            let mut acc = C64::new(0.0, 0.0);
            for l in 0..=3u32 {
                acc += project_l(&f, l, &xi).unwrap();
            }
            let want = f.eval(&xi);
            assert!(
                (acc - want).norm() <= 1e-8 * want.norm().max(1.0),
                "reconstruction {acc} vs {want}"
            );
        }
    }

    #[test]
    fn project_pq_identity_and_orthogonality() {
        let mut rng = ChaCha8Rng::seed_from_u64(37);
        let basis = harmonic_basis(2, 1, 1).unwrap();
        let f = SphereFunction::basis_element(&basis, 2);
        let own = project_pq(&f, 1, 1).unwrap();
        let other = project_pq(&f, 2, 0).unwrap();
        for _ in 0..5 {
            let z = random_unit(2, &mut rng);
            assert!((own.eval(&z) - f.eval(&z)).norm() < 1e-9);
            assert!(other.eval(&z).norm() < 1e-9);
        }
    }

    #[test]
    fn project_pq_separates_mixture() {
        let mut rng = ChaCha8Rng::seed_from_u64(39);
        let b20 = harmonic_basis(2, 2, 0).unwrap();
        let b02 = harmonic_basis(2, 0, 2).unwrap();
        let part_a = SphereFunction::basis_element(&b20, 0);
        let part_b = SphereFunction::basis_element(&b02, 1);
        let mut f = part_a.clone();
        f.band_limit = 2;
        f.components.extend(part_b.components.iter().cloned());
        let got_a = project_pq(&f, 2, 0).unwrap();
        let got_b = project_pq(&f, 0, 2).unwrap();
        for _ in 0..5 {
            let z = random_unit(2, &mut rng);
            assert!((got_a.eval(&z) - part_a.eval(&z)).norm() < 1e-8);
            assert!((got_b.eval(&z) - part_b.eval(&z)).norm() < 1e-8);
        }
    }

    #[test]
    fn project_pq_rejects_aliasing_grid() {
        let table = HarmonicTable::new(2, 3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let f = SphereFunction::random(&table, &mut rng);
        assert!(project_pq_with_grid(&f, 1, 1, 5).is_err());
    }

    #[test]
    fn theta_average_separation() {
        // the θ-average against e^{-i(p'-q')θ} of a single-class function
        // vanishes unless (p', q') matches the class
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        let basis = harmonic_basis(2, 2, 1).unwrap();
        let f = SphereFunction::basis_element(&basis, 0);
        for (pp, qq) in [(1u32, 0u32), (0, 1), (1, 2), (3, 0), (0, 3), (1, 1)] {
            let g = project_pq(&f, pp, qq).unwrap();
            for _ in 0..3 {
                let z = random_unit(2, &mut rng);
                assert!(
                    g.eval(&z).norm() < 1e-9,
                    "class ({pp},{qq}) should be annihilated"
                );
            }
        }
    }

    #[test]
    fn funk_hecke_trivial_cases() {
        // F ≡ 1: C_0 is the sphere mass, C_l = 0 for l >= 1
        let n = 2;
        let c0 = funk_hecke(|_| 1.0, 0, n).unwrap();
        assert_relative_eq!(c0, 2.0 * PI * PI, max_relative = 1e-9);
        for l in 1..=4u32 {
            let cl = funk_hecke(|_| 1.0, l, n).unwrap();
            assert!(cl.abs() < 1e-10, "C_{l} = {cl}");
        }
    }

    #[test]
    fn funk_hecke_eigenvalue_matches_quadrature_oracle() {
        // C_l computed from the 1-D integral equals the sphere-quadrature
        // ratio (∫ F(ξ·η) Y(η) dσ) / Y(ξ) for random Y, ξ
        let mut rng = ChaCha8Rng::seed_from_u64(43);
        let n = 2;
        let fs: [(fn(f64) -> f64, u32); 3] =
            [(|t| t, 1), (|t| t * t, 2), (|t| (-t).exp(), 3)];
        for (f, l) in fs {
            let cl = funk_hecke(f, l, n).unwrap();
            let rule = crate::geometry::sphere_quadrature(n, 1.0, 2 * l as usize + 22).unwrap();
            for trial in 0..5u32 {
                let p = trial % (l + 1);
                let basis = harmonic_basis(n, p, l - p).unwrap();
                let y = &basis.elements[trial as usize % basis.dim()];
                let xi = random_unit(n, &mut rng);
                let num = rule.integrate(|eta| {
                    let t: f64 = xi.iter().zip(eta).map(|(a, b)| (a * b.conj()).re).sum();
                    C64::new(f(t), 0.0) * y.eval(eta)
                });
                let den = y.eval(&xi);
                let ratio = num / den;
                assert!(
                    (ratio - C64::new(cl, 0.0)).norm() <= 1e-8 * cl.abs().max(1.0),
                    "l={l} trial={trial}: ratio {ratio} vs C_l {cl}"
                );
            }
        }
    }

    #[test]
    fn cesaro_weights() {
        assert_relative_eq!(cesaro_weight(0, 7, 2.0).unwrap(), 1.0, epsilon = 1e-13);
        // l = m: 1/C(m+δ, δ)
        let m = 6u32;
        let delta = 2.0;
        let want = 1.0 / crate::specfun::binomial_real(m as f64 + delta, delta);
        assert_relative_eq!(cesaro_weight(m, m, delta).unwrap(), want, max_relative = 1e-12);
        // decreasing in l for fixed m
        for m in 1..=20u32 {
            let mut prev = f64::INFINITY;
            for l in 0..=m {
                let w = cesaro_weight(l, m, 2.0).unwrap();
                assert!(w > 0.0 && w <= 1.0 + 1e-12);
                assert!(w < prev + 1e-15, "not decreasing at l={l}, m={m}");
                prev = w;
            }
        }
        assert!(cesaro_weight(5, 3, 2.0).is_err());
    }

    #[test]
    fn geodesic_mean_of_constant() {
        let mut rng = ChaCha8Rng::seed_from_u64(47);
        let table = HarmonicTable::new(2, 0).unwrap();
        let mut f = SphereFunction::random(&table, &mut rng);
        // f is the constant Y^{0,0} times a coefficient
        let omega = random_unit(2, &mut rng);
        let c = f.eval(&omega);
        for &t in &[-0.5, 0.0, 0.7] {
            let m = geodesic_mean(&f, &omega, t).unwrap();
            assert!((m - c).norm() < 1e-10);
        }
        f.band_limit = 0;
    }

    #[test]
    fn geodesic_slicing_identity() {
        // ∫_{-1}^{1} f̃(ω,t) (1-t²)^{(2n-3)/2} dt ∝ ∫ f dσ = 0 for harmonics
        // of positive degree
        let mut rng = ChaCha8Rng::seed_from_u64(53);
        let n = 2;
        let omega = random_unit(n, &mut rng);
        // t = cos θ turns the (1-t²)^{(2n-3)/2} dt weight into sin^{2n-2}θ dθ
        let (x, w) = gauss_legendre(80);
        for (p, q) in [(1u32, 0u32), (1, 1)] {
            let basis = harmonic_basis(n, p, q).unwrap();
            let f = SphereFunction::basis_element(&basis, 0);
            let mut acc = C64::new(0.0, 0.0);
            for (&xi, &wi) in x.iter().zip(&w) {
                let th = PI * (xi + 1.0) / 2.0;
                let weight = th.sin().powi(2 * n as i32 - 2) * PI / 2.0;
                acc += geodesic_mean(&f, &omega, th.cos()).unwrap() * weight * wi;
            }
            assert!(acc.norm() < 1e-8, "slice integral for ({p},{q}): {acc}");
        }
    }

    #[test]
    fn vanishing_projections_imply_vanishing_means() {
        // band-limited forward direction of the geodesic-mean equivalence
        let mut rng = ChaCha8Rng::seed_from_u64(59);
        let table = HarmonicTable::new(2, 3).unwrap();
        let omega = random_unit(2, &mut rng);
        let f = SphereFunction::random(&table, &mut rng);
        let g = annihilate_projections_at(&f, &table, &omega).unwrap();
        for l in 0..=3u32 {
            assert!(project_l(&g, l, &omega).unwrap().norm() < 1e-9);
        }
        for k in 0..20 {
            let t = -0.95 + 1.9 * k as f64 / 19.0;
            let m = geodesic_mean(&g, &omega, t).unwrap();
            assert!(m.norm() < 1e-8, "mean at t={t}: {m}");
        }
    }

    #[test]
    fn mean_vanishing_iff_projections_vanish() {
        // both directions at one pole over random f: compare the indicator
        // "all means < tol" with "all projections < tol"
        let mut rng = ChaCha8Rng::seed_from_u64(61);
        let table = HarmonicTable::new(2, 2).unwrap();
        let omega = random_unit(2, &mut rng);
        let ts: Vec<f64> = (0..12).map(|k| -0.9 + 1.8 * k as f64 / 11.0).collect();
        for trial in 0..10 {
            let f0 = SphereFunction::random(&table, &mut rng);
            let f = if trial % 2 == 0 {
                annihilate_projections_at(&f0, &table, &omega).unwrap()
            } else {
                f0
            };
            let max_mean = ts
                .iter()
                .map(|&t| geodesic_mean(&f, &omega, t).unwrap().norm())
                .fold(0.0, f64::max);
            let max_proj = (0..=2u32)
                .map(|l| project_l(&f, l, &omega).unwrap().norm())
                .fold(0.0, f64::max);
            let means_zero = max_mean < 1e-7;
            let projs_zero = max_proj < 1e-7;
            assert_eq!(
                means_zero, projs_zero,
                "equivalence violated: means {max_mean}, projections {max_proj}"
            );
        }
    }
}
