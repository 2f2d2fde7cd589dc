//! Samplers for complex and real cones, and the Armitage non-harmonicity
//! criterion for the real cone `K_a`.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::specfun::gegenbauer;
use crate::{cnorm, Error, Result, C64};

/// Cone families the laboratory can sample.
#[derive(Debug, Clone, PartialEq)]
pub enum ConeKind {
    /// Zero set of `H(z) = a z_1 z̄_2 + |z|²` in `C^n`; closed under complex
    /// scaling. Real solutions require `|a| >= 2`.
    ComplexH { a: C64 },
    /// Armitage real cone `K_a = {x ∈ R^{2n} : x_1² = a² |x|²}`, `0 < a < 1`;
    /// closed under real scaling only.
    ArmitageKa { a: f64 },
    /// Zero set of the bigraded harmonic `Y(z) = z_1 z̄_2 + z̄_1 z_2`
    /// (`= 2 Re(z_1 z̄_2) ∈ H_{1,1}`), `n = 2`; a harmonic complex cone.
    Y11Zero,
    /// Union of `m` seeded pseudo-random complex lines through the origin; a
    /// complex cone on which no harmonic of degree `< m` generically vanishes.
    GenericLines { m: usize },
}

/// A cone plus the dimension and seed that determine its samples.
#[derive(Debug, Clone)]
pub struct ConeSampler {
    pub kind: ConeKind,
    /// Complex dimension `n` of the ambient `C^n`.
    pub n: usize,
    pub seed: u64,
}

impl ConeSampler {
    pub fn new(kind: ConeKind, n: usize, seed: u64) -> Self {
        ConeSampler { kind, n, seed }
    }

    /// Whether the cone is closed under full complex scaling (as opposed to
    /// real scaling only).
    pub fn is_complex(&self) -> bool {
        !matches!(self.kind, ConeKind::ArmitageKa { .. })
    }

    /// Residual of the defining equation at `z`, scaled by `|z|²`; zero for
    /// on-cone points. `GenericLines` has no residual equation and returns 0.
    pub fn residual(&self, z: &[C64]) -> f64 {
        let nsq: f64 = z.iter().map(|w| w.norm_sqr()).sum();
        match self.kind {
            ConeKind::ComplexH { a } => {
                let h = a * z[0] * z[1].conj() + C64::new(nsq, 0.0);
                h.norm() / nsq
            }
            ConeKind::ArmitageKa { a } => (z[0].re * z[0].re - a * a * nsq).abs() / nsq,
            ConeKind::Y11Zero => {
                let y = z[0] * z[1].conj() + z[0].conj() * z[1];
                y.norm() / nsq
            }
            ConeKind::GenericLines { .. } => 0.0,
        }
    }
}

/// Draw `count` unit-norm points on the cone. Directions are deterministic in
/// the sampler seed.
pub fn sample_cone(sampler: &ConeSampler, count: usize) -> Result<Vec<Vec<C64>>> {
    if count == 0 {
        return Err(Error::Domain("count must be >= 1".into()));
    }
    let n = sampler.n;
    let mut rng = ChaCha8Rng::seed_from_u64(sampler.seed);
    let mut out = Vec::with_capacity(count);
    match sampler.kind {
        ConeKind::ComplexH { a } => {
            if n < 2 {
                return Err(Error::Domain("ComplexH needs n >= 2".into()));
            }
            let amod = a.norm();
            if amod < 2.0 {
                return Err(Error::Infeasible(format!(
                    "|a| = {amod} < 2: H(z) = a z_1 z̄_2 + |z|² has no nonzero real solutions"
                )));
            }
            // z_2 = ρ e^{iψ}; w = z_1 z̄_2 must satisfy a w = -|z|², so
            // w = -s ā/|a|² with s > 0 solving s² - |a|²ρ² s + |a|²ρ²(ρ²+R²) = 0.
            let c_max = (amod * amod / 4.0 - 1.0).max(0.0).sqrt();
            let mut branch = false;
            while out.len() < count {
                let rho: f64 = 1.0;
                let psi = rng.random_range(0.0..std::f64::consts::TAU);
                let ratio = if n > 2 { rng.random_range(0.0..0.95 * c_max) } else { 0.0 };
                let rr = ratio * rho;
                let disc = amod.powi(4) * rho.powi(4)
                    - 4.0 * amod * amod * rho * rho * (rho * rho + rr * rr);
                if disc < 0.0 {
                    continue;
                }
                let s = if branch {
                    (amod * amod * rho * rho + disc.sqrt()) / 2.0
                } else {
                    (amod * amod * rho * rho - disc.sqrt()) / 2.0
                };
                branch = !branch;
                let w = -s * a.conj() / (amod * amod);
                let z2 = C64::from_polar(rho, psi);
                let z1 = w / z2.conj();
                let mut z = vec![C64::new(0.0, 0.0); n];
                z[0] = z1;
                z[1] = z2;
                if n > 2 {
                    // spread the remaining modulus over z_3..z_n
                    let mut rest: Vec<C64> = (0..n - 2)
                        .map(|_| {
                            C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
                        })
                        .collect();
                    let rn = cnorm(&rest);
                    if rn > 0.0 {
                        for v in rest.iter_mut() {
                            *v *= rr / rn;
                        }
                    }
                    z[2..].copy_from_slice(&rest);
                }
                let norm = cnorm(&z);
                z.iter_mut().for_each(|v| *v /= norm);
                debug_assert!(sampler.residual(&z) <= 1e-10);
                out.push(z);
            }
        }
        ConeKind::ArmitageKa { a } => {
            if !(0.0 < a && a < 1.0) {
                return Err(Error::Domain(format!("Armitage parameter needs 0 < a < 1, got {a}")));
            }
            let d = 2 * n;
            let mut sign = 1.0;
            for _ in 0..count {
                let mut u: Vec<f64> = (0..d - 1).map(|_| rng.sample(StandardNormal)).collect();
                let norm: f64 = u.iter().map(|x| x * x).sum::<f64>().sqrt();
                u.iter_mut().for_each(|x| *x /= norm);
                let mut x = vec![0.0; d];
                x[0] = sign * a;
                sign = -sign;
                let scale = (1.0 - a * a).sqrt();
                for (xi, ui) in x[1..].iter_mut().zip(&u) {
                    *xi = scale * ui;
                }
                out.push(crate::to_complex(&x));
            }
        }
        ConeKind::Y11Zero => {
            if n != 2 {
                return Err(Error::Domain("Y11Zero is defined on C^2".into()));
            }
            for i in 0..count {
                // every eighth sample from the coordinate axes, which also
                // lie in the zero set
                let z = if i % 8 == 7 {
                    let phase = C64::from_polar(1.0, rng.random_range(0.0..std::f64::consts::TAU));
                    if i % 16 == 7 {
                        vec![phase, C64::new(0.0, 0.0)]
                    } else {
                        vec![C64::new(0.0, 0.0), phase]
                    }
                } else {
                    // arg z_1 - arg z_2 = ±π/2 forces Re(z_1 z̄_2) = 0
                    let tau = rng.random_range(0.0..std::f64::consts::FRAC_PI_2);
                    let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
                    let global = C64::from_polar(1.0, rng.random_range(0.0..std::f64::consts::TAU));
                    vec![
                        global * C64::new(0.0, sign) * tau.cos(),
                        global * tau.sin(),
                    ]
                };
                debug_assert!(sampler.residual(&z) <= 1e-10);
                out.push(z);
            }
        }
        ConeKind::GenericLines { m } => {
            if m == 0 {
                return Err(Error::Domain("GenericLines needs m >= 1".into()));
            }
            let dirs: Vec<Vec<C64>> = (0..m)
                .map(|_| {
                    let mut v: Vec<C64> = (0..n)
                        .map(|_| C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)))
                        .collect();
                    let norm = cnorm(&v);
                    v.iter_mut().for_each(|w| *w /= norm);
                    v
                })
                .collect();
            for i in 0..count {
                let phase = C64::from_polar(1.0, rng.random_range(0.0..std::f64::consts::TAU));
                out.push(dirs[i % m].iter().map(|w| w * phase).collect());
            }
        }
    }
    Ok(out)
}

/// Per-degree verdict of the Armitage condition
/// `D^m G_k^{(d-2)/2}(a) ≠ 0 for all 0 <= m <= k-2`.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct ArmitageVerdict {
    pub k: u32,
    /// Minimum `|D^m G_k^{(d-2)/2}(a)|` over the required range; `None` when
    /// the range is empty (`k < 2`).
    pub min_abs: Option<f64>,
    pub verdict: ArmitageStatus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum ArmitageStatus {
    Holds,
    Fails,
    Vacuous,
}

/// Evaluate the Armitage criterion for `K_a ⊂ R^d` at degrees `k <= k_max`.
pub fn classify_armitage(a: f64, d: usize, k_max: u32) -> Result<Vec<ArmitageVerdict>> {
    if !(0.0 < a && a < 1.0) {
        return Err(Error::Domain(format!("need 0 < a < 1, got {a}")));
    }
    if d < 3 {
        return Err(Error::Domain(format!("need d >= 3, got {d}")));
    }
    let beta = (d as f64 - 2.0) / 2.0;
    let mut out = Vec::new();
    for k in 0..=k_max {
        if k < 2 {
            out.push(ArmitageVerdict {
                k,
                min_abs: None,
                verdict: ArmitageStatus::Vacuous,
            });
            continue;
        }
        let mut min_abs = f64::INFINITY;
        let mut max_abs: f64 = 0.0;
        for m in 0..=k - 2 {
            let v = gegenbauer(k, beta, a, m).abs();
            min_abs = min_abs.min(v);
            max_abs = max_abs.max(v);
        }
        let verdict = if min_abs <= 1e-9 * max_abs.max(1.0) {
            ArmitageStatus::Fails
        } else {
            ArmitageStatus::Holds
        };
        out.push(ArmitageVerdict {
            k,
            min_abs: Some(min_abs),
            verdict,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_h_points_satisfy_equation() {
        let sampler = ConeSampler::new(ConeKind::ComplexH { a: C64::new(4.0, 0.0) }, 2, 1);
        let pts = sample_cone(&sampler, 32).unwrap();
        assert_eq!(pts.len(), 32);
        for z in &pts {
            assert!(sampler.residual(z) <= 1e-10, "residual {} too large", sampler.residual(z));
        }
    }

    #[test]
    fn complex_h_n3_feasible_and_on_cone() {
        let sampler = ConeSampler::new(ConeKind::ComplexH { a: C64::new(4.0, 0.0) }, 3, 2);
        let pts = sample_cone(&sampler, 64).unwrap();
        for z in &pts {
            assert!(sampler.residual(z) <= 1e-10);
            assert!((cnorm(z) - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn complex_scaling_closure() {
        // if z is on a complex cone, λz is too, for λ = 2 and λ = i
        let sampler = ConeSampler::new(ConeKind::ComplexH { a: C64::new(4.0, 0.0) }, 2, 3);
        let pts = sample_cone(&sampler, 8).unwrap();
        for z in &pts {
            for lam in [C64::new(2.0, 0.0), C64::new(0.0, 1.0)] {
                let zs: Vec<C64> = z.iter().map(|w| w * lam).collect();
                assert!(sampler.residual(&zs) <= 1e-10);
            }
        }
    }

    #[test]
    fn small_a_is_infeasible() {
        let sampler = ConeSampler::new(ConeKind::ComplexH { a: C64::new(1.0, 0.0) }, 2, 0);
        assert!(matches!(sample_cone(&sampler, 4), Err(Error::Infeasible(_))));
    }

    #[test]
    fn armitage_samples() {
        let sampler = ConeSampler::new(ConeKind::ArmitageKa { a: 0.5 }, 2, 7);
        let pts = sample_cone(&sampler, 16).unwrap();
        for z in &pts {
            // |x_1|² = 0.25 |x|²
            let nsq: f64 = z.iter().map(|w| w.norm_sqr()).sum();
            assert!((z[0].re * z[0].re - 0.25 * nsq).abs() <= 1e-10 * nsq);
        }
    }

    #[test]
    fn y11_zero_points() {
        let sampler = ConeSampler::new(ConeKind::Y11Zero, 2, 9);
        let pts = sample_cone(&sampler, 40).unwrap();
        for z in &pts {
            let y = z[0] * z[1].conj() + z[0].conj() * z[1];
            assert!(y.norm() <= 1e-10);
        }
    }

    #[test]
    fn classify_armitage_examples() {
        // G_2^1(0.5) = 4·0.25 - 1 = 0: condition fails at k=2
        let v = classify_armitage(0.5, 4, 2).unwrap();
        assert_eq!(v[2].verdict, ArmitageStatus::Fails);
        // k = 1 is vacuous
        assert_eq!(v[1].verdict, ArmitageStatus::Vacuous);
        // G_2^1(0.9) = 2.24 ≠ 0
        let v = classify_armitage(0.9, 4, 6).unwrap();
        assert_eq!(v[2].verdict, ArmitageStatus::Holds);
        assert!((v[2].min_abs.unwrap() - 2.24).abs() < 1e-12);
        // and 0.9 survives every degree we use in experiments
        assert!(v[2..].iter().all(|x| x.verdict == ArmitageStatus::Holds));
    }

    #[test]
    fn deterministic_in_seed() {
        let s = ConeSampler::new(ConeKind::GenericLines { m: 4 }, 2, 123);
        let a = sample_cone(&s, 10).unwrap();
        let b = sample_cone(&s, 10).unwrap();
        assert_eq!(a, b);
    }
}
