//! Bigraded homogeneous polynomials `P(z) = Σ c_{αβ} z^α z̄^β` on `C^n` and
//! orthonormal bases of the harmonic subspaces `H_{p,q} = ker Δ ∩ P_{p,q}`.

use std::sync::Arc;

use nalgebra::DMatrix;

use crate::geometry::{sphere_quadrature, QuadratureRule};
use crate::specfun::MultiIndex;
use crate::{Error, Result, C64};

/// A polynomial homogeneous of degree `p` in `z` and `q` in `z̄`, stored as a
/// dense coefficient table over the monomial pairs `(α, β)`.
#[derive(Debug, Clone)]
pub struct BigradedPolynomial {
    pub n: usize,
    pub p: u32,
    pub q: u32,
    alphas: Vec<MultiIndex>,
    betas: Vec<MultiIndex>,
    /// Row-major over `(alpha, beta)`.
    coeffs: Vec<C64>,
}

impl BigradedPolynomial {
    pub fn zero(n: usize, p: u32, q: u32) -> Self {
        let alphas = MultiIndex::all(n, p);
        let betas = MultiIndex::all(n, q);
        let coeffs = vec![C64::new(0.0, 0.0); alphas.len() * betas.len()];
        BigradedPolynomial { n, p, q, alphas, betas, coeffs }
    }

    /// Construct from a coefficient table in the canonical
    /// `MultiIndex::all` ordering.
    pub fn from_coeffs(n: usize, p: u32, q: u32, coeffs: Vec<C64>) -> Self {
        let mut poly = Self::zero(n, p, q);
        assert_eq!(coeffs.len(), poly.coeffs.len());
        poly.coeffs = coeffs;
        poly
    }

    pub fn monomials(&self) -> (&[MultiIndex], &[MultiIndex]) {
        (&self.alphas, &self.betas)
    }

    pub fn coeffs(&self) -> &[C64] {
        &self.coeffs
    }

    pub fn coeff(&self, a: usize, b: usize) -> C64 {
        self.coeffs[a * self.betas.len() + b]
    }

    pub fn set_coeff(&mut self, a: usize, b: usize, c: C64) {
        self.coeffs[a * self.betas.len() + b] = c;
    }

    /// Evaluate at `z ∈ C^n` (the homogeneous polynomial, not only its sphere
    /// restriction).
    pub fn eval(&self, z: &[C64]) -> C64 {
        debug_assert_eq!(z.len(), self.n);
        // power tables per axis
        let pmax = self.p as usize;
        let qmax = self.q as usize;
        let mut zpow = vec![C64::new(1.0, 0.0); self.n * (pmax + 1)];
        let mut wpow = vec![C64::new(1.0, 0.0); self.n * (qmax + 1)];
        for j in 0..self.n {
            for k in 1..=pmax {
                zpow[j * (pmax + 1) + k] = zpow[j * (pmax + 1) + k - 1] * z[j];
            }
            let zc = z[j].conj();
            for k in 1..=qmax {
                wpow[j * (qmax + 1) + k] = wpow[j * (qmax + 1) + k - 1] * zc;
            }
        }
        let mut acc = C64::new(0.0, 0.0);
        for (a, alpha) in self.alphas.iter().enumerate() {
            let mut za = C64::new(1.0, 0.0);
            for j in 0..self.n {
                za *= zpow[j * (pmax + 1) + alpha[j] as usize];
            }
            for (b, beta) in self.betas.iter().enumerate() {
                let c = self.coeffs[a * self.betas.len() + b];
                if c.norm_sqr() == 0.0 {
                    continue;
                }
                let mut zb = za;
                for j in 0..self.n {
                    zb *= wpow[j * (qmax + 1) + beta[j] as usize];
                }
                acc += c * zb;
            }
        }
        acc
    }

    /// The symbolic Laplacian `ΔP`, a `(p-1, q-1)`-graded polynomial:
    /// `Δ(z^α z̄^β) = 4 Σ_j α_j β_j z^{α-e_j} z̄^{β-e_j}`.
    pub fn laplacian(&self) -> BigradedPolynomial {
        if self.p == 0 || self.q == 0 {
            return BigradedPolynomial::zero(self.n, self.p.saturating_sub(1), self.q.saturating_sub(1));
        }
        let mut out = BigradedPolynomial::zero(self.n, self.p - 1, self.q - 1);
        let bl = out.betas.len();
        for (a_out, alpha_out) in out.alphas.clone().iter().enumerate() {
            for (b_out, beta_out) in out.betas.clone().iter().enumerate() {
                let mut acc = C64::new(0.0, 0.0);
                for j in 0..self.n {
                    let mut ae: Vec<u32> = alpha_out.entries().to_vec();
                    ae[j] += 1;
                    let mut be: Vec<u32> = beta_out.entries().to_vec();
                    be[j] += 1;
                    let ai = self.alphas.iter().position(|x| x.entries() == ae.as_slice());
                    let bi = self.betas.iter().position(|x| x.entries() == be.as_slice());
                    if let (Some(ai), Some(bi)) = (ai, bi) {
                        acc += 4.0 * (ae[j] as f64) * (be[j] as f64) * self.coeffs[ai * self.betas.len() + bi];
                    }
                }
                out.coeffs[a_out * bl + b_out] = acc;
            }
        }
        out
    }

    /// Largest coefficient magnitude.
    pub fn max_coeff(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn scale(&mut self, s: C64) {
        for c in self.coeffs.iter_mut() {
            *c *= s;
        }
    }

    pub fn axpy(&mut self, s: C64, other: &BigradedPolynomial) {
        debug_assert_eq!(self.coeffs.len(), other.coeffs.len());
        for (c, o) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *c += s * o;
        }
    }
}

/// Orthonormal basis of `H_{p,q}` over the unit sphere (un-normalized surface
/// measure).
#[derive(Debug, Clone)]
pub struct HarmonicBasis {
    pub n: usize,
    pub p: u32,
    pub q: u32,
    pub elements: Vec<BigradedPolynomial>,
}

impl HarmonicBasis {
    pub fn dim(&self) -> usize {
        self.elements.len()
    }

    /// Evaluate all basis elements at `z`.
    pub fn eval_all(&self, z: &[C64]) -> Vec<C64> {
        self.elements.iter().map(|e| e.eval(z)).collect()
    }

    /// Coefficient table rows `p, q, j, α, β, re, im` (one monomial per row).
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for (j, e) in self.elements.iter().enumerate() {
            let (alphas, betas) = e.monomials();
            for (a, alpha) in alphas.iter().enumerate() {
                for (b, beta) in betas.iter().enumerate() {
                    let c = e.coeff(a, b);
                    if c.norm() == 0.0 {
                        continue;
                    }
                    out.push_str(&format!(
                        "{},{},{},\"{}\",\"{}\",{:.17e},{:.17e}\n",
                        self.p, self.q, j, alpha, beta, c.re, c.im
                    ));
                }
            }
        }
        out
    }
}

/// Construct an orthonormal basis of `H_{p,q}(C^n)`: nullspace of the
/// symbolic Laplacian by SVD (threshold `1e-10 σ_max`), then modified
/// Gram–Schmidt against the sphere quadrature inner product.
pub fn harmonic_basis(n: usize, p: u32, q: u32) -> Result<Arc<HarmonicBasis>> {
    if n == 0 {
        return Err(Error::Domain("n must be >= 1".into()));
    }
    if n == 1 && p.min(q) != 0 {
        return Err(Error::Domain(
            "for n = 1 only H_{p,0} and H_{0,q} are nonzero".into(),
        ));
    }
    let alphas = MultiIndex::all(n, p);
    let betas = MultiIndex::all(n, q);
    let cols = alphas.len() * betas.len();
    let null_basis: Vec<Vec<f64>> = if p == 0 || q == 0 {
        // the Laplacian is identically zero on P_{p,0} and P_{0,q}
        (0..cols)
            .map(|i| {
                let mut v = vec![0.0; cols];
                v[i] = 1.0;
                v
            })
            .collect()
    } else {
        let alphas_out = MultiIndex::all(n, p - 1);
        let betas_out = MultiIndex::all(n, q - 1);
        // padded square so the thin SVD still carries the full right factor
        let mut m = DMatrix::<f64>::zeros(cols, cols);
        for (a_out, alpha_out) in alphas_out.iter().enumerate() {
            for (b_out, beta_out) in betas_out.iter().enumerate() {
                let row = a_out * betas_out.len() + b_out;
                for j in 0..n {
                    let mut ae: Vec<u32> = alpha_out.entries().to_vec();
                    ae[j] += 1;
                    let mut be: Vec<u32> = beta_out.entries().to_vec();
                    be[j] += 1;
                    let ai = alphas.iter().position(|x| x.entries() == ae.as_slice()).unwrap();
                    let bi = betas.iter().position(|x| x.entries() == be.as_slice()).unwrap();
                    m[(row, ai * betas.len() + bi)] += 4.0 * ae[j] as f64 * be[j] as f64;
                }
            }
        }
        let svd = m.svd(false, true);
        let v_t = svd.v_t.as_ref().expect("v_t requested");
        let smax = svd.singular_values.iter().cloned().fold(0.0, f64::max);
        let rank = svd
            .singular_values
            .iter()
            .filter(|&&s| s > 1e-10 * smax.max(1e-300))
            .count();
        (rank..v_t.nrows())
            .map(|r| v_t.row(r).iter().cloned().collect())
            .collect()
    };

    // orthonormalize against the sphere inner product
    let degree = 2 * (p + q) as usize + 2;
    let rule = sphere_quadrature(n, 1.0, degree)?;
    let mut elements: Vec<BigradedPolynomial> = Vec::with_capacity(null_basis.len());
    for v in null_basis {
        let coeffs: Vec<C64> = v.iter().map(|&x| C64::new(x, 0.0)).collect();
        let mut poly = BigradedPolynomial::from_coeffs(n, p, q, coeffs);
        // two-pass modified Gram-Schmidt
        for _ in 0..2 {
            for prev in &elements {
                let inner = sphere_inner(&rule, &poly, prev);
                poly.axpy(-inner, prev);
            }
        }
        let norm = sphere_inner(&rule, &poly, &poly).re.max(0.0).sqrt();
        if norm < 1e-12 {
            continue;
        }
        poly.scale(C64::new(1.0 / norm, 0.0));
        elements.push(poly);
    }
    Ok(Arc::new(HarmonicBasis { n, p, q, elements }))
}

/// `⟨P, Q⟩ = ∫_{S^{2n-1}} P(ω) conj(Q(ω)) dσ(ω)` by quadrature.
pub fn sphere_inner(rule: &QuadratureRule, a: &BigradedPolynomial, b: &BigradedPolynomial) -> C64 {
    rule.nodes
        .iter()
        .zip(&rule.weights)
        .map(|(z, &w)| a.eval(z) * b.eval(z).conj() * w)
        .sum()
}

/// Exact monomial inner product on the unit sphere:
/// `∫ z^α z̄^α dσ = 2 π^n α! / Γ(n + |α|)` (and 0 when the bidegrees differ).
/// Kept as an independent oracle for the quadrature Gram.
pub fn monomial_sphere_integral(n: usize, alpha: &MultiIndex) -> f64 {
    let mut log = (n as f64) * std::f64::consts::PI.ln() + 2.0_f64.ln();
    for j in 0..alpha.dim() {
        log += crate::specfun::ln_gamma(alpha[j] as f64 + 1.0);
    }
    log -= crate::specfun::ln_gamma(n as f64 + alpha.degree() as f64);
    log.exp()
}

/// A cache of harmonic bases for all `(p, q)` with `p + q <= band_limit`,
/// classes ordered by `(l, p)`.
#[derive(Debug, Clone)]
pub struct HarmonicTable {
    pub n: usize,
    pub band_limit: u32,
    bases: Vec<((u32, u32), Arc<HarmonicBasis>)>,
}

impl HarmonicTable {
    pub fn new(n: usize, band_limit: u32) -> Result<Self> {
        let mut bases = Vec::new();
        for l in 0..=band_limit {
            for p in 0..=l {
                let q = l - p;
                if n == 1 && p.min(q) != 0 {
                    continue;
                }
                bases.push(((p, q), harmonic_basis(n, p, q)?));
            }
        }
        Ok(HarmonicTable { n, band_limit, bases })
    }

    pub fn classes(&self) -> impl Iterator<Item = &((u32, u32), Arc<HarmonicBasis>)> {
        self.bases.iter()
    }

    pub fn basis(&self, p: u32, q: u32) -> Option<&Arc<HarmonicBasis>> {
        self.bases.iter().find(|((pp, qq), _)| *pp == p && *qq == q).map(|(_, b)| b)
    }

    /// Total coefficient dimension `Σ dim H_{p,q}`.
    pub fn total_dim(&self) -> usize {
        self.bases.iter().map(|(_, b)| b.dim()).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;
    use rand_distr::StandardNormal;

    fn random_point(n: usize, rng: &mut ChaCha8Rng) -> Vec<C64> {
        (0..n)
            .map(|_| C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)))
            .collect()
    }

    #[test]
    fn dims_match_rank_nullity() {
        // brute-force oracle: dim H_{p,q} = dim P_{p,q} - rank(Δ); for n = 2
        // the Laplacian P_{1,1} -> P_{0,0} is the 1 x 4 matrix with rank 1
        assert_eq!(harmonic_basis(2, 1, 0).unwrap().dim(), 2);
        assert_eq!(harmonic_basis(2, 1, 1).unwrap().dim(), 3);
        assert_eq!(harmonic_basis(2, 2, 1).unwrap().dim(), 4);
        assert_eq!(harmonic_basis(2, 3, 0).unwrap().dim(), 4);
        assert_eq!(harmonic_basis(3, 1, 1).unwrap().dim(), 8);
        assert_eq!(harmonic_basis(3, 2, 1).unwrap().dim(), 15);
        assert_eq!(harmonic_basis(1, 3, 0).unwrap().dim(), 1);
        assert!(harmonic_basis(1, 1, 1).is_err());
    }

    #[test]
    fn elements_are_harmonic() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for (n, p, q) in [(2usize, 2u32, 1u32), (2, 3, 2), (3, 1, 1)] {
            let basis = harmonic_basis(n, p, q).unwrap();
            for e in &basis.elements {
                let lap = e.laplacian();
                for _ in 0..100 {
                    let z = random_point(n, &mut rng);
                    assert!(
                        lap.eval(&z).norm() <= 1e-10 * e.max_coeff().max(1.0) * 10.0,
                        "laplacian not zero for ({n},{p},{q})"
                    );
                }
            }
        }
    }

    #[test]
    fn finite_difference_laplacian_oracle() {
        // cross-check the symbolic Laplacian against central differences in
        // the 2n real coordinates
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let basis = harmonic_basis(2, 2, 1).unwrap();
        let e = &basis.elements[1];
        let h = 1e-4;
        for _ in 0..10 {
            let z = random_point(2, &mut rng);
            let x0 = crate::to_real(&z);
            let mut lap = C64::new(0.0, 0.0);
            for k in 0..4 {
                let mut xp = x0.clone();
                xp[k] += h;
                let mut xm = x0.clone();
                xm[k] -= h;
                lap += e.eval(&crate::to_complex(&xp)) + e.eval(&crate::to_complex(&xm))
                    - 2.0 * e.eval(&z);
            }
            lap /= h * h;
            assert!(lap.norm() < 1e-5, "fd laplacian {lap}");
        }
    }

    #[test]
    fn gram_matrix_is_identity() {
        let rule = sphere_quadrature(2, 1.0, 14).unwrap();
        for (p, q) in [(1u32, 0u32), (1, 1), (2, 1), (3, 1)] {
            let basis = harmonic_basis(2, p, q).unwrap();
            for (i, a) in basis.elements.iter().enumerate() {
                for (j, b) in basis.elements.iter().enumerate() {
                    let g = sphere_inner(&rule, a, b);
                    let want = if i == j { 1.0 } else { 0.0 };
                    assert!(
                        (g - C64::new(want, 0.0)).norm() < 1e-10,
                        "gram ({p},{q}) [{i},{j}] = {g}"
                    );
                }
            }
        }
    }

    #[test]
    fn homogeneity() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let basis = harmonic_basis(2, 2, 1).unwrap();
        let e = &basis.elements[0];
        for _ in 0..20 {
            let z = random_point(2, &mut rng);
            let lam = C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal));
            let zs: Vec<C64> = z.iter().map(|w| w * lam).collect();
            let want = lam.powu(2) * lam.conj().powu(1) * e.eval(&z);
            assert!((e.eval(&zs) - want).norm() <= 1e-10 * want.norm().max(1.0));
        }
    }

    #[test]
    fn quadrature_gram_matches_exact_monomial_integrals() {
        // ∫ z^α z̄^α dσ = 2π^n α!/Γ(n+|α|)
        let rule = sphere_quadrature(2, 1.0, 12).unwrap();
        for alpha in MultiIndex::all_up_to(2, 3) {
            let want = monomial_sphere_integral(2, &alpha);
            let got = rule.integrate(|z| {
                let mut m = C64::new(1.0, 0.0);
                for j in 0..2 {
                    m *= z[j].powu(alpha[j]) * z[j].conj().powu(alpha[j]);
                }
                m
            });
            assert_relative_eq!(got.re, want, max_relative = 1e-11);
        }
    }

    #[test]
    fn sphere_mean_zero_for_positive_degree() {
        let rule = sphere_quadrature(2, 1.0, 10).unwrap();
        for (p, q) in [(1u32, 0u32), (1, 1), (2, 1)] {
            let basis = harmonic_basis(2, p, q).unwrap();
            for e in &basis.elements {
                let v = rule.integrate(|z| e.eval(z));
                assert!(v.norm() < 1e-10, "mean of Y^{{{p},{q}}} = {v}");
            }
        }
    }

    #[test]
    fn table_layout() {
        let table = HarmonicTable::new(2, 3).unwrap();
        // Σ_{p+q<=3} (p+q+1) = 1 + 4 + 9 + 16 = 30
        assert_eq!(table.total_dim(), 30);
        let classes: Vec<(u32, u32)> = table.classes().map(|(c, _)| *c).collect();
        assert_eq!(classes[0], (0, 0));
        assert_eq!(classes[1], (0, 1));
        assert_eq!(classes[2], (1, 0));
        assert_eq!(*classes.last().unwrap(), (3, 0));
    }

    #[test]
    fn csv_export_shape() {
        let basis = harmonic_basis(2, 1, 0).unwrap();
        let csv = basis.to_csv();
        let first = csv.lines().next().unwrap();
        // p, q, j, quoted α, quoted β, re, im
        assert_eq!(first.matches('"').count(), 4);
        assert!(first.starts_with("1,0,0,"));
    }
}
