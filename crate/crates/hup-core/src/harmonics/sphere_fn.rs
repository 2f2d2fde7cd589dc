//! Band-limited functions on `S^{2n-1}` stored as bigraded spherical-harmonic
//! coefficients.

use std::sync::Arc;

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::geometry::QuadratureRule;
use crate::{Result, C64};

use super::bigraded::{HarmonicBasis, HarmonicTable};

/// One `(p, q)` component: coefficients against an orthonormal basis of
/// `H_{p,q}`.
#[derive(Debug, Clone)]
pub struct SphereComponent {
    pub p: u32,
    pub q: u32,
    pub basis: Arc<HarmonicBasis>,
    pub coeffs: Vec<C64>,
}

impl SphereComponent {
    pub fn eval(&self, z: &[C64]) -> C64 {
        self.basis
            .elements
            .iter()
            .zip(&self.coeffs)
            .map(|(e, c)| c * e.eval(z))
            .sum()
    }
}

/// A band-limited function `f = Σ_{p+q<=L} Σ_j a_j^{pq} Y_j^{p,q}`.
#[derive(Debug, Clone)]
pub struct SphereFunction {
    pub n: usize,
    pub band_limit: u32,
    /// Components ordered by `(p+q, p)`; classes with zero coefficients may be
    /// omitted.
    pub components: Vec<SphereComponent>,
}

impl SphereFunction {
    pub fn zero(n: usize, band_limit: u32) -> Self {
        SphereFunction { n, band_limit, components: Vec::new() }
    }

    pub fn from_component(n: usize, component: SphereComponent) -> Self {
        let band_limit = component.p + component.q;
        SphereFunction { n, band_limit, components: vec![component] }
    }

    /// A single basis harmonic `Y_j^{p,q}`.
    pub fn basis_element(basis: &Arc<HarmonicBasis>, j: usize) -> Self {
        let mut coeffs = vec![C64::new(0.0, 0.0); basis.dim()];
        coeffs[j] = C64::new(1.0, 0.0);
        SphereFunction::from_component(
            basis.n,
            SphereComponent { p: basis.p, q: basis.q, basis: Arc::clone(basis), coeffs },
        )
    }

    /// Random band-limited function with unit-variance coefficients.
    pub fn random(table: &HarmonicTable, rng: &mut ChaCha8Rng) -> Self {
        let components = table
            .classes()
            .map(|((p, q), basis)| SphereComponent {
                p: *p,
                q: *q,
                basis: Arc::clone(basis),
                coeffs: (0..basis.dim())
                    .map(|_| C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)))
                    .collect(),
            })
            .collect();
        SphereFunction { n: table.n, band_limit: table.band_limit, components }
    }

    /// Evaluate the homogeneous-polynomial extension at `z` (equals the
    /// function on the unit sphere).
    pub fn eval(&self, z: &[C64]) -> C64 {
        self.components.iter().map(|c| c.eval(z)).sum()
    }

    /// Pointwise evaluation on a rule's nodes.
    pub fn values_on(&self, rule: &QuadratureRule) -> Vec<C64> {
        rule.nodes.iter().map(|z| self.eval(z)).collect()
    }

    /// Coefficient of `Y_j^{p,q}`, 0 when the class is absent.
    pub fn coeff(&self, p: u32, q: u32, j: usize) -> C64 {
        self.components
            .iter()
            .find(|c| c.p == p && c.q == q)
            .map(|c| c.coeffs[j])
            .unwrap_or(C64::new(0.0, 0.0))
    }

    /// `Σ |a_j^{pq}|²` (the squared `L²` norm, by orthonormality).
    pub fn coeff_norm_sqr(&self) -> f64 {
        self.components
            .iter()
            .flat_map(|c| c.coeffs.iter())
            .map(|c| c.norm_sqr())
            .sum()
    }

    /// Analysis: expand samples on a quadrature rule into coefficients for
    /// every class of `table`. The rule must integrate degree
    /// `band_limit + p + q` exactly, i.e. `2 band_limit` for a band-limited
    /// input.
    pub fn analyze(
        values: &[C64],
        rule: &QuadratureRule,
        table: &HarmonicTable,
    ) -> Result<SphereFunction> {
        if rule.exactness_degree < 2 * table.band_limit as usize {
            return Err(crate::Error::Resolution(format!(
                "rule degree {} < 2 x band limit {}",
                rule.exactness_degree, table.band_limit
            )));
        }
        let mut components = Vec::new();
        for ((p, q), basis) in table.classes() {
            let mut coeffs = vec![C64::new(0.0, 0.0); basis.dim()];
            for (j, e) in basis.elements.iter().enumerate() {
                let mut acc = C64::new(0.0, 0.0);
                for ((z, &w), v) in rule.nodes.iter().zip(&rule.weights).zip(values) {
                    acc += v * e.eval(z).conj() * w;
                }
                coeffs[j] = acc;
            }
            components.push(SphereComponent { p: *p, q: *q, basis: Arc::clone(basis), coeffs });
        }
        Ok(SphereFunction { n: table.n, band_limit: table.band_limit, components })
    }
}
