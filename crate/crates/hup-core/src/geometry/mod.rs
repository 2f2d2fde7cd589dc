//! Quadrature rules on odd-dimensional spheres `S^{2n-1}`, geodesic spheres,
//! cone samplers and plane regions.
//!
//! Conventions: points of `R^{2n}` are identified with `C^n` through
//! `z_j = x_j + i x_{n+j}`; sphere rules carry the un-normalized surface
//! measure (total mass `2π^n/Γ(n) · r^{2n-1}`), geodesic rules are normalized
//! to total mass 1.

mod cone;
mod region;
mod sphere;

pub use cone::{classify_armitage, sample_cone, ArmitageVerdict, ConeKind, ConeSampler};
pub use region::{MeasureEstimate, RegionSpec};
pub use sphere::{gauss_legendre, geodesic_quadrature, sphere_quadrature, sphere_surface_area};

use crate::C64;

/// Nodes, positive weights and the stated polynomial exactness degree of a
/// quadrature rule on some manifold embedded in `C^n`.
#[derive(Debug, Clone)]
pub struct QuadratureRule {
    pub nodes: Vec<Vec<C64>>,
    pub weights: Vec<f64>,
    pub exactness_degree: usize,
    pub total_mass: f64,
}

impl QuadratureRule {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// `Σ w_i f(node_i)`.
    pub fn integrate<F: Fn(&[C64]) -> C64>(&self, f: F) -> C64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(z, &w)| f(z) * w)
            .sum()
    }

    /// Integrate against precomputed node values.
    pub fn integrate_values(&self, values: &[C64]) -> C64 {
        debug_assert_eq!(values.len(), self.len());
        values
            .iter()
            .zip(&self.weights)
            .map(|(v, &w)| v * w)
            .sum()
    }

    /// Rescale a unit-sphere rule to radius `r`: nodes scale by `r`, weights
    /// by `r^{dim}` where `dim` is the manifold dimension.
    pub fn scaled(&self, r: f64, manifold_dim: usize) -> QuadratureRule {
        let factor = r.powi(manifold_dim as i32);
        QuadratureRule {
            nodes: self
                .nodes
                .iter()
                .map(|z| z.iter().map(|w| w * r).collect())
                .collect(),
            weights: self.weights.iter().map(|w| w * factor).collect(),
            exactness_degree: self.exactness_degree,
            total_mass: self.total_mass * factor,
        }
    }

    /// One node per row: real coordinates `x_1..x_n, y_1..y_n`, then weight.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for (z, w) in self.nodes.iter().zip(&self.weights) {
            let x = crate::to_real(z);
            for c in &x {
                out.push_str(&format!("{c:.17e},"));
            }
            out.push_str(&format!("{w:.17e}\n"));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::C64;

    #[test]
    fn csv_layout() {
        let rule = QuadratureRule {
            nodes: vec![vec![C64::new(1.0, 2.0)]],
            weights: vec![0.5],
            exactness_degree: 0,
            total_mass: 0.5,
        };
        let csv = rule.to_csv();
        let fields: Vec<&str> = csv.trim().split(',').collect();
        assert_eq!(fields.len(), 3); // x, y, weight
        assert!(fields[0].starts_with("1.0"));
        assert!(fields[2].starts_with("5.0"));
    }
}
