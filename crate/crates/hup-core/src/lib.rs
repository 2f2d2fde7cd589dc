//! Numerical laboratory for Heisenberg uniqueness pairs.
//!
//! The crate is organized around the pipeline
//!
//! ```text
//! specfun ─> geometry ─> harmonics ─> transforms ─> weyl ─> experiments
//! ```
//!
//! * [`specfun`] — scalar special functions (Laguerre, Gegenbauer, Bessel J,
//!   Hermite) and real-zero location.
//! * [`geometry`] — quadrature rules on odd spheres, geodesic spheres and
//!   planar grids; cone samplers; region measures.
//! * [`harmonics`] — bigraded spherical harmonics `H_{p,q}`, zonal kernels,
//!   spherical-harmonic projections, Funk–Hecke constants, geodesic means.
//! * [`transforms`] — symplectic Fourier transform of sphere measures, twisted
//!   convolution, spectral projections with the Hecke–Bochner closed form,
//!   special Hermite functions, modified-transform matrix elements.
//! * [`weyl`] — truncated Weyl transforms in the Hermite basis, the pair of
//!   projections `E_A`/`F_N`, Hilbert–Schmidt identities and annihilation
//!   probes.
//! * [`experiments`] — orchestrated rank/nullspace and determinacy experiments
//!   with reproducible reports.

pub mod error;
pub mod experiments;
pub mod geometry;
pub mod grid;
pub mod harmonics;
pub mod report;
pub mod specfun;
pub mod transforms;
pub mod weyl;

pub use error::{Error, Result};

/// Complex scalar used throughout the crate.
pub type C64 = num_complex::Complex64;

/// View a real vector `(x_1..x_n, y_1..y_n)` in `R^{2n}` as a point of `C^n`,
/// `z_j = x_j + i y_j`.
pub fn to_complex(x: &[f64]) -> Vec<C64> {
    let n = x.len() / 2;
    assert_eq!(x.len(), 2 * n, "even-dimensional real vector expected");
    (0..n).map(|j| C64::new(x[j], x[n + j])).collect()
}

/// Inverse of [`to_complex`]: `z in C^n` to `(Re z, Im z) in R^{2n}`.
pub fn to_real(z: &[C64]) -> Vec<f64> {
    let n = z.len();
    let mut out = vec![0.0; 2 * n];
    for j in 0..n {
        out[j] = z[j].re;
        out[n + j] = z[j].im;
    }
    out
}

/// The symplectic rotation `σ₀`: `(x, y) -> (y, -x)`, i.e. `z -> -i z`.
pub fn symplectic_rotation(z: &[C64]) -> Vec<C64> {
    z.iter().map(|w| C64::new(0.0, -1.0) * w).collect()
}

/// Hermitian inner product `z · w̄ = Σ z_j conj(w_j)`.
pub fn dot_conj(z: &[C64], w: &[C64]) -> C64 {
    z.iter().zip(w).map(|(a, b)| a * b.conj()).sum()
}

/// Euclidean norm of a complex vector.
pub fn cnorm(z: &[C64]) -> f64 {
    z.iter().map(|w| w.norm_sqr()).sum::<f64>().sqrt()
}
