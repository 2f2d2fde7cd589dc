//! Bigraded spherical harmonics `H_{p,q}` on `S^{2n-1}`, zonal reproducing
//! kernels, spherical-harmonic projections, Funk–Hecke constants, Cesàro
//! weights and geodesic means.

mod bigraded;
mod ops;
mod sphere_fn;
mod zonal;

pub use bigraded::{
    harmonic_basis, monomial_sphere_integral, sphere_inner, BigradedPolynomial, HarmonicBasis,
    HarmonicTable,
};
pub use ops::{
    annihilate_projections_at, cesaro_weight, funk_hecke, geodesic_mean, geodesic_mean_fn,
    project_l, project_l_values, project_pq, project_pq_with_grid,
};
pub use sphere_fn::{SphereComponent, SphereFunction};
pub use zonal::{zonal, zonal_calibration_snapshot, zonal_constant, zonal_profile, ZonalConstant};
