//! Scalar special functions: Laguerre polynomials/functions, Gegenbauer
//! polynomials and derivatives, Bessel J, Hermite functions, and real-zero
//! location for the Laguerre/Bessel families.
//!
//! All evaluations are pure; nothing here allocates beyond scratch buffers.

mod bessel;
mod gamma;
mod gegenbauer;
mod hermite;
mod laguerre;
mod zeros;

pub use bessel::bessel_j;
pub use gamma::{binomial_falling, binomial_real, ln_gamma, ln_gamma_sign, pochhammer};
pub use gegenbauer::{chebyshev_t, gegenbauer};
pub use hermite::{hermite_1d, hermite_function};
pub use laguerre::{laguerre, laguerre_fn, laguerre_fn_scaled, laguerre_function, laguerre_sum};
pub use zeros::{real_zeros, ZeroFamily};

/// A multi-index `α ∈ Z_+^n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn new(entries: Vec<u32>) -> Self {
        MultiIndex(entries)
    }

    /// Dimension `n`.
    pub fn dim(&self) -> usize {
        self.0.len()
    }

    /// Total degree `|α|`.
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    /// All multi-indices of dimension `n` with `|α| = degree`, in
    /// lexicographic order.
    pub fn all(n: usize, degree: u32) -> Vec<MultiIndex> {
        fn rec(n: usize, degree: u32, prefix: &mut Vec<u32>, out: &mut Vec<MultiIndex>) {
            if n == 1 {
                prefix.push(degree);
                out.push(MultiIndex(prefix.clone()));
                prefix.pop();
                return;
            }
            for first in (0..=degree).rev() {
                prefix.push(first);
                rec(n - 1, degree - first, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, degree, &mut Vec::new(), &mut out);
        out
    }

    /// All multi-indices of dimension `n` with `|α| <= max_degree`, ordered by
    /// `(|α|, lexicographic)`.
    pub fn all_up_to(n: usize, max_degree: u32) -> Vec<MultiIndex> {
        (0..=max_degree).flat_map(|d| Self::all(n, d)).collect()
    }
}

impl std::ops::Index<usize> for MultiIndex {
    type Output = u32;
    fn index(&self, i: usize) -> &u32 {
        &self.0[i]
    }
}

impl std::fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// A scalar value together with an absolute error bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpecValue {
    pub value: f64,
    pub abs_error_bound: f64,
}

impl SpecValue {
    pub fn new(value: f64, abs_error_bound: f64) -> Self {
        debug_assert!(abs_error_bound >= 0.0);
        debug_assert!(value.is_finite());
        SpecValue {
            value,
            abs_error_bound,
        }
    }
}
