//! Special functions used by the fading densities.
//!
//! Everything here is a pure function of its arguments. Log-space variants
//! (`ln_*`) exist wherever the composite coefficients would otherwise
//! overflow.

mod bessel_i;
mod bessel_k;
mod gamma;
mod integrals;

pub use bessel_i::{
    bessel_i, bessel_i_half_integer, bessel_i_poly, ln_bessel_i_ratio_scaled, ln_bessel_i_scaled,
};
pub use bessel_k::{bessel_k, bessel_k_scaled, ln_bessel_k};
pub use gamma::{gamma_fn, ln_gamma, ln_pochhammer, pochhammer, GAMMA_MAX_ARG};
pub use integrals::{bessel_k_moment, gamma_mixture_integral, ln_bessel_k_moment, ln_gamma_mixture_integral};

pub(crate) use bessel_i::ln_bessel_i_ratio_scaled_unchecked;
pub(crate) use bessel_k::ln_bessel_k_unchecked;
pub(crate) use gamma::ln_gamma_unchecked;

use crate::error::{Error, Result};

/// Truncation order `n ≥ 1` of the polynomial Bessel approximation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SeriesOrder(u32);

impl SeriesOrder {
    pub const DEFAULT: SeriesOrder = SeriesOrder(25);

    pub fn new(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("series order must be at least 1".into()));
        }
        Ok(SeriesOrder(n))
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

impl Default for SeriesOrder {
    fn default() -> Self {
        Self::DEFAULT
    }
}

impl std::fmt::Display for SeriesOrder {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}
