//! Closed-form definite integrals built on `K_ν`.

use super::bessel_k::ln_bessel_k_unchecked;
use super::gamma::ln_gamma_unchecked;
use crate::error::{Error, Result};

/// `ln ∫₀^∞ x^{ν-1} e^{-β/x} e^{-γx} dx = ln[2 (β/γ)^{ν/2} K_ν(2√(βγ))]`.
pub fn ln_gamma_mixture_integral(nu: f64, beta: f64, gamma: f64) -> Result<f64> {
    if !nu.is_finite() {
        return Err(Error::domain("gamma_mixture_integral", format!("order ν = {nu} must be finite")));
    }
    if !(beta > 0.0) || !beta.is_finite() || !(gamma > 0.0) || !gamma.is_finite() {
        return Err(Error::domain(
            "gamma_mixture_integral",
            format!("coefficients b = {beta}, γ = {gamma} must be positive"),
        ));
    }
    let arg = 2.0 * (beta * gamma).sqrt();
    Ok(std::f64::consts::LN_2 + 0.5 * nu * (beta / gamma).ln() + ln_bessel_k_unchecked(nu, arg))
}

/// `∫₀^∞ x^{ν-1} e^{-β/x} e^{-γx} dx = 2 (β/γ)^{ν/2} K_ν(2√(βγ))`.
pub fn gamma_mixture_integral(nu: f64, beta: f64, gamma: f64) -> Result<f64> {
    let v = ln_gamma_mixture_integral(nu, beta, gamma)?.exp();
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::overflow("gamma_mixture_integral", format!("ν = {nu}, b = {beta}, γ = {gamma}")))
    }
}

fn check_moment(a: f64, order: f64, scale: f64) -> Result<()> {
    if !(scale > 0.0) || !scale.is_finite() {
        return Err(Error::domain("bessel_k_moment", format!("scale b = {scale} must be positive")));
    }
    if !a.is_finite() || !order.is_finite() {
        return Err(Error::domain("bessel_k_moment", "exponent and order must be finite"));
    }
    if !(a + 1.0 + order > 0.0) || !(a + 1.0 - order > 0.0) {
        return Err(Error::Validity(format!(
            "∫ x^a K_n(bx) dx needs a + 1 ± n > 0; got a = {a}, n = {order}"
        )));
    }
    Ok(())
}

/// `ln ∫₀^∞ x^a K_n(b x) dx`.
pub fn ln_bessel_k_moment(a: f64, order: f64, scale: f64) -> Result<f64> {
    check_moment(a, order, scale)?;
    Ok((a - 1.0) * std::f64::consts::LN_2 - (a + 1.0) * scale.ln()
        + ln_gamma_unchecked(0.5 * (a + 1.0 + order))
        + ln_gamma_unchecked(0.5 * (a + 1.0 - order)))
}

/// `∫₀^∞ x^a K_n(b x) dx = 2^{a-1} b^{-(a+1)} Γ((a+1+n)/2) Γ((a+1-n)/2)`.
///
/// Returns [`Error::Validity`] when `a + 1 ± n ≤ 0`, where the integral
/// diverges at the origin.
pub fn bessel_k_moment(a: f64, order: f64, scale: f64) -> Result<f64> {
    let v = ln_bessel_k_moment(a, order, scale)?.exp();
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::overflow("bessel_k_moment", format!("a = {a}, n = {order}, b = {scale}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::{bessel_k, gamma_fn};

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn mixture_integral_direct_substitution() {
        let v = gamma_mixture_integral(0.5, 1.0, 1.0).unwrap();
        assert!(rel(v, 2.0 * bessel_k(0.5, 2.0).unwrap()) < 1e-15);
        assert!(rel(v, 0.239_875_4) < 1e-6);
    }

    #[test]
    fn mixture_integral_inversion_symmetry() {
        // x → 1/x swaps (ν, β, γ) → (-ν, γ, β) and leaves the value unchanged;
        // the ratio of the two closed forms is (β/γ)^ν.
        for &(nu, b, g) in &[(0.7, 2.0, 0.3), (-2.4, 0.05, 4.0), (5.5, 1.3, 1.3)] {
            let lhs = gamma_mixture_integral(nu, b, g).unwrap();
            let rhs = gamma_mixture_integral(-nu, g, b).unwrap();
            assert!(rel(lhs, rhs) < 1e-14);
            let swapped = gamma_mixture_integral(nu, g, b).unwrap();
            assert!(rel(lhs / swapped, (b / g).powf(nu)) < 1e-13);
        }
    }

    #[test]
    fn moment_example() {
        let v = bessel_k_moment(1.0, 0.5, 1.0).unwrap();
        let want = gamma_fn(1.25).unwrap() * gamma_fn(0.75).unwrap();
        assert!(rel(v, want) < 1e-14);
        assert!(rel(v, 1.1107) < 1e-4);
    }

    #[test]
    fn moment_validity_boundary() {
        assert!(matches!(bessel_k_moment(0.5, 1.5, 1.0), Err(Error::Validity(_))));
        assert!(matches!(bessel_k_moment(0.5, -1.5, 1.0), Err(Error::Validity(_))));
        assert!(matches!(bessel_k_moment(1.0, 0.5, 0.0), Err(Error::Domain { .. })));
        assert!(bessel_k_moment(0.5, 1.49, 1.0).is_ok());
    }

    #[test]
    fn mixture_domain_errors() {
        assert!(gamma_mixture_integral(1.0, 0.0, 1.0).is_err());
        assert!(gamma_mixture_integral(1.0, 1.0, -1.0).is_err());
    }
}
