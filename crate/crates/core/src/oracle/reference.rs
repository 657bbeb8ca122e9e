//! Reference evaluations coded independently of the composite module.
//!
//! The term expansions here stop before the `K_ν` identity: every
//! `∫ u^{ν-1} e^{-β/u} e^{-γu} du` is integrated numerically.

use crate::base_models::{MultipathParams, ShadowParams};
use crate::composite::{CompositeSpec, Mixing};
use crate::error::{Error, Result};
use crate::quadrature::{integrate_semi_infinite, Tolerance};
use crate::specfun::gamma_fn;
use std::f64::consts::PI;

const TOL: Tolerance = Tolerance::new(0.0, 1e-13);

/// `∫₀^∞ u^{ν-1} e^{-β/u} e^{-γu} du` by quadrature about the analytic mode.
pub fn gamma_mixture_quadrature(nu: f64, beta: f64, gamma: f64) -> Result<f64> {
    let mode = ((nu - 1.0) + ((nu - 1.0).powi(2) + 4.0 * beta * gamma).sqrt()) / (2.0 * gamma);
    let ln_peak = (nu - 1.0) * mode.ln() - beta / mode - gamma * mode;
    // Scale out the peak so the integrand stays near unity.
    let est = integrate_semi_infinite(|u: f64| ((nu - 1.0) * u.ln() - beta / u - gamma * u - ln_peak).exp(), mode, TOL)
        .into_result()?;
    Ok(est.value * ln_peak.exp())
}

fn ln_gamma(x: f64) -> f64 {
    crate::specfun::ln_gamma(x).expect("positive argument")
}

/// `(h, H, h - H, h + H)` for either family; the λ-μ values are formed
/// from `λ` directly.
fn h_values(p: &MultipathParams) -> (f64, f64, f64, f64) {
    match p {
        MultipathParams::EtaMu(e) => (e.h(), e.big_h(), e.h_minus_big_h(), e.h_plus_big_h()),
        MultipathParams::LambdaMu(l) => {
            let lam = l.lambda();
            let d = 1.0 - lam * lam;
            (1.0 / d, lam / d, (1.0 - lam) / d, (1.0 + lam) / d)
        }
    }
}

fn rms_only(spec: &CompositeSpec) -> Result<()> {
    if spec.mixing() == Mixing::RmsGamma {
        Ok(())
    } else {
        Err(Error::Unsupported("term expansions exist for the rms mixing only".into()))
    }
}

/// Integer-μ term expansion before the `K_ν` identity, each integral by
/// quadrature:
///
/// `Σ_k 4 Γ(μ+k) μ^{μ-k} h^μ x^{2(μ-k)-1} / (k! Γ(μ-k) 2^{2k+1} Γ(μ) Γ(b) H^{μ+k} Ω^b)
///  × [(-1)^k ∫ u^{μ-b-k-1} e^{-1/(Ωu)} e^{-2μx²(h-H)u} du
///     + (-1)^μ ∫ u^{μ-b-k-1} e^{-1/(Ωu)} e^{-2μx²(h+H)u} du]`.
pub fn pre_identity_integer(x: f64, spec: &CompositeSpec) -> Result<f64> {
    rms_only(spec)?;
    let mu = spec.mu();
    if mu.fract() != 0.0 || mu < 1.0 {
        return Err(Error::Unsupported(format!("integer expansion needs integer mu, got {mu}")));
    }
    let m = mu as i32;
    let (b, omega) = (spec.shadow().b(), spec.shadow().omega());
    let (h, big_h, hm, hp) = h_values(spec.multipath());
    let mut sum = 0.0;
    for k in 0..m {
        let kf = k as f64;
        let coef = 4.0 * gamma_fn(mu + kf)? * mu.powf(mu - kf) * h.powf(mu) * x.powf(2.0 * (mu - kf) - 1.0)
            / (gamma_fn(kf + 1.0)? * gamma_fn(mu - kf)? * 2f64.powi(2 * k + 1) * gamma_fn(mu)? * gamma_fn(b)?
                * big_h.powi(m + k)
                * omega.powf(b));
        let nu = mu - b - kf;
        let i_minus = gamma_mixture_quadrature(nu, 1.0 / omega, 2.0 * mu * x * x * hm)?;
        let i_plus = gamma_mixture_quadrature(nu, 1.0 / omega, 2.0 * mu * x * x * hp)?;
        sum += coef * ((-1f64).powi(k) * i_minus + (-1f64).powi(m) * i_plus);
    }
    Ok(sum)
}

/// Real-μ term expansion (order `n` polynomial Bessel approximation) before
/// the `K_ν` identity:
///
/// `Σ_{k=0}^{n} Γ(n+k) μ^{2(μ+k)} H^{2k} h^μ n^{1-2k} x^{4(μ+k)-1} Ω^{-b}
///  / (k! Γ(n-k+1) Γ(μ+k+1/2) Γ(μ) Γ(b)) · 4√π ∫ y^{b-2μ-2k-1} e^{-y/Ω} e^{-2μhx²/y} dy`.
pub fn pre_identity_series(x: f64, spec: &CompositeSpec) -> Result<f64> {
    rms_only(spec)?;
    let n = spec.series_order().get();
    let nf = n as f64;
    let mu = spec.mu();
    let (b, omega) = (spec.shadow().b(), spec.shadow().omega());
    let (h, big_h, _, _) = h_values(spec.multipath());
    let mut sum = 0.0;
    for k in 0..=n {
        let kf = k as f64;
        if big_h == 0.0 && k > 0 {
            break;
        }
        let ln_coef = ln_gamma(nf + kf) + 2.0 * (mu + kf) * mu.ln() + if k > 0 { 2.0 * kf * big_h.abs().ln() } else { 0.0 }
            + mu * h.ln()
            + (1.0 - 2.0 * kf) * nf.ln()
            + (4.0 * (mu + kf) - 1.0) * x.ln()
            - b * omega.ln()
            - ln_gamma(kf + 1.0)
            - ln_gamma(nf - kf + 1.0)
            - ln_gamma(mu + kf + 0.5)
            - ln_gamma(mu)
            - ln_gamma(b);
        let integral = gamma_mixture_quadrature(b - 2.0 * mu - 2.0 * kf, 2.0 * mu * h * x * x, 1.0 / omega)?;
        sum += 4.0 * PI.sqrt() * ln_coef.exp() * integral;
    }
    Ok(sum)
}

/// Nakagami-m envelope density with rms value `r_hat`.
fn nakagami(r: f64, m: f64, r_hat: f64) -> f64 {
    let s2 = (r / r_hat).powi(2);
    (std::f64::consts::LN_2 + m * m.ln() - ln_gamma(m) + (2.0 * m - 1.0) * r.ln() - 2.0 * m * r_hat.ln() - m * s2).exp()
}

fn gamma_density(y: f64, s: &ShadowParams) -> f64 {
    ((s.b() - 1.0) * y.ln() - y / s.omega() - ln_gamma(s.b()) - s.b() * s.omega().ln()).exp()
}

/// Nakagami-m/gamma (generalized-K) mixture by quadrature over the shadow.
pub fn nakagami_gamma_pdf(x: f64, m: f64, shadow: &ShadowParams, mixing: Mixing) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::domain("nakagami_gamma_pdf", format!("x = {x} must be positive")));
    }
    let r_hat = |y: f64| match mixing {
        Mixing::MeanSquareGamma => y,
        Mixing::RmsGamma => y.sqrt(),
    };
    let f = |y: f64| nakagami(x, m, r_hat(y)) * gamma_density(y, shadow);
    // Pick the map scale where the conditional and the shadow law overlap.
    let scale = match mixing {
        Mixing::MeanSquareGamma => (x * shadow.omega()).sqrt(),
        Mixing::RmsGamma => x * shadow.omega().sqrt(),
    };
    Ok(integrate_semi_infinite(f, scale, TOL).into_result()?.value)
}

/// Rayleigh/gamma (K-distribution) mixture by quadrature over the shadow.
pub fn rayleigh_gamma_pdf(x: f64, shadow: &ShadowParams, mixing: Mixing) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::domain("rayleigh_gamma_pdf", format!("x = {x} must be positive")));
    }
    let f = |y: f64| {
        let r2 = match mixing {
            Mixing::MeanSquareGamma => y * y,
            Mixing::RmsGamma => y,
        };
        2.0 * x / r2 * (-x * x / r2).exp() * gamma_density(y, shadow)
    };
    let scale = match mixing {
        Mixing::MeanSquareGamma => (x * shadow.omega()).sqrt(),
        Mixing::RmsGamma => x * shadow.omega().sqrt(),
    };
    Ok(integrate_semi_infinite(f, scale, TOL).into_result()?.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::bessel_k;

    #[test]
    fn k_distribution_closed_form() {
        // Rayleigh with mean square Y: 4 x^b K_{b-1}(2x/√Ω) / (Γ(b) Ω^{(b+1)/2}).
        let s = ShadowParams::new(1.6, 0.7).unwrap();
        for x in [0.05f64, 0.5, 1.3, 3.0] {
            let want = 4.0 * x.powf(1.6) * bessel_k(0.6, 2.0 * x / 0.7f64.sqrt()).unwrap()
                / (gamma_fn(1.6).unwrap() * 0.7f64.powf(1.3));
            let got = rayleigh_gamma_pdf(x, &s, Mixing::RmsGamma).unwrap();
            assert!(((got - want) / want).abs() < 1e-11, "x={x}");
        }
    }

    #[test]
    fn rayleigh_is_nakagami_one() {
        let s = ShadowParams::new(0.9, 1.4).unwrap();
        for mixing in [Mixing::MeanSquareGamma, Mixing::RmsGamma] {
            for x in [0.1, 1.0, 2.7] {
                let a = rayleigh_gamma_pdf(x, &s, mixing).unwrap();
                let b = nakagami_gamma_pdf(x, 1.0, &s, mixing).unwrap();
                assert!(((a - b) / a).abs() < 1e-11);
            }
        }
    }

    #[test]
    fn mixture_quadrature_matches_closed_form() {
        let v = gamma_mixture_quadrature(0.5, 1.0, 1.0).unwrap();
        assert!((v / (PI.sqrt() * (-2.0f64).exp()) - 1.0).abs() < 1e-12);
    }
}
