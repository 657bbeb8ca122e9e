//! The η-μ and λ-μ multipath laws and the gamma shadowing law.
//!
//! The multipath densities are evaluated in log space through the scaled
//! ratio `e^{-z} I_ν(z) / z^ν`, which removes the `H^{-(μ-1/2)}` factor and
//! is analytic at `H = 0`. Only `|H|` enters, so `η` and `1/η` give the
//! same density, as they should.

use crate::error::{Error, Result};
use crate::specfun::{ln_bessel_i_ratio_scaled_unchecked, ln_gamma_unchecked};
use std::f64::consts::{LN_2, PI};

fn positive(name: &str, v: f64) -> Result<f64> {
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(Error::InvalidParameter(format!("{name} = {v} must be positive and finite")))
    }
}

fn non_negative(func: &'static str, name: &str, v: f64) -> Result<f64> {
    if v >= 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(Error::domain(func, format!("{name} = {v} must be non-negative")))
    }
}

/// η-μ parameters (format 1).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EtaMuParams {
    eta: f64,
    mu: f64,
}

impl EtaMuParams {
    pub fn new(eta: f64, mu: f64) -> Result<Self> {
        Ok(EtaMuParams {
            eta: positive("eta", eta)?,
            mu: positive("mu", mu)?,
        })
    }

    /// The η-μ parameters whose `(h, H)` coincide with those of `p`.
    pub fn from_lambda(p: &LambdaMuParams) -> Self {
        EtaMuParams {
            eta: (1.0 - p.lambda) / (1.0 + p.lambda),
            mu: p.mu,
        }
    }

    pub fn eta(&self) -> f64 {
        self.eta
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    /// `h = (2 + η⁻¹ + η)/4`.
    pub fn h(&self) -> f64 {
        (2.0 + 1.0 / self.eta + self.eta) / 4.0
    }

    /// `H = (η⁻¹ - η)/4`.
    pub fn big_h(&self) -> f64 {
        (1.0 / self.eta - self.eta) / 4.0
    }

    /// `h - H = (1 + η)/2`, free of cancellation.
    pub fn h_minus_big_h(&self) -> f64 {
        0.5 * (1.0 + self.eta)
    }

    /// `h + H = (1 + η⁻¹)/2`.
    pub fn h_plus_big_h(&self) -> f64 {
        0.5 * (1.0 + 1.0 / self.eta)
    }

    fn ln_power_pdf(&self, w: f64, extra: f64) -> f64 {
        let mu = self.mu;
        let nu = mu - 0.5;
        let h = self.h();
        let z = 2.0 * mu * self.big_h().abs() * w;
        let gap = self.h_minus_big_h().min(self.h_plus_big_h());
        LN_2 + 0.5 * PI.ln() + (mu + 0.5) * mu.ln() + mu * h.ln() - ln_gamma_unchecked(mu)
            + nu * (2.0 * mu).ln()
            + power_term(w, 2.0 * nu + extra)
            - 2.0 * mu * gap * w
            + ln_bessel_i_ratio_scaled_unchecked(nu, z)
    }
}

/// λ-μ parameters (format 2), `0 < λ < 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LambdaMuParams {
    lambda: f64,
    mu: f64,
}

impl LambdaMuParams {
    pub fn new(lambda: f64, mu: f64) -> Result<Self> {
        if !(lambda > 0.0 && lambda < 1.0) {
            return Err(Error::InvalidParameter(format!("lambda = {lambda} must lie in (0, 1)")));
        }
        Ok(LambdaMuParams {
            lambda,
            mu: positive("mu", mu)?,
        })
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    /// `h = 1/(1 - λ²)`.
    pub fn h(&self) -> f64 {
        1.0 / ((1.0 - self.lambda) * (1.0 + self.lambda))
    }

    /// `H = λ/(1 - λ²)`.
    pub fn big_h(&self) -> f64 {
        self.lambda * self.h()
    }

    /// `h - H = 1/(1 + λ)`.
    pub fn h_minus_big_h(&self) -> f64 {
        1.0 / (1.0 + self.lambda)
    }

    /// `h + H = 1/(1 - λ)`.
    pub fn h_plus_big_h(&self) -> f64 {
        1.0 / (1.0 - self.lambda)
    }

    fn ln_power_pdf(&self, w: f64, extra: f64) -> f64 {
        let (mu, lambda) = (self.mu, self.lambda);
        let nu = mu - 0.5;
        let one_minus_sq = (1.0 - lambda) * (1.0 + lambda);
        let z = 2.0 * mu * lambda * w / one_minus_sq;
        LN_2 + 0.5 * PI.ln() + (mu + 0.5) * mu.ln() + nu * (2.0 * mu).ln()
            - ln_gamma_unchecked(mu)
            - mu * one_minus_sq.ln()
            + power_term(w, 2.0 * nu + extra)
            - 2.0 * mu * w / (1.0 + lambda)
            + ln_bessel_i_ratio_scaled_unchecked(nu, z)
    }
}

/// `ln w^p` with the `w = 0` limits `-∞`, `0`, `+∞` for `p >, =, < 0`.
fn power_term(w: f64, p: f64) -> f64 {
    if w > 0.0 {
        p * w.ln()
    } else if p > 0.0 {
        f64::NEG_INFINITY
    } else if p < 0.0 {
        f64::INFINITY
    } else {
        0.0
    }
}

/// Either multipath model.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MultipathParams {
    EtaMu(EtaMuParams),
    LambdaMu(LambdaMuParams),
}

impl MultipathParams {
    pub fn mu(&self) -> f64 {
        match self {
            MultipathParams::EtaMu(p) => p.mu(),
            MultipathParams::LambdaMu(p) => p.mu(),
        }
    }

    pub fn h(&self) -> f64 {
        match self {
            MultipathParams::EtaMu(p) => p.h(),
            MultipathParams::LambdaMu(p) => p.h(),
        }
    }

    pub fn big_h(&self) -> f64 {
        match self {
            MultipathParams::EtaMu(p) => p.big_h(),
            MultipathParams::LambdaMu(p) => p.big_h(),
        }
    }

    pub fn h_minus_big_h(&self) -> f64 {
        match self {
            MultipathParams::EtaMu(p) => p.h_minus_big_h(),
            MultipathParams::LambdaMu(p) => p.h_minus_big_h(),
        }
    }

    pub fn h_plus_big_h(&self) -> f64 {
        match self {
            MultipathParams::EtaMu(p) => p.h_plus_big_h(),
            MultipathParams::LambdaMu(p) => p.h_plus_big_h(),
        }
    }

    /// `ln[p_W(w) w^extra]`; `w ≥ 0` is not checked.
    pub(crate) fn ln_power_pdf_times(&self, w: f64, extra: f64) -> f64 {
        match self {
            MultipathParams::EtaMu(p) => p.ln_power_pdf(w, extra),
            MultipathParams::LambdaMu(p) => p.ln_power_pdf(w, extra),
        }
    }

    /// Normalized power density `p_W(w)`.
    pub fn power_pdf(&self, w: f64) -> Result<f64> {
        non_negative("power_pdf", "w", w)?;
        Ok(self.ln_power_pdf_times(w, 0.0).exp())
    }

    /// Envelope density with rms value `r_hat`.
    pub fn envelope_pdf(&self, r: f64, r_hat: f64) -> Result<f64> {
        non_negative("envelope_pdf", "r", r)?;
        if !(r_hat > 0.0 && r_hat.is_finite()) {
            return Err(Error::domain("envelope_pdf", format!("r_hat = {r_hat} must be positive")));
        }
        // p_R(r) = (2/r̂) p_W(s²) s with s = r/r̂.
        let s = r / r_hat;
        Ok(2.0 / r_hat * self.ln_power_pdf_times(s * s, 0.5).exp())
    }
}

impl From<EtaMuParams> for MultipathParams {
    fn from(p: EtaMuParams) -> Self {
        MultipathParams::EtaMu(p)
    }
}

impl From<LambdaMuParams> for MultipathParams {
    fn from(p: LambdaMuParams) -> Self {
        MultipathParams::LambdaMu(p)
    }
}

/// Gamma shadowing: shape `b`, scale `Ω`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShadowParams {
    b: f64,
    omega: f64,
}

impl ShadowParams {
    pub fn new(b: f64, omega: f64) -> Result<Self> {
        Ok(ShadowParams {
            b: positive("b", b)?,
            omega: positive("omega", omega)?,
        })
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    /// `ln p_Y(y)` for `y > 0`.
    pub(crate) fn ln_pdf(&self, y: f64) -> f64 {
        (self.b - 1.0) * y.ln() - y / self.omega - ln_gamma_unchecked(self.b) - self.b * self.omega.ln()
    }
}

/// η-μ envelope density with rms value `r_hat`.
pub fn eta_mu_envelope_pdf(r: f64, r_hat: f64, p: &EtaMuParams) -> Result<f64> {
    MultipathParams::EtaMu(*p).envelope_pdf(r, r_hat)
}

/// η-μ normalized power density.
pub fn eta_mu_power_pdf(w: f64, p: &EtaMuParams) -> Result<f64> {
    MultipathParams::EtaMu(*p).power_pdf(w)
}

/// λ-μ normalized envelope density (unit rms value).
pub fn lambda_mu_envelope_pdf(rho: f64, p: &LambdaMuParams) -> Result<f64> {
    MultipathParams::LambdaMu(*p).envelope_pdf(rho, 1.0)
}

/// λ-μ normalized power density.
pub fn lambda_mu_power_pdf(w: f64, p: &LambdaMuParams) -> Result<f64> {
    MultipathParams::LambdaMu(*p).power_pdf(w)
}

/// Gamma density `y^{b-1} e^{-y/Ω} / (Γ(b) Ω^b)`.
///
/// At `y = 0` this is `+∞` for `b < 1`, `1/Ω` for `b = 1` and `0` otherwise.
pub fn gamma_pdf(y: f64, s: &ShadowParams) -> Result<f64> {
    non_negative("gamma_pdf", "y", y)?;
    if y == 0.0 {
        return Ok(if s.b < 1.0 {
            f64::INFINITY
        } else if s.b == 1.0 {
            1.0 / s.omega
        } else {
            0.0
        });
    }
    Ok(s.ln_pdf(y).exp())
}

/// Moment estimate `μ = E²(R²) / (2 Var(R²)) · (1 + ratio)`.
///
/// `ratio` is `H/h` for the η-μ form and `λ` for the λ-μ form.
pub fn mu_from_moments(mean_sq: f64, var_sq: f64, ratio: f64) -> Result<f64> {
    if !(mean_sq > 0.0 && mean_sq.is_finite()) {
        return Err(Error::domain("mu_from_moments", format!("E(R²) = {mean_sq} must be positive")));
    }
    if !(var_sq > 0.0 && var_sq.is_finite()) {
        return Err(Error::domain("mu_from_moments", format!("Var(R²) = {var_sq} must be positive")));
    }
    if !(ratio > -1.0 && ratio < 1.0) {
        return Err(Error::domain("mu_from_moments", format!("ratio = {ratio} must lie in (-1, 1)")));
    }
    Ok(mean_sq * mean_sq / (2.0 * var_sq) * (1.0 + ratio))
}
