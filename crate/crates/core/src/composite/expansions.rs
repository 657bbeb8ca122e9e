//! Integer-μ closed forms, real-μ series and their normalization scalars.
//!
//! Every coefficient is assembled in log space and exponentiated once per
//! term. The η-μ sums are written in `(h, H)`, the λ-μ sums directly in `λ`,
//! so the two families reach the same numbers along different arithmetic.

use super::{CompositeSpec, ExpansionValue, Method};
use crate::base_models::MultipathParams;
use crate::error::{Error, Result};
use crate::specfun::{ln_bessel_k_moment, ln_bessel_k_unchecked, ln_gamma_unchecked};
use std::f64::consts::{LN_2, PI};

fn sign_pow(negative: bool, k: u32) -> f64 {
    if negative && k % 2 == 1 {
        -1.0
    } else {
        1.0
    }
}

fn alt(k: u32) -> f64 {
    sign_pow(true, k)
}

fn check_x(func: &'static str, x: f64) -> Result<()> {
    if x >= 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(func, format!("x = {x} must be non-negative")))
    }
}

fn require(spec: &CompositeSpec, method: Method, eta_family: bool, func: &str) -> Result<()> {
    let family_ok = matches!(
        (spec.multipath, eta_family),
        (MultipathParams::EtaMu(_), true) | (MultipathParams::LambdaMu(_), false)
    );
    if !family_ok {
        let want = if eta_family { "an eta-mu" } else { "a lambda-mu" };
        return Err(Error::Unsupported(format!("{func} needs {want} spec")));
    }
    spec.with_method(method).map(|_| ())
}

/// Integer μ as a loop bound.
fn int_mu(spec: &CompositeSpec) -> u32 {
    spec.mu() as u32
}

/// Checks the moment-integral condition `a + 1 ± n > 0` for every term.
fn check_terms(spec: &CompositeSpec) -> Result<()> {
    let (mu, b) = (spec.mu(), spec.shadow.b());
    match spec.method {
        Method::ClosedFormIntegerMu => {
            for k in 0..int_mu(spec) {
                let k = k as f64;
                ln_bessel_k_moment(mu + b - k - 1.0, mu - b - k, 1.0)?;
            }
        }
        Method::SeriesRealMu => {
            for k in 0..=spec.series_order.get() {
                let k = k as f64;
                ln_bessel_k_moment(2.0 * (mu + k) + b - 1.0, b - 2.0 * (mu + k), 1.0)?;
            }
        }
        Method::Quadrature => {}
    }
    Ok(())
}

/// Sums signed terms and reports `Σ|t| / |Σ t|`.
fn signed_sum(terms: impl Iterator<Item = f64>) -> (f64, f64) {
    let (mut sum, mut abs) = (0.0, 0.0);
    for t in terms {
        sum += t;
        abs += t.abs();
    }
    let ratio = if sum != 0.0 { abs / sum.abs() } else if abs == 0.0 { 1.0 } else { f64::INFINITY };
    (sum, ratio)
}

fn finish(func: &'static str, density: f64, s: f64, diagnostic: f64) -> Result<ExpansionValue> {
    if density.is_finite() {
        Ok(ExpansionValue {
            density,
            s,
            diagnostic,
        })
    } else {
        Err(Error::overflow(func, "term sum is not finite"))
    }
}

pub(crate) fn eta_integer(x: f64, spec: &CompositeSpec) -> Result<ExpansionValue> {
    let spec = spec.with_method(Method::ClosedFormIntegerMu)?;
    check_x("eta_mu_gamma_pdf_integer", x)?;
    check_terms(&spec)?;
    let s = s_eta_integer(&spec);
    if x == 0.0 {
        return Ok(ExpansionValue {
            density: spec.origin_value()?,
            s,
            diagnostic: 1.0,
        });
    }
    let m = int_mu(&spec);
    let (mu, b, omega) = (spec.mu(), spec.shadow.b(), spec.shadow.omega());
    let p = spec.multipath;
    let (h, big_h) = (p.h(), p.big_h());
    let (hm, hp) = (p.h_minus_big_h(), p.h_plus_big_h());
    let ln_abs_h = big_h.abs().ln();
    let terms = (0..m).map(|k| {
        let kf = k as f64;
        let nu = mu - b - kf;
        let ln_coef = (2.0 - (mu + 3.0 * kf - b) / 2.0) * LN_2 + 0.5 * (mu + b - kf) * mu.ln()
            + ln_gamma_unchecked(mu + kf)
            - ln_gamma_unchecked(mu)
            + mu * h.ln()
            + (mu - kf + b - 1.0) * x.ln()
            - ln_gamma_unchecked(kf + 1.0)
            - ln_gamma_unchecked(mu - kf)
            - ln_gamma_unchecked(b)
            - (mu + kf) * ln_abs_h
            - (b + 0.5 * (mu - kf - b)) * omega.ln();
        let sign = sign_pow(big_h < 0.0, m + k);
        let minus = ln_bessel_k_unchecked(nu, 2.0 * x * (2.0 * mu * hm / omega).sqrt()) - 0.5 * nu * hm.ln();
        let plus = ln_bessel_k_unchecked(nu, 2.0 * x * (2.0 * mu * hp / omega).sqrt()) - 0.5 * nu * hp.ln();
        [sign * alt(k) * (ln_coef + minus).exp(), sign * alt(m) * (ln_coef + plus).exp()]
    });
    let (density, ratio) = signed_sum(terms.flatten());
    finish("eta_mu_gamma_pdf_integer", density, s, ratio)
}

pub(crate) fn lambda_integer(x: f64, spec: &CompositeSpec) -> Result<ExpansionValue> {
    let spec = spec.with_method(Method::ClosedFormIntegerMu)?;
    check_x("lambda_mu_gamma_pdf_integer", x)?;
    check_terms(&spec)?;
    let s = s_lambda_integer(&spec);
    if x == 0.0 {
        return Ok(ExpansionValue {
            density: spec.origin_value()?,
            s,
            diagnostic: 1.0,
        });
    }
    let MultipathParams::LambdaMu(p) = spec.multipath else {
        unreachable!("family checked by the caller")
    };
    let m = int_mu(&spec);
    let (mu, b, omega, lambda) = (spec.mu(), spec.shadow.b(), spec.shadow.omega(), p.lambda());
    let one_minus_sq = (1.0 - lambda) * (1.0 + lambda);
    let terms = (0..m).map(|k| {
        let kf = k as f64;
        let nu = mu - b - kf;
        let ln_coef = 2.0 * LN_2 + 0.5 * (mu + b - kf) * mu.ln() + ln_gamma_unchecked(mu + kf)
            - ln_gamma_unchecked(mu)
            + 0.5 * (mu + kf - b) * one_minus_sq.ln()
            + (mu - kf + b - 1.0) * x.ln()
            - 0.5 * (mu + 3.0 * kf - b) * LN_2
            - ln_gamma_unchecked(kf + 1.0)
            - ln_gamma_unchecked(mu - kf)
            - ln_gamma_unchecked(b)
            - (mu + kf) * lambda.ln()
            - 0.5 * (mu - kf - b) * omega.ln()
            - b * omega.ln();
        let arg_minus = 2.0 * x * (2.0 * mu * (1.0 - lambda) / (omega * one_minus_sq)).sqrt();
        let arg_plus = 2.0 * x * (2.0 * mu * (1.0 + lambda) / (omega * one_minus_sq)).sqrt();
        let minus = ln_bessel_k_unchecked(nu, arg_minus) - 0.5 * nu * (1.0 - lambda).ln();
        let plus = ln_bessel_k_unchecked(nu, arg_plus) - 0.5 * nu * (1.0 + lambda).ln();
        [alt(k) * (ln_coef + minus).exp(), alt(m) * (ln_coef + plus).exp()]
    });
    let (density, ratio) = signed_sum(terms.flatten());
    finish("lambda_mu_gamma_pdf_integer", density, s, ratio)
}

/// Common front of the truncated series: `(ln Γ(n+k) - ln k! - ln Γ(n-k+1)
/// + (1-2k) ln n - ln Γ(μ+k+1/2))`.
fn ln_series_weight(n: u32, k: u32, mu: f64) -> f64 {
    let (nf, kf) = (n as f64, k as f64);
    ln_gamma_unchecked(nf + kf) - ln_gamma_unchecked(kf + 1.0) - ln_gamma_unchecked(nf - kf + 1.0)
        + (1.0 - 2.0 * kf) * nf.ln()
        - ln_gamma_unchecked(mu + kf + 0.5)
}

/// Sums positive series terms; reports `|last| / sum`.
fn series_sum(terms: impl Iterator<Item = f64>) -> (f64, f64) {
    let mut sum = 0.0;
    let mut last = 0.0;
    for t in terms {
        sum += t;
        last = t;
    }
    let ratio = if sum != 0.0 { (last / sum).abs() } else { 0.0 };
    (sum, ratio)
}

pub(crate) fn eta_series(x: f64, spec: &CompositeSpec) -> Result<ExpansionValue> {
    let spec = spec.with_method(Method::SeriesRealMu)?;
    check_x("eta_mu_gamma_pdf_series", x)?;
    check_terms(&spec)?;
    let s = s_eta_series(&spec);
    if x == 0.0 {
        return Ok(ExpansionValue {
            density: spec.origin_value()?,
            s,
            diagnostic: 0.0,
        });
    }
    let n = spec.series_order.get();
    let (mu, b, omega) = (spec.mu(), spec.shadow.b(), spec.shadow.omega());
    let (h, big_h) = (spec.multipath.h(), spec.multipath.big_h());
    let arg = 2.0 * x * (2.0 * mu * h / omega).sqrt();
    let upper = if big_h == 0.0 { 0 } else { n };
    let terms = (0..=upper).map(|k| {
        let kf = k as f64;
        let ln_h_pow = if k == 0 { 0.0 } else { 2.0 * kf * big_h.abs().ln() };
        let ln_term = (0.5 * b - mu - kf + 3.0) * LN_2 + 0.5 * PI.ln() + (0.5 * b + mu + kf) * mu.ln() + ln_h_pow
            + ln_series_weight(n, k, mu)
            - ln_gamma_unchecked(mu)
            + (2.0 * (mu + kf) + b - 1.0) * x.ln()
            - (kf - 0.5 * b) * h.ln()
            - ln_gamma_unchecked(b)
            - (0.5 * b + mu + kf) * omega.ln()
            + ln_bessel_k_unchecked(b - 2.0 * (mu + kf), arg);
        ln_term.exp()
    });
    let (density, ratio) = series_sum(terms);
    finish("eta_mu_gamma_pdf_series", density, s, ratio)
}

pub(crate) fn lambda_series(x: f64, spec: &CompositeSpec) -> Result<ExpansionValue> {
    let spec = spec.with_method(Method::SeriesRealMu)?;
    check_x("lambda_mu_gamma_pdf_series", x)?;
    check_terms(&spec)?;
    let s = s_lambda_series(&spec);
    if x == 0.0 {
        return Ok(ExpansionValue {
            density: spec.origin_value()?,
            s,
            diagnostic: 0.0,
        });
    }
    let MultipathParams::LambdaMu(p) = spec.multipath else {
        unreachable!("family checked by the caller")
    };
    let n = spec.series_order.get();
    let (mu, b, omega, lambda) = (spec.mu(), spec.shadow.b(), spec.shadow.omega(), p.lambda());
    let one_minus_sq = (1.0 - lambda) * (1.0 + lambda);
    let arg = 2.0 * x * (2.0 * mu / (omega * one_minus_sq)).sqrt();
    let terms = (0..=n).map(|k| {
        let kf = k as f64;
        let ln_term = (0.5 * b - mu - kf + 3.0) * LN_2 + 0.5 * PI.ln() + (0.5 * b + mu + kf) * mu.ln()
            + 2.0 * kf * lambda.ln()
            + ln_series_weight(n, k, mu)
            - ln_gamma_unchecked(mu)
            + (2.0 * (mu + kf) + b - 1.0) * x.ln()
            - (kf + 0.5 * b) * one_minus_sq.ln()
            - ln_gamma_unchecked(b)
            - (0.5 * b + mu + kf) * omega.ln()
            + ln_bessel_k_unchecked(b - 2.0 * (mu + kf), arg);
        ln_term.exp()
    });
    let (density, ratio) = series_sum(terms);
    finish("lambda_mu_gamma_pdf_series", density, s, ratio)
}

fn s_eta_integer(spec: &CompositeSpec) -> f64 {
    let m = int_mu(spec);
    let (mu, b) = (spec.mu(), spec.shadow.b());
    let p = spec.multipath;
    let (h, big_h) = (p.h(), p.big_h());
    let (hm, hp) = (p.h_minus_big_h(), p.h_plus_big_h());
    let sum: f64 = (0..m)
        .map(|k| {
            let kf = k as f64;
            let ln_coef = ln_gamma_unchecked(mu + kf) - ln_gamma_unchecked(mu) + mu * h.ln()
                - ln_gamma_unchecked(kf + 1.0)
                - (mu + kf) * (2.0 * big_h.abs()).ln();
            let sign = sign_pow(big_h < 0.0, m + k);
            let e = mu - b - kf;
            sign * (alt(k) * (ln_coef - e * hm.ln()).exp() + alt(m) * (ln_coef - e * hp.ln()).exp())
        })
        .sum();
    1.0 - sum
}

fn s_lambda_integer(spec: &CompositeSpec) -> f64 {
    let MultipathParams::LambdaMu(p) = spec.multipath else {
        unreachable!("family checked by the caller")
    };
    let m = int_mu(spec);
    let (mu, b, lambda) = (spec.mu(), spec.shadow.b(), p.lambda());
    let a = mu - b;
    let one_minus_sq = (1.0 - lambda) * (1.0 + lambda);
    let sum: f64 = (0..m)
        .map(|k| {
            let kf = k as f64;
            let ln_coef = ln_gamma_unchecked(mu + kf) - ln_gamma_unchecked(mu) + (kf + 1.0) * one_minus_sq.ln()
                - ln_gamma_unchecked(kf + 1.0)
                - (mu + kf) * (2.0 * lambda).ln();
            alt(k) * (ln_coef - (a - kf) * (1.0 - lambda).ln()).exp()
                + alt(m) * (ln_coef - (a - kf) * (1.0 + lambda).ln()).exp()
        })
        .sum();
    1.0 - sum
}

fn s_eta_series(spec: &CompositeSpec) -> f64 {
    let n = spec.series_order.get();
    let mu = spec.mu();
    let (h, big_h) = (spec.multipath.h(), spec.multipath.big_h());
    let upper = if big_h == 0.0 { 0 } else { n };
    let sum: f64 = (0..=upper)
        .map(|k| {
            let kf = k as f64;
            let ln_h_pow = if k == 0 { 0.0 } else { 2.0 * kf * big_h.abs().ln() };
            (0.5 * PI.ln() + ln_h_pow + ln_series_weight(n, k, mu) + ln_gamma_unchecked(2.0 * mu + 2.0 * kf)
                + (1.0 - 2.0 * (mu + kf)) * LN_2
                - ln_gamma_unchecked(mu)
                - (mu + 2.0 * kf) * h.ln())
            .exp()
        })
        .sum();
    1.0 - sum
}

fn s_lambda_series(spec: &CompositeSpec) -> f64 {
    let MultipathParams::LambdaMu(p) = spec.multipath else {
        unreachable!("family checked by the caller")
    };
    let n = spec.series_order.get();
    let (mu, lambda) = (spec.mu(), p.lambda());
    let one_minus_sq = (1.0 - lambda) * (1.0 + lambda);
    let sum: f64 = (0..=n)
        .map(|k| {
            let kf = k as f64;
            (LN_2 + 0.5 * PI.ln() + ln_series_weight(n, k, mu) + 2.0 * kf * lambda.ln() + mu * one_minus_sq.ln()
                + ln_gamma_unchecked(2.0 * mu + 2.0 * kf)
                - 2.0 * (mu + kf) * LN_2
                - ln_gamma_unchecked(mu))
            .exp()
        })
        .sum();
    1.0 - sum
}

/// The reported normalization scalar `S` for the spec's family and method.
///
/// It depends on `(η or λ, μ, b)` and the series order only; `Ω` and `x`
/// never enter. The quadrature path has no atom, so `S = 0` there.
pub fn normalization_s(spec: &CompositeSpec) -> Result<f64> {
    spec.with_method(spec.method)?;
    check_terms(spec)?;
    Ok(match (spec.method, spec.multipath) {
        (Method::Quadrature, _) => 0.0,
        (Method::ClosedFormIntegerMu, MultipathParams::EtaMu(_)) => s_eta_integer(spec),
        (Method::ClosedFormIntegerMu, MultipathParams::LambdaMu(_)) => s_lambda_integer(spec),
        (Method::SeriesRealMu, MultipathParams::EtaMu(_)) => s_eta_series(spec),
        (Method::SeriesRealMu, MultipathParams::LambdaMu(_)) => s_lambda_series(spec),
    })
}

/// η-μ/gamma closed form for integer μ: `(continuous part, S)`.
///
/// Needs the rms mixing and `η ≠ 1`. The continuous part is returned as
/// summed, without clamping.
pub fn eta_mu_gamma_pdf_integer(x: f64, spec: &CompositeSpec) -> Result<(f64, f64)> {
    require(spec, Method::ClosedFormIntegerMu, true, "eta_mu_gamma_pdf_integer")?;
    eta_integer(x, spec).map(|v| (v.density, v.s))
}

/// η-μ/gamma truncated series of the spec's order: `(continuous part, S)`.
pub fn eta_mu_gamma_pdf_series(x: f64, spec: &CompositeSpec) -> Result<(f64, f64)> {
    require(spec, Method::SeriesRealMu, true, "eta_mu_gamma_pdf_series")?;
    eta_series(x, spec).map(|v| (v.density, v.s))
}

/// λ-μ/gamma closed form for integer μ: `(continuous part, S)`.
pub fn lambda_mu_gamma_pdf_integer(x: f64, spec: &CompositeSpec) -> Result<(f64, f64)> {
    require(spec, Method::ClosedFormIntegerMu, false, "lambda_mu_gamma_pdf_integer")?;
    lambda_integer(x, spec).map(|v| (v.density, v.s))
}

/// λ-μ/gamma truncated series of the spec's order: `(continuous part, S)`.
pub fn lambda_mu_gamma_pdf_series(x: f64, spec: &CompositeSpec) -> Result<(f64, f64)> {
    require(spec, Method::SeriesRealMu, false, "lambda_mu_gamma_pdf_series")?;
    lambda_series(x, spec).map(|v| (v.density, v.s))
}

#[cfg(test)]
mod tests {
    use super::super::{eta_mu_gamma, lambda_mu_gamma, mixture_pdf, Mixing};
    use super::*;
    use crate::specfun::SeriesOrder;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn integer_closed_form_matches_mixture() {
        for eta in [0.2, 0.5, 5.0] {
            for mu in [1.0, 2.0, 3.0] {
                let spec = eta_mu_gamma(eta, mu, 1.2, 0.8, Mixing::RmsGamma).unwrap();
                for x in [0.3, 1.0, 2.0] {
                    let (d, _) = eta_mu_gamma_pdf_integer(x, &spec).unwrap();
                    let want = mixture_pdf(x, &spec).unwrap();
                    assert!(rel(d, want) < 1e-8, "η={eta} μ={mu} x={x}: {d} vs {want}");
                }
            }
        }
    }

    #[test]
    fn lambda_closed_form_matches_mixture() {
        let spec = lambda_mu_gamma(0.4, 2.0, 0.9, 1.3, Mixing::RmsGamma).unwrap();
        for x in [0.2, 0.9, 2.2] {
            let (d, _) = lambda_mu_gamma_pdf_integer(x, &spec).unwrap();
            assert!(rel(d, mixture_pdf(x, &spec).unwrap()) < 1e-8);
        }
    }

    #[test]
    fn printed_s_values() {
        // Same sums evaluated from the printed expressions in high precision.
        let expect = [(1.0, 1.2105763898541949), (2.0, -4.301275750098033), (3.0, 28.769837089615337)];
        for (mu, s) in expect {
            let spec = eta_mu_gamma(0.5, mu, 1.2, 0.8, Mixing::RmsGamma)
                .unwrap()
                .with_method(Method::ClosedFormIntegerMu)
                .unwrap();
            assert!(rel(normalization_s(&spec).unwrap(), s) < 1e-12, "μ={mu}");
        }
    }

    #[test]
    fn series_s_at_unit_eta() {
        // Only k = 0 survives at H = 0; μ = 1/2, h = 1 gives exactly zero.
        let spec = eta_mu_gamma(1.0, 0.5, 1.2, 0.8, Mixing::RmsGamma)
            .unwrap()
            .with_method(Method::SeriesRealMu)
            .unwrap();
        let s0 = normalization_s(&spec).unwrap();
        assert!(s0.abs() < 1e-13, "{s0:e}");
        let spec = spec.with_series_order(SeriesOrder::new(7).unwrap());
        assert!(normalization_s(&spec).unwrap().abs() < 1e-13);
    }

    #[test]
    fn s_independent_of_omega() {
        let a = lambda_mu_gamma(0.3, 2.0, 1.4, 0.5, Mixing::RmsGamma).unwrap();
        let b = lambda_mu_gamma(0.3, 2.0, 1.4, 7.0, Mixing::RmsGamma).unwrap();
        for m in [Method::ClosedFormIntegerMu, Method::SeriesRealMu] {
            let sa = normalization_s(&a.with_method(m).unwrap()).unwrap();
            let sb = normalization_s(&b.with_method(m).unwrap()).unwrap();
            assert_eq!(sa, sb);
        }
    }

    #[test]
    fn family_mismatch_rejected() {
        let spec = lambda_mu_gamma(0.3, 2.0, 1.4, 0.5, Mixing::RmsGamma).unwrap();
        assert!(matches!(eta_mu_gamma_pdf_integer(1.0, &spec), Err(Error::Unsupported(_))));
        let spec = eta_mu_gamma(0.3, 2.5, 1.4, 0.5, Mixing::RmsGamma).unwrap();
        assert!(matches!(eta_mu_gamma_pdf_integer(1.0, &spec), Err(Error::Unsupported(_))));
        assert!(lambda_mu_gamma_pdf_series(1.0, &spec).is_err());
    }
}
