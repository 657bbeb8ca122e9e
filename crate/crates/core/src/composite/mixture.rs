use super::{CompositeSpec, Mixing};
use crate::error::{Error, Result};
use crate::quadrature::{integrate_semi_infinite, Tolerance};
use std::f64::consts::LN_2;

/// Working tolerance; tighter than the acceptance bound below.
const WORK_TOL: Tolerance = Tolerance::new(1e-15, 1e-11);
const ACCEPT_ABS: f64 = 1e-10;
const ACCEPT_REL: f64 = 1e-8;

/// `ln[p(x | y) p_Y(y)]` for `x, y > 0`.
fn ln_integrand(x: f64, y: f64, spec: &CompositeSpec) -> f64 {
    let r_hat = match spec.mixing {
        Mixing::MeanSquareGamma => y,
        Mixing::RmsGamma => y.sqrt(),
    };
    let s = x / r_hat;
    if !(s * s).is_finite() || !y.is_finite() {
        // The conditional vanishes faster than any power of y at both ends.
        return f64::NEG_INFINITY;
    }
    LN_2 - r_hat.ln() + spec.multipath.ln_power_pdf_times(s * s, 0.5) + spec.shadow.ln_pdf(y)
}

/// Location of the integrand's peak in `y`, found on a log grid and then
/// refined by golden-section search in `ln y`.
fn peak(f: impl Fn(f64) -> f64, centre: f64) -> Option<f64> {
    let (lo, hi, step) = (centre.ln() - 50.0, centre.ln() + 8.0, 0.25);
    let mut best = (f64::NEG_INFINITY, lo);
    let mut t = lo;
    while t <= hi {
        let v = f(t.exp());
        if v > best.0 {
            best = (v, t);
        }
        t += step;
    }
    if !best.0.is_finite() {
        return None;
    }
    let g = |t: f64| f(t.exp());
    let invphi = 0.5 * (5f64.sqrt() - 1.0);
    let (mut a, mut b) = (best.1 - step, best.1 + step);
    let mut c = b - invphi * (b - a);
    let mut d = a + invphi * (b - a);
    let (mut fc, mut fd) = (g(c), g(d));
    for _ in 0..40 {
        if fc > fd {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = g(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = g(d);
        }
    }
    Some((0.5 * (a + b)).exp())
}

/// Mixture density and its absolute quadrature error estimate.
pub fn mixture_pdf_with_error(x: f64, spec: &CompositeSpec) -> Result<(f64, f64)> {
    if !(x >= 0.0) || !x.is_finite() {
        return Err(Error::domain("mixture_pdf", format!("x = {x} must be non-negative")));
    }
    if x == 0.0 {
        return Ok((spec.origin_value()?, 0.0));
    }
    let ln_f = |y: f64| ln_integrand(x, y, spec);
    let centre = match spec.mixing {
        Mixing::MeanSquareGamma => x.max(spec.shadow.omega()),
        Mixing::RmsGamma => (x * x).max(spec.shadow.omega()),
    };
    let Some(mode) = peak(ln_f, centre) else {
        // The integrand underflows everywhere.
        return Ok((0.0, 0.0));
    };
    let est = integrate_semi_infinite(|y| ln_f(y).exp(), mode, WORK_TOL);
    if est.value.is_finite() && est.error <= ACCEPT_ABS.max(ACCEPT_REL * est.value.abs()) {
        Ok((est.value, est.error))
    } else {
        Err(Error::Quadrature {
            value: est.value,
            error: est.error,
            evaluations: est.evaluations,
        })
    }
}

/// `∫₀^∞ p(x | y) p_Y(y) dy` by adaptive quadrature.
///
/// The conditional is the multipath envelope law with rms value `y`
/// ([`Mixing::MeanSquareGamma`]) or `√y` ([`Mixing::RmsGamma`]). The result
/// meets an absolute error of `1e-10` or a relative error of `1e-8`,
/// whichever is looser; otherwise [`Error::Quadrature`] is returned.
pub fn mixture_pdf(x: f64, spec: &CompositeSpec) -> Result<f64> {
    mixture_pdf_with_error(x, spec).map(|(v, _)| v)
}
