//! η-μ/gamma and λ-μ/gamma composite envelope densities.
//!
//! Three evaluation paths exist:
//!
//! * [`mixture_pdf`] integrates the multipath conditional against the gamma
//!   law numerically. It is the only path normalized by construction.
//! * The integer-μ closed forms ([`eta_mu_gamma_pdf_integer`],
//!   [`lambda_mu_gamma_pdf_integer`]) are finite sums of `K_ν` terms.
//! * The real-μ series ([`eta_mu_gamma_pdf_series`],
//!   [`lambda_mu_gamma_pdf_series`]) replace `I_ν` by its polynomial
//!   approximation of order `n`.
//!
//! The closed forms and series return the continuous part together with the
//! scalar `S` from [`normalization_s`]. `S` is reported, never added to a
//! density.
//!
//! Mixing variants, with `Y` the gamma variate:
//!
//! | variant | conditional rms | kernel in the integrand |
//! |---|---|---|
//! | [`Mixing::MeanSquareGamma`] | `r̂ = Y` | `x²/y²` |
//! | [`Mixing::RmsGamma`] | `r̂² = Y` | `x²/y` |
//!
//! The closed forms and series are derived from the `x²/y` kernel only.

mod expansions;
mod mixture;
pub mod presets;

pub use expansions::{
    eta_mu_gamma_pdf_integer, eta_mu_gamma_pdf_series, lambda_mu_gamma_pdf_integer, lambda_mu_gamma_pdf_series,
    normalization_s,
};
pub use mixture::{mixture_pdf, mixture_pdf_with_error};

use crate::base_models::{EtaMuParams, LambdaMuParams, MultipathParams, ShadowParams};
use crate::error::{Error, Result};
use crate::specfun::SeriesOrder;
use rayon::prelude::*;
use std::fmt;

/// Which quantity of the envelope carries the gamma law.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mixing {
    /// Conditional rms value `r̂ = Y`.
    MeanSquareGamma,
    /// Conditional mean square `r̂² = Y`.
    RmsGamma,
}

impl fmt::Display for Mixing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mixing::MeanSquareGamma => "msq",
            Mixing::RmsGamma => "rms",
        })
    }
}

/// Evaluation path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Quadrature,
    ClosedFormIntegerMu,
    SeriesRealMu,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Quadrature => "quad",
            Method::ClosedFormIntegerMu => "closed",
            Method::SeriesRealMu => "series",
        })
    }
}

/// A fully specified composite model.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CompositeSpec {
    multipath: MultipathParams,
    shadow: ShadowParams,
    mixing: Mixing,
    method: Method,
    series_order: SeriesOrder,
}

impl CompositeSpec {
    /// Builder with `RmsGamma` mixing, quadrature and the default series order.
    pub fn builder(multipath: impl Into<MultipathParams>, shadow: ShadowParams) -> CompositeSpecBuilder {
        CompositeSpecBuilder {
            spec: CompositeSpec {
                multipath: multipath.into(),
                shadow,
                mixing: Mixing::RmsGamma,
                method: Method::Quadrature,
                series_order: SeriesOrder::DEFAULT,
            },
        }
    }

    pub fn multipath(&self) -> &MultipathParams {
        &self.multipath
    }

    pub fn shadow(&self) -> &ShadowParams {
        &self.shadow
    }

    pub fn mixing(&self) -> Mixing {
        self.mixing
    }

    pub fn method(&self) -> Method {
        self.method
    }

    pub fn series_order(&self) -> SeriesOrder {
        self.series_order
    }

    pub fn mu(&self) -> f64 {
        self.multipath.mu()
    }

    /// Same model evaluated along another path.
    pub fn with_method(&self, method: Method) -> Result<CompositeSpec> {
        let mut spec = *self;
        spec.method = method;
        spec.check()?;
        Ok(spec)
    }

    /// Same model with another series order.
    pub fn with_series_order(&self, order: SeriesOrder) -> CompositeSpec {
        let mut spec = *self;
        spec.series_order = order;
        spec
    }

    /// The λ-μ model rewritten in η-μ form, `η = (1-λ)/(1+λ)`; η-μ specs are
    /// returned unchanged.
    pub fn as_eta_mu(&self) -> CompositeSpec {
        let mut spec = *self;
        if let MultipathParams::LambdaMu(p) = self.multipath {
            spec.multipath = MultipathParams::EtaMu(EtaMuParams::from_lambda(&p));
        }
        spec
    }

    fn check(&self) -> Result<()> {
        match self.method {
            Method::Quadrature => Ok(()),
            Method::ClosedFormIntegerMu => {
                self.require_rms("closed form")?;
                let mu = self.mu();
                if mu.fract() != 0.0 || mu < 1.0 {
                    return Err(Error::Unsupported(format!("closed form needs integer mu >= 1, got {mu}")));
                }
                if self.multipath.big_h() == 0.0 {
                    return Err(Error::Unsupported("closed form is undefined at H = 0 (eta = 1)".into()));
                }
                if mu > 170.0 {
                    return Err(Error::Unsupported(format!("closed form supports mu <= 170, got {mu}")));
                }
                Ok(())
            }
            Method::SeriesRealMu => self.require_rms("series"),
        }
    }

    fn require_rms(&self, what: &str) -> Result<()> {
        if self.mixing == Mixing::RmsGamma {
            Ok(())
        } else {
            Err(Error::Unsupported(format!("{what} is derived for the rms mixing only")))
        }
    }

    /// Exponent `p` of the small-`x` behaviour `x^p` of the density.
    pub fn origin_exponent(&self) -> f64 {
        let (mu, b) = (self.mu(), self.shadow.b());
        match self.mixing {
            Mixing::MeanSquareGamma => (4.0 * mu).min(b) - 1.0,
            Mixing::RmsGamma => (4.0 * mu).min(2.0 * b) - 1.0,
        }
    }

    /// Density at `x = 0`: zero when the leading exponent is positive.
    pub(crate) fn origin_value(&self) -> Result<f64> {
        let p = self.origin_exponent();
        if p > 0.0 {
            Ok(0.0)
        } else {
            Err(Error::domain(
                "composite density",
                format!("density at x = 0 is not zero (leading exponent {p})"),
            ))
        }
    }

    /// Short human-readable identity used in file headers and reports.
    pub fn label(&self) -> String {
        let family = match self.multipath {
            MultipathParams::EtaMu(p) => format!("eta-mu-gamma eta={} mu={}", p.eta(), p.mu()),
            MultipathParams::LambdaMu(p) => format!("lambda-mu-gamma lambda={} mu={}", p.lambda(), p.mu()),
        };
        let mut s = format!(
            "{family} b={} omega={} mixing={} method={}",
            self.shadow.b(),
            self.shadow.omega(),
            self.mixing,
            self.method
        );
        if self.method == Method::SeriesRealMu {
            s.push_str(&format!(" n={}", self.series_order));
        }
        s
    }
}

/// Builder for [`CompositeSpec`]; `build` checks the method's requirements.
#[derive(Debug, Clone, Copy)]
pub struct CompositeSpecBuilder {
    spec: CompositeSpec,
}

impl CompositeSpecBuilder {
    pub fn mixing(mut self, mixing: Mixing) -> Self {
        self.spec.mixing = mixing;
        self
    }

    pub fn method(mut self, method: Method) -> Self {
        self.spec.method = method;
        self
    }

    pub fn series_order(mut self, order: SeriesOrder) -> Self {
        self.spec.series_order = order;
        self
    }

    pub fn build(self) -> Result<CompositeSpec> {
        self.spec.check()?;
        Ok(self.spec)
    }
}

/// Convenience constructor for an η-μ/gamma spec.
pub fn eta_mu_gamma(eta: f64, mu: f64, b: f64, omega: f64, mixing: Mixing) -> Result<CompositeSpec> {
    CompositeSpec::builder(EtaMuParams::new(eta, mu)?, ShadowParams::new(b, omega)?)
        .mixing(mixing)
        .build()
}

/// Convenience constructor for a λ-μ/gamma spec.
pub fn lambda_mu_gamma(lambda: f64, mu: f64, b: f64, omega: f64, mixing: Mixing) -> Result<CompositeSpec> {
    CompositeSpec::builder(LambdaMuParams::new(lambda, mu)?, ShadowParams::new(b, omega)?)
        .mixing(mixing)
        .build()
}

/// One point of a closed-form or series evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExpansionValue {
    /// Continuous part, unclamped.
    pub density: f64,
    /// The reported normalization scalar.
    pub s: f64,
    /// Closed form: `Σ|terms| / |Σ terms|`. Series: `|last term| / |sum|`.
    pub diagnostic: f64,
}

/// Per-grid diagnostics of a [`PdfEvaluation`].
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Diagnostics {
    /// Largest quadrature error estimate (quadrature path).
    pub max_quadrature_error: f64,
    /// Largest cancellation ratio (closed form) or truncation ratio (series).
    pub max_term_ratio: f64,
    /// Series whose last term exceeds `1e-8` of the sum somewhere on the grid.
    pub truncation_unreliable: bool,
    /// Grid points where a negative continuous part was clamped to zero.
    pub clamped_points: usize,
}

impl Diagnostics {
    /// The single figure reported alongside a table.
    pub fn headline(&self, method: Method) -> f64 {
        match method {
            Method::Quadrature => self.max_quadrature_error,
            _ => self.max_term_ratio,
        }
    }
}

/// Densities on a grid with the reported `S` and diagnostics.
#[derive(Debug, Clone, PartialEq)]
pub struct PdfEvaluation {
    pub x_grid: Vec<f64>,
    pub density: Vec<f64>,
    pub atom_weight_s: f64,
    pub method_used: Method,
    pub diagnostics: Diagnostics,
}

/// Truncation ratio above which a series result is flagged.
pub const TRUNCATION_FLAG: f64 = 1e-8;

/// Continuous part at one point along the spec's own method, unclamped.
pub fn pdf_point(x: f64, spec: &CompositeSpec) -> Result<ExpansionValue> {
    match (spec.method, spec.multipath) {
        (Method::Quadrature, _) => {
            let (density, error) = mixture_pdf_with_error(x, spec)?;
            Ok(ExpansionValue {
                density,
                s: 0.0,
                diagnostic: error,
            })
        }
        (Method::ClosedFormIntegerMu, MultipathParams::EtaMu(_)) => expansions::eta_integer(x, spec),
        (Method::ClosedFormIntegerMu, MultipathParams::LambdaMu(_)) => expansions::lambda_integer(x, spec),
        (Method::SeriesRealMu, MultipathParams::EtaMu(_)) => expansions::eta_series(x, spec),
        (Method::SeriesRealMu, MultipathParams::LambdaMu(_)) => expansions::lambda_series(x, spec),
    }
}

/// Evaluates the spec on `grid` in parallel.
pub fn evaluate(spec: &CompositeSpec, grid: &[f64]) -> Result<PdfEvaluation> {
    spec.check()?;
    let points: Vec<ExpansionValue> = grid.par_iter().map(|&x| pdf_point(x, spec)).collect::<Result<_>>()?;
    let mut diagnostics = Diagnostics::default();
    let mut density = Vec::with_capacity(points.len());
    for p in &points {
        match spec.method {
            Method::Quadrature => diagnostics.max_quadrature_error = diagnostics.max_quadrature_error.max(p.diagnostic),
            _ => diagnostics.max_term_ratio = diagnostics.max_term_ratio.max(p.diagnostic),
        }
        if p.density < 0.0 {
            diagnostics.clamped_points += 1;
            density.push(0.0);
        } else {
            density.push(p.density);
        }
    }
    diagnostics.truncation_unreliable =
        spec.method == Method::SeriesRealMu && diagnostics.max_term_ratio > TRUNCATION_FLAG;
    Ok(PdfEvaluation {
        x_grid: grid.to_vec(),
        density,
        atom_weight_s: normalization_s(spec)?,
        method_used: spec.method,
        diagnostics,
    })
}

/// `points` equally spaced values from `min` to `max` inclusive.
pub fn linear_grid(min: f64, max: f64, points: usize) -> Result<Vec<f64>> {
    if points < 2 || !(max > min) || !(min >= 0.0) || !max.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "grid needs points >= 2 and max > min >= 0, got {min}:{max}:{points}"
        )));
    }
    let step = (max - min) / (points - 1) as f64;
    Ok((0..points)
        .map(|i| if i + 1 == points { max } else { min + step * i as f64 })
        .collect())
}
