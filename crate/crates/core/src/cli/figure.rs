//! Parameter sweeps behind the four published density plots.
//!
//! Where the body text and the caption of a plot disagree, both variants are
//! emitted under their own label.

use crate::composite::{eta_mu_gamma, lambda_mu_gamma, CompositeSpec, Method, Mixing};
use crate::error::{Error, Result};
use crate::specfun::SeriesOrder;

pub const ETA_SWEEP: [f64; 5] = [0.1, 0.5, 1.0, 2.0, 10.0];
pub const MU_SWEEP: [f64; 4] = [0.5, 1.0, 1.5, 2.5];
pub const LAMBDA_SWEEP: [f64; 5] = [0.1, 0.3, 0.5, 0.7, 0.9];

/// Right edge of the default figure grid in units of `√Ω`.
pub const GRID_SPAN: f64 = 12.0;
pub const GRID_POINTS: usize = 501;

/// The swept parameter of a figure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    Eta,
    Mu,
    Lambda,
}

impl Axis {
    pub fn name(self) -> &'static str {
        match self {
            Axis::Eta => "eta",
            Axis::Mu => "mu",
            Axis::Lambda => "lambda",
        }
    }
}

/// One family of curves: fixed parameters plus the swept axis.
#[derive(Debug, Clone, PartialEq)]
pub struct Variant {
    /// `caption`, `text`, or `both` when the two sources agree.
    pub source: &'static str,
    pub family: Family,
    pub axis: Axis,
    pub values: Vec<f64>,
    /// Fixed η or λ (unused when it is the swept axis).
    pub shape: f64,
    /// Fixed μ (unused when it is the swept axis).
    pub mu: f64,
    pub b: f64,
    pub omega: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    EtaMu,
    LambdaMu,
}

impl Variant {
    /// Spec of the curve at sweep value `v`.
    pub fn spec(&self, v: f64, mixing: Mixing, method: Method, order: SeriesOrder) -> Result<CompositeSpec> {
        let (shape, mu) = match self.axis {
            Axis::Mu => (self.shape, v),
            _ => (v, self.mu),
        };
        let spec = match self.family {
            Family::EtaMu => eta_mu_gamma(shape, mu, self.b, self.omega, mixing)?,
            Family::LambdaMu => lambda_mu_gamma(shape, mu, self.b, self.omega, mixing)?,
        };
        spec.with_method(method).map(|s| s.with_series_order(order))
    }

    pub fn title(&self) -> String {
        let (family, shape) = match self.family {
            Family::EtaMu => ("eta-mu/gamma", "eta"),
            Family::LambdaMu => ("lambda-mu/gamma", "lambda"),
        };
        let fixed = match self.axis {
            Axis::Mu => format!("{shape}={}", self.shape),
            _ => format!("mu={}", self.mu),
        };
        format!("{family}, b={}, omega={}, {fixed} ({})", self.b, self.omega, self.source)
    }
}

/// Sweeps for figure `id` with the default axis values.
pub fn variants(id: u8) -> Result<Vec<Variant>> {
    let v = |source, family, axis: Axis, shape, mu, b, omega| Variant {
        source,
        family,
        axis,
        values: match axis {
            Axis::Eta => ETA_SWEEP.to_vec(),
            Axis::Mu => MU_SWEEP.to_vec(),
            Axis::Lambda => LAMBDA_SWEEP.to_vec(),
        },
        shape,
        mu,
        b,
        omega,
    };
    use Family::{EtaMu, LambdaMu};
    Ok(match id {
        1 => vec![v("both", EtaMu, Axis::Eta, 0.0, 0.6, 1.2, 0.8)],
        2 => vec![
            v("caption", EtaMu, Axis::Mu, 10.0, 0.0, 1.2, 0.8),
            v("text", EtaMu, Axis::Mu, 0.6, 0.0, 1.2, 0.8),
        ],
        3 => vec![v("both", LambdaMu, Axis::Lambda, 0.0, 0.6, 1.0, 1.0)],
        4 => vec![
            v("text", LambdaMu, Axis::Mu, 0.5, 0.0, 1.25, 1.5),
            v("caption", LambdaMu, Axis::Mu, 0.5, 0.0, 1.0, 1.0),
        ],
        _ => return Err(Error::InvalidParameter(format!("figure must be 1, 2, 3 or 4, got {id}"))),
    })
}

/// File stem of one curve, e.g. `fig2_caption_mu1.5`.
pub fn curve_stem(id: u8, variant: &Variant, value: f64) -> String {
    format!("fig{id}_{}_{}{value}", variant.source, variant.axis.name())
}

/// gnuplot script plotting every curve of the figure, one panel per
/// variant; paths are relative to the script's directory.
pub fn gnuplot_script(id: u8, variants: &[Variant]) -> String {
    let mut s = String::new();
    s.push_str("set datafile separator ','\n");
    s.push_str("set key autotitle columnhead\n");
    s.push_str("set xlabel 'x'\nset ylabel 'p_X(x)'\n");
    if variants.len() > 1 {
        s.push_str(&format!("set multiplot layout 1,{}\n", variants.len()));
    }
    for var in variants {
        s.push_str(&format!("set title \"Figure {id}: {}\"\n", var.title()));
        let curves: Vec<String> = var
            .values
            .iter()
            .map(|&v| {
                format!(
                    "'{}.csv' using 1:2 with lines title '{}={v}'",
                    curve_stem(id, var, v),
                    var.axis.name()
                )
            })
            .collect();
        s.push_str(&format!("plot {}\n", curves.join(", \\\n     ")));
    }
    if variants.len() > 1 {
        s.push_str("unset multiplot\n");
    }
    s
}
