//! Named parameter sets shared by the CLI, the validation suite and tests.

use super::{eta_mu_gamma, lambda_mu_gamma, CompositeSpec, Method, Mixing};

/// A labelled spec.
#[derive(Debug, Clone)]
pub struct Preset {
    pub name: String,
    pub spec: CompositeSpec,
}

fn eta(eta: f64, mu: f64, b: f64, omega: f64, mixing: Mixing) -> Preset {
    Preset {
        name: format!("eta={eta} mu={mu} b={b} omega={omega} {mixing}"),
        spec: eta_mu_gamma(eta, mu, b, omega, mixing).expect("preset parameters are valid"),
    }
}

fn lambda(lambda: f64, mu: f64, b: f64, omega: f64, mixing: Mixing) -> Preset {
    Preset {
        name: format!("lambda={lambda} mu={mu} b={b} omega={omega} {mixing}"),
        spec: lambda_mu_gamma(lambda, mu, b, omega, mixing).expect("preset parameters are valid"),
    }
}

fn with_method(p: Preset, method: Method) -> Preset {
    Preset {
        spec: p.spec.with_method(method).expect("preset supports the method"),
        name: p.name,
    }
}

/// Twelve quadrature specs covering both families and both mixings.
pub fn mixture_presets() -> Vec<Preset> {
    use Mixing::{MeanSquareGamma as Msq, RmsGamma as Rms};
    vec![
        eta(0.2, 0.5, 0.8, 0.8, Rms),
        eta(1.0, 1.0, 1.2, 1.5, Rms),
        eta(5.0, 2.5, 2.5, 0.8, Rms),
        eta(0.2, 2.5, 1.2, 1.5, Msq),
        eta(1.0, 0.5, 1.2, 0.8, Msq),
        eta(5.0, 1.0, 0.8, 1.5, Msq),
        lambda(0.3, 0.5, 1.2, 0.8, Rms),
        lambda(0.7, 1.0, 2.5, 1.5, Rms),
        lambda(0.3, 2.5, 0.8, 1.5, Rms),
        lambda(0.7, 0.5, 0.8, 0.8, Msq),
        lambda(0.3, 1.0, 2.5, 0.8, Msq),
        lambda(0.7, 2.5, 1.2, 1.5, Msq),
    ]
}

/// Integer-μ closed-form specs.
pub fn integer_presets() -> Vec<Preset> {
    use Mixing::RmsGamma as Rms;
    [
        eta(0.2, 1.0, 1.2, 0.8, Rms),
        eta(0.5, 2.0, 0.8, 1.5, Rms),
        eta(5.0, 3.0, 2.5, 0.8, Rms),
        lambda(0.3, 1.0, 2.5, 1.5, Rms),
        lambda(0.5, 2.0, 1.25, 1.5, Rms),
        lambda(0.7, 3.0, 0.8, 0.8, Rms),
    ]
    .into_iter()
    .map(|p| with_method(p, Method::ClosedFormIntegerMu))
    .collect()
}

/// Real-μ series specs at the default order.
pub fn series_presets() -> Vec<Preset> {
    use Mixing::RmsGamma as Rms;
    [
        eta(0.5, 0.6, 1.2, 0.8, Rms),
        eta(2.0, 1.5, 1.2, 0.8, Rms),
        eta(1.0, 0.6, 1.0, 1.0, Rms),
        lambda(0.5, 0.6, 1.25, 1.5, Rms),
        lambda(0.5, 1.5, 1.25, 1.5, Rms),
        lambda(0.3, 2.5, 1.0, 1.0, Rms),
    ]
    .into_iter()
    .map(|p| with_method(p, Method::SeriesRealMu))
    .collect()
}

/// Specs used for the Monte-Carlo checks.
pub fn sampling_presets() -> Vec<Preset> {
    use Mixing::{MeanSquareGamma as Msq, RmsGamma as Rms};
    vec![
        eta(0.5, 0.6, 1.2, 0.8, Rms),
        eta(5.0, 2.5, 2.5, 0.8, Rms),
        eta(0.2, 2.5, 1.2, 1.5, Msq),
        lambda(0.5, 1.5, 1.25, 1.5, Rms),
        lambda(0.3, 1.0, 2.5, 0.8, Msq),
        lambda(0.7, 0.5, 0.8, 0.8, Msq),
    ]
}

/// Every shipped preset.
pub fn all_presets() -> Vec<Preset> {
    let mut v = mixture_presets();
    v.extend(integer_presets());
    v.extend(series_presets());
    v
}
