//! The self-check suite behind `validate`.
//!
//! Every check reports a measured figure against its bound. `INFO` rows are
//! listed but never fail the run.

use super::figure::{ETA_SWEEP, MU_SWEEP};
use crate::base_models::{gamma_pdf, EtaMuParams, LambdaMuParams, MultipathParams, ShadowParams};
use crate::composite::presets::{all_presets, integer_presets, mixture_presets, sampling_presets, series_presets, Preset};
use crate::composite::{
    eta_mu_gamma, lambda_mu_gamma, mixture_pdf, normalization_s, pdf_point, CompositeSpec, Method, Mixing,
};
use crate::error::Result;
use crate::oracle::reference::{
    gamma_mixture_quadrature, nakagami_gamma_pdf, pre_identity_integer, pre_identity_series, rayleigh_gamma_pdf,
};
use crate::oracle::{chi_square_gof, sample_composite, sample_gamma, sample_multipath_power};
use crate::quadrature::{integrate_semi_infinite, Tolerance};
use crate::specfun::{
    bessel_i, bessel_i_half_integer, bessel_i_poly, bessel_k, gamma_fn, gamma_mixture_integral, SeriesOrder,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::fmt;
use std::time::{Duration, Instant};

/// `quick` trims grids and sample counts; `full` runs everything.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Level {
    Quick,
    Full,
}

impl Level {
    fn pick<T>(self, quick: T, full: T) -> T {
        match self {
            Level::Quick => quick,
            Level::Full => full,
        }
    }
}

/// Deliberate faults for exercising the failure path.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Faults {
    /// Added to `h` inside the `H/h` identity check.
    pub perturb_h: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Bound {
    AtMost(f64),
    AtLeast(f64),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub module: &'static str,
    pub name: String,
    pub measured: f64,
    pub bound: Bound,
    /// `false` for report-only rows.
    pub asserted: bool,
    pub note: String,
}

impl Check {
    /// Whether the measured figure meets the bound; NaN never does.
    pub fn within_bound(&self) -> bool {
        match self.bound {
            Bound::AtMost(t) => self.measured <= t,
            Bound::AtLeast(t) => self.measured >= t,
        }
    }

    pub fn passed(&self) -> bool {
        !self.asserted || self.within_bound()
    }
}

/// `S` beside the mass the continuous part is missing.
#[derive(Debug, Clone, PartialEq)]
pub struct SRow {
    pub preset: String,
    pub method: Method,
    pub s: f64,
    /// `1 - ∫ continuous part`.
    pub mass_deficit: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub level: Level,
    pub checks: Vec<Check>,
    pub s_table: Vec<SRow>,
    pub elapsed: Duration,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "validation level: {}", self.level.pick("quick", "full"))?;
        for c in &self.checks {
            let status = match (c.asserted, c.within_bound()) {
                (true, true) => "PASS",
                (true, false) => "FAIL",
                (false, _) => "INFO",
            };
            let bound = match c.bound {
                Bound::AtMost(t) => format!("<= {t:.1e}"),
                Bound::AtLeast(t) => format!(">= {t:.1e}"),
            };
            write!(f, "{status} [{}] {}: measured {:.3e}, required {bound}", c.module, c.name, c.measured)?;
            if !c.note.is_empty() {
                write!(f, " ({})", c.note)?;
            }
            writeln!(f)?;
        }
        writeln!(f)?;
        writeln!(f, "normalization scalar S vs 1 - continuous mass (not asserted):")?;
        writeln!(f, "{:<48} {:>7} {:>24} {:>24}", "preset", "method", "S", "1 - mass")?;
        for r in &self.s_table {
            writeln!(f, "{:<48} {:>7} {:>24.16e} {:>24.16e}", r.preset, r.method, r.s, r.mass_deficit)?;
        }
        writeln!(f)?;
        let failed = self.checks.iter().filter(|c| !c.passed()).count();
        writeln!(
            f,
            "{} checks, {failed} failed, {:.1} s",
            self.checks.len(),
            self.elapsed.as_secs_f64()
        )
    }
}

fn rel(a: f64, b: f64) -> f64 {
    if a == b {
        0.0
    } else {
        (a - b).abs() / a.abs().max(b.abs())
    }
}

/// Largest value, or NaN with the first error message.
fn worst(values: Vec<Result<f64>>) -> (f64, String) {
    let mut m = 0.0f64;
    for v in values {
        match v {
            Ok(v) if v.is_nan() => return (f64::NAN, "NaN encountered".into()),
            Ok(v) => m = m.max(v),
            Err(e) => return (f64::NAN, e.to_string()),
        }
    }
    (m, String::new())
}

struct Suite {
    level: Level,
    checks: Vec<Check>,
}

impl Suite {
    fn push(&mut self, module: &'static str, name: impl Into<String>, bound: Bound, asserted: bool, v: (f64, String)) {
        self.checks.push(Check {
            module,
            name: name.into(),
            measured: v.0,
            bound,
            asserted,
            note: v.1,
        });
    }

    fn assert_max(&mut self, module: &'static str, name: impl Into<String>, tol: f64, v: (f64, String)) {
        self.push(module, name, Bound::AtMost(tol), true, v);
    }
}

/// `count` points on `(0, 5√Ω]`.
fn interior_grid(spec: &CompositeSpec, count: usize) -> Vec<f64> {
    let top = 5.0 * spec.shadow().omega().sqrt();
    (1..=count).map(|i| top * i as f64 / count as f64).collect()
}

fn log_grid(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    (0..count)
        .map(|i| lo * (hi / lo).powf(i as f64 / (count - 1) as f64))
        .collect()
}

fn specfun_checks(s: &mut Suite) {
    let pi = std::f64::consts::PI;
    let exact: Vec<(f64, f64)> = vec![
        (0.5, pi.sqrt()),
        (1.5, 0.5 * pi.sqrt()),
        (5.0, 24.0),
        (10.0, 362_880.0),
        (20.0, 121_645_100_408_832_000.0),
    ];
    let v = worst(exact.iter().map(|&(x, g)| gamma_fn(x).map(|v| rel(v, g))).collect());
    s.assert_max("specfun", "gamma at exact points", 1e-13, v);

    let xs = log_grid(0.1, 50.0, s.level.pick(8, 25));
    let orders = [0.0, 0.25, 0.5, 1.3, 2.0, 4.7];
    let mut w = Vec::new();
    for &nu in &orders {
        for &x in &xs {
            w.push((|| {
                let lhs = bessel_i(nu, x)? * bessel_k(nu + 1.0, x)? + bessel_i(nu + 1.0, x)? * bessel_k(nu, x)?;
                Ok(rel(lhs * x, 1.0))
            })());
        }
    }
    s.assert_max("specfun", "Wronskian I_nu K_nu+1 + I_nu+1 K_nu = 1/x", 1e-8, worst(w));

    let mut k = Vec::new();
    for &nu in &orders {
        for &x in &xs {
            k.push((|| Ok(rel(bessel_k(-nu, x)?, bessel_k(nu, x)?)))());
        }
    }
    s.assert_max("specfun", "K_-nu = K_nu", 0.0, worst(k));

    let order40 = SeriesOrder::new(40).expect("positive order");
    let mut hp = Vec::new();
    for n in 0..=6u32 {
        for &x in &xs {
            hp.push((|| Ok(rel(bessel_i_poly(n as f64 + 0.5, x, order40)?, bessel_i_half_integer(n, x)?)))());
        }
    }
    s.assert_max("specfun", "half-integer I vs polynomial approximation (order 40)", 1e-8, worst(hp));

    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let triples: Vec<(f64, f64, f64)> = (0..s.level.pick(20, 100))
        .map(|_| (rng.random_range(-4.0..4.0), rng.random_range(0.05..5.0), rng.random_range(0.05..5.0)))
        .collect();
    let g = triples
        .par_iter()
        .map(|&(nu, b, c)| Ok(rel(gamma_mixture_integral(nu, b, c)?, gamma_mixture_quadrature(nu, b, c)?)))
        .collect();
    s.assert_max("specfun", "gamma mixture integral vs quadrature", 1e-8, worst(g));
}

fn base_model_checks(s: &mut Suite, faults: Faults) {
    let identity = ETA_SWEEP
        .iter()
        .map(|&eta| {
            let p = EtaMuParams::new(eta, 1.0)?;
            let h = p.h() + faults.perturb_h;
            Ok(rel(p.big_h() / h, (1.0 - eta) / (1.0 + eta)))
        })
        .collect();
    s.assert_max("base_models", "H/h = (1-eta)/(1+eta)", 1e-13, worst(identity));

    let tol = Tolerance::new(1e-13, 1e-11);
    let models: Vec<MultipathParams> = vec![
        EtaMuParams::new(0.3, 1.8).expect("valid").into(),
        EtaMuParams::new(5.0, 0.7).expect("valid").into(),
        LambdaMuParams::new(0.4, 1.2).expect("valid").into(),
    ];
    let power = models
        .iter()
        .map(|p| {
            let m = integrate_semi_infinite(|w| p.power_pdf(w).unwrap_or(f64::NAN), 1.0, tol).into_result()?;
            Ok((m.value - 1.0).abs())
        })
        .collect();
    s.assert_max("base_models", "power density integrates to 1", 1e-8, worst(power));
    let envelope = models
        .iter()
        .map(|p| {
            let m = integrate_semi_infinite(|r| p.envelope_pdf(r, 1.3).unwrap_or(f64::NAN), 1.3, tol).into_result()?;
            Ok((m.value - 1.0).abs())
        })
        .collect();
    s.assert_max("base_models", "envelope density integrates to 1", 1e-8, worst(envelope));
    let mean = models
        .iter()
        .map(|p| {
            let m = integrate_semi_infinite(|w| w * p.power_pdf(w).unwrap_or(f64::NAN), 1.0, tol).into_result()?;
            Ok((m.value - 1.0).abs())
        })
        .collect();
    s.assert_max("base_models", "power density has unit mean", 1e-8, worst(mean));
}

fn mass(spec: &CompositeSpec) -> Result<f64> {
    let scale = spec.shadow().omega().sqrt();
    let f = |x: f64| pdf_point(x, spec).map(|v| v.density).unwrap_or(f64::NAN);
    Ok(integrate_semi_infinite(f, scale, Tolerance::new(1e-12, 1e-10)).into_result()?.value)
}

fn expansion_vs_oracle(presets: &[Preset], points: usize, oracle: fn(f64, &CompositeSpec) -> Result<f64>) -> (f64, String) {
    worst(
        presets
            .par_iter()
            .flat_map_iter(|p| {
                interior_grid(&p.spec, points)
                    .into_iter()
                    .map(move |x| Ok(rel(pdf_point(x, &p.spec)?.density, oracle(x, &p.spec)?)))
            })
            .collect(),
    )
}

fn composite_checks(s: &mut Suite) {
    let points = s.level.pick(10, 50);

    let norm = mixture_presets().par_iter().map(|p| Ok((mass(&p.spec)? - 1.0).abs())).collect();
    s.assert_max("composite", "mixture density integrates to 1", 1e-6, worst(norm));

    let v = expansion_vs_oracle(&integer_presets(), points, pre_identity_integer);
    s.assert_max("composite", "closed form vs pre-identity quadrature", 1e-9, v);
    let v = expansion_vs_oracle(&series_presets(), points, pre_identity_series);
    s.assert_max("composite", "series vs pre-identity quadrature", 1e-9, v);

    for method in [Method::Quadrature, Method::ClosedFormIntegerMu, Method::SeriesRealMu] {
        let presets: Vec<Preset> = all_presets()
            .into_iter()
            .filter(|p| p.spec.method() == method && matches!(p.spec.multipath(), MultipathParams::LambdaMu(_)))
            .collect();
        let v = worst(
            presets
                .par_iter()
                .flat_map_iter(|p| {
                    let eta = p.spec.as_eta_mu();
                    interior_grid(&p.spec, points)
                        .into_iter()
                        .map(move |x| Ok(rel(pdf_point(x, &p.spec)?.density, pdf_point(x, &eta)?.density)))
                })
                .collect(),
        );
        s.assert_max("composite", format!("lambda-mu vs eta-mu form ({method})"), 1e-10, v);
    }

    let mut k = Vec::new();
    let mut g = Vec::new();
    for mixing in [Mixing::MeanSquareGamma, Mixing::RmsGamma] {
        let spec = eta_mu_gamma(1.0, 0.5, 1.3, 0.9, mixing).expect("valid");
        for x in interior_grid(&spec, points) {
            k.push((|| Ok(rel(mixture_pdf(x, &spec)?, rayleigh_gamma_pdf(x, spec.shadow(), mixing)?)))());
        }
        let spec = eta_mu_gamma(1e-6, 2.0, 1.2, 0.8, mixing).expect("valid");
        for x in interior_grid(&spec, points) {
            g.push((|| Ok(rel(mixture_pdf(x, &spec)?, nakagami_gamma_pdf(x, 2.0, spec.shadow(), mixing)?)))());
        }
    }
    s.assert_max("composite", "eta=1, mu=0.5 vs Rayleigh/gamma", 1e-6, worst(k));
    s.assert_max("composite", "eta=1e-6, mu=2 vs Nakagami-2/gamma", 1e-3, worst(g));

    let presets = all_presets();
    let negatives = presets
        .par_iter()
        .map(|p| {
            let top = 5.0 * p.spec.shadow().omega().sqrt();
            let mut n = 0.0;
            for i in 1..=100 {
                if pdf_point(top * i as f64 / 100.0, &p.spec)?.density < 0.0 {
                    n += 1.0;
                }
            }
            Ok(n)
        })
        .collect::<Vec<_>>();
    let total = worst(negatives);
    s.assert_max("composite", "negative continuous values on preset grids", 0.0, total);
    let far = presets
        .par_iter()
        .map(|p| Ok(pdf_point(50.0 * p.spec.shadow().omega().sqrt(), &p.spec)?.density.abs()))
        .collect();
    s.assert_max("composite", "density at 50 sqrt(omega)", 1e-10, worst(far));

    // Series convergence on the published sweep parameters.
    let n10 = SeriesOrder::new(10).expect("positive");
    let n30 = SeriesOrder::new(30).expect("positive");
    let mut sweep: Vec<CompositeSpec> = ETA_SWEEP
        .iter()
        .filter_map(|&eta| eta_mu_gamma(eta, 0.6, 1.2, 0.8, Mixing::RmsGamma).ok())
        .collect();
    sweep.extend(MU_SWEEP.iter().filter_map(|&mu| lambda_mu_gamma(0.5, mu, 1.25, 1.5, Mixing::RmsGamma).ok()));
    let conv = sweep
        .par_iter()
        .flat_map_iter(|spec| {
            let series = spec.with_method(Method::SeriesRealMu).expect("rms spec");
            let root = spec.shadow().omega().sqrt();
            (1..=10).map(move |i| {
                let x = 0.25 * i as f64 * root;
                let a = pdf_point(x, &series.with_series_order(n10))?.density;
                let b = pdf_point(x, &series.with_series_order(n30))?.density;
                Ok(rel(a, b))
            })
        })
        .collect();
    s.assert_max("composite", "series order 10 vs 30", 1e-6, worst(conv));

    let n = series_presets()
        .par_iter()
        .flat_map_iter(|p| {
            let series = p.spec.with_series_order(n30);
            let quad = p.spec.with_method(Method::Quadrature).expect("quadrature always applies");
            interior_grid(&p.spec, points)
                .into_iter()
                .map(move |x| Ok(rel(pdf_point(x, &series)?.density, mixture_pdf(x, &quad)?)))
        })
        .collect();
    s.push("composite", "series (order 30) vs mixture", Bound::AtMost(1e-4), false, worst(n));
}

fn oracle_checks(s: &mut Suite) {
    let count = s.level.pick(200_000, 1_000_000);
    let p_min = Bound::AtLeast(1e-3);

    let shadow = ShadowParams::new(0.7, 1.4).expect("valid");
    let v = (|| {
        let batch = sample_gamma(&shadow, count, 1)?;
        Ok(chi_square_gof(&batch, |y| gamma_pdf(y, &shadow).unwrap_or(f64::NAN))?.p_value)
    })();
    s.push("oracle", "gamma sampler goodness of fit (p)", p_min, true, (v.clone().unwrap_or(f64::NAN), note(&v)));

    let power = MultipathParams::from(EtaMuParams::new(0.3, 1.8).expect("valid"));
    let v = (|| {
        let batch = sample_multipath_power(&power, count, 2)?;
        Ok(chi_square_gof(&batch, |w| power.power_pdf(w).unwrap_or(f64::NAN))?.p_value)
    })();
    s.push("oracle", "power sampler goodness of fit, eta=0.3 mu=1.8 (p)", p_min, true, (v.clone().unwrap_or(f64::NAN), note(&v)));

    for (i, p) in sampling_presets().into_iter().enumerate() {
        let v = (|| {
            let batch = sample_composite(&p.spec, count, 100 + i as u64)?;
            Ok(chi_square_gof(&batch, |x| mixture_pdf(x, &p.spec).unwrap_or(f64::NAN))?.p_value)
        })();
        s.push("oracle", format!("composite sampler vs mixture, {} (p)", p.name), p_min, true, (v.clone().unwrap_or(f64::NAN), note(&v)));
    }

    let c: f64 = 1.3;
    let v = (|| {
        let spec = CompositeSpec::builder(power, ShadowParams::new(1e6, c / 1e6)?).build()?;
        let batch = sample_composite(&spec, count, 20)?;
        Ok(chi_square_gof(&batch, |x| power.envelope_pdf(x, c.sqrt()).unwrap_or(f64::NAN))?.p_value)
    })();
    s.push("oracle", "degenerate shadow vs pure multipath (p)", p_min, true, (v.clone().unwrap_or(f64::NAN), note(&v)));

    let spec = sampling_presets()[0].spec;
    let v = (|| {
        let a = sample_composite(&spec, 100_000, 3)?;
        let b = sample_composite(&spec, 100_000, 3)?;
        Ok(a.values.iter().zip(&b.values).filter(|(x, y)| x.to_bits() != y.to_bits()).count() as f64)
    })();
    s.assert_max("oracle", "same seed reproduces samples (mismatches)", 0.0, (v.clone().unwrap_or(f64::NAN), note(&v)));
}

fn note(v: &Result<f64>) -> String {
    v.as_ref().err().map(ToString::to_string).unwrap_or_default()
}

fn s_table() -> Vec<SRow> {
    all_presets()
        .par_iter()
        .map(|p| SRow {
            preset: p.name.clone(),
            method: p.spec.method(),
            s: normalization_s(&p.spec).unwrap_or(f64::NAN),
            mass_deficit: mass(&p.spec).map(|m| 1.0 - m).unwrap_or(f64::NAN),
        })
        .collect()
}

/// Runs the suite.
pub fn run(level: Level, faults: Faults) -> Report {
    let start = Instant::now();
    let mut suite = Suite {
        level,
        checks: Vec::new(),
    };
    specfun_checks(&mut suite);
    base_model_checks(&mut suite, faults);
    composite_checks(&mut suite);
    oracle_checks(&mut suite);
    let s_table = s_table();
    Report {
        level,
        checks: suite.checks,
        s_table,
        elapsed: start.elapsed(),
    }
}
