use crate::base_models::{EtaMuParams, MultipathParams, ShadowParams};
use crate::composite::{CompositeSpec, Mixing};
use crate::error::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Gamma};
use rayon::prelude::*;

/// Draws per independent RNG stream.
const CHUNK: usize = 1 << 16;

/// What a batch was drawn from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SampleSource {
    /// Gamma shadowing variate `Y`.
    Gamma(ShadowParams),
    /// Normalized multipath power `W`.
    MultipathPower(MultipathParams),
    /// Composite envelope `X`.
    Composite(CompositeSpec),
}

/// Monte-Carlo draws with the seed and model that produced them.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleBatch {
    pub values: Vec<f64>,
    pub seed: u64,
    pub source: SampleSource,
}

impl SampleBatch {
    pub fn count(&self) -> usize {
        self.values.len()
    }

    pub fn mean(&self) -> f64 {
        self.values.iter().sum::<f64>() / self.values.len() as f64
    }

    /// Unbiased sample variance.
    pub fn variance(&self) -> f64 {
        let m = self.mean();
        self.values.iter().map(|v| (v - m) * (v - m)).sum::<f64>() / (self.values.len() as f64 - 1.0)
    }
}

/// Fills `count` values; chunk `c` draws from stream `c` of the seeded
/// generator, so the output does not depend on the thread count.
fn draw<F>(count: usize, seed: u64, f: F) -> Result<Vec<f64>>
where
    F: Fn(&mut ChaCha8Rng) -> f64 + Sync,
{
    if count == 0 {
        return Err(Error::InvalidParameter("sample count must be at least 1".into()));
    }
    let mut values = vec![0.0; count];
    values.par_chunks_mut(CHUNK).enumerate().for_each(|(c, chunk)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(c as u64);
        for v in chunk {
            *v = f(&mut rng);
        }
    });
    Ok(values)
}

fn gamma(shape: f64, scale: f64) -> Result<Gamma<f64>> {
    Gamma::new(shape, scale).map_err(|e| Error::InvalidParameter(format!("gamma({shape}, {scale}): {e}")))
}

/// Power `W = G₁ + G₂` with `G_i ~ gamma(μ, 1/(2μ(h ± H)))`: the in-phase
/// and quadrature cluster powers. `E[W] = 1`.
struct PowerSampler {
    g1: Gamma<f64>,
    g2: Gamma<f64>,
}

impl PowerSampler {
    fn new(p: &MultipathParams) -> Result<Self> {
        let mu = p.mu();
        Ok(PowerSampler {
            g1: gamma(mu, 1.0 / (2.0 * mu * p.h_plus_big_h()))?,
            g2: gamma(mu, 1.0 / (2.0 * mu * p.h_minus_big_h()))?,
        })
    }

    fn sample<R: Rng>(&self, rng: &mut R) -> f64 {
        self.g1.sample(rng) + self.g2.sample(rng)
    }
}

/// Gamma shadowing draws with shape `b` and scale `Ω`.
pub fn sample_gamma(s: &ShadowParams, count: usize, seed: u64) -> Result<SampleBatch> {
    let g = gamma(s.b(), s.omega())?;
    Ok(SampleBatch {
        values: draw(count, seed, |rng| g.sample(rng))?,
        seed,
        source: SampleSource::Gamma(*s),
    })
}

/// Normalized power draws for either multipath model.
pub fn sample_multipath_power(p: &MultipathParams, count: usize, seed: u64) -> Result<SampleBatch> {
    let w = PowerSampler::new(p)?;
    Ok(SampleBatch {
        values: draw(count, seed, |rng| w.sample(rng))?,
        seed,
        source: SampleSource::MultipathPower(*p),
    })
}

/// Normalized η-μ power draws.
pub fn sample_eta_mu_power(p: &EtaMuParams, count: usize, seed: u64) -> Result<SampleBatch> {
    sample_multipath_power(&MultipathParams::EtaMu(*p), count, seed)
}

/// Composite envelope draws: `Y` from the gamma law, then `X = r̂ √W` with
/// `r̂ = Y` (mean-square mixing) or `r̂ = √Y` (rms mixing).
pub fn sample_composite(spec: &CompositeSpec, count: usize, seed: u64) -> Result<SampleBatch> {
    let w = PowerSampler::new(spec.multipath())?;
    let y = gamma(spec.shadow().b(), spec.shadow().omega())?;
    let mixing = spec.mixing();
    let values = draw(count, seed, |rng| {
        let shadow = y.sample(rng);
        let power = w.sample(rng);
        match mixing {
            Mixing::MeanSquareGamma => shadow * power.sqrt(),
            Mixing::RmsGamma => (shadow * power).sqrt(),
        }
    })?;
    Ok(SampleBatch {
        values,
        seed,
        source: SampleSource::Composite(*spec),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma_moments() {
        let s = ShadowParams::new(1.7, 0.6).unwrap();
        let batch = sample_gamma(&s, 200_000, 11).unwrap();
        let (mean, var) = (1.7 * 0.6, 1.7 * 0.36);
        let se = (var / 200_000.0f64).sqrt();
        assert!((batch.mean() - mean).abs() < 4.0 * se);
        assert!((batch.variance() / var - 1.0).abs() < 0.02);
    }

    #[test]
    fn power_has_unit_mean() {
        let p = EtaMuParams::new(0.3, 1.8).unwrap();
        let batch = sample_eta_mu_power(&p, 200_000, 5).unwrap();
        let se = (batch.variance() / 200_000.0).sqrt();
        assert!((batch.mean() - 1.0).abs() < 4.0 * se);
    }

    #[test]
    fn reproducible_and_thread_independent() {
        let s = ShadowParams::new(0.4, 2.0).unwrap();
        let a = sample_gamma(&s, 150_000, 99).unwrap();
        let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let b = pool.install(|| sample_gamma(&s, 150_000, 99).unwrap());
        assert_eq!(a, b);
        let c = sample_gamma(&s, 150_000, 100).unwrap();
        assert_ne!(a.values, c.values);
    }

    #[test]
    fn zero_count_rejected() {
        let s = ShadowParams::new(1.0, 1.0).unwrap();
        assert!(matches!(sample_gamma(&s, 0, 1), Err(Error::InvalidParameter(_))));
    }
}
