use super::SampleBatch;
use crate::error::{Error, Result};
use crate::quadrature::{gauss_kronrod_21, integrate, integrate_tail, Tolerance};
use rayon::prelude::*;
use statrs::function::gamma::gamma_ur;

/// Smallest batch accepted by [`chi_square_gof`].
pub const MIN_SAMPLES: usize = 10_000;
/// Equal-mass bins before merging.
pub const TARGET_BINS: usize = 40;
const MIN_EXPECTED: f64 = 5.0;
const TABLE_PANELS: usize = 200;
const BIN_TOL: Tolerance = Tolerance::new(1e-13, 1e-10);

/// One histogram bin; `hi = ∞` for the last.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GofBin {
    pub lo: f64,
    pub hi: f64,
    pub observed: u64,
    pub expected: f64,
}

/// Pearson chi-square result.
#[derive(Debug, Clone, PartialEq)]
pub struct GofReport {
    pub statistic: f64,
    pub dof: usize,
    pub p_value: f64,
    pub bins: Vec<GofBin>,
}

/// Approximate CDF on nodes at sample quantiles, used only to place the bin
/// edges; the bin masses are integrated exactly afterwards.
fn cdf_table<F: Fn(f64) -> f64 + Sync>(sorted: &[f64], density: &F) -> (Vec<f64>, Vec<f64>) {
    let n = sorted.len();
    let mut nodes = vec![0.0];
    for i in 1..TABLE_PANELS {
        let q = sorted[i * (n - 1) / TABLE_PANELS];
        if q > *nodes.last().expect("non-empty") {
            nodes.push(q);
        }
    }
    let top = sorted[n - 1];
    if top > *nodes.last().expect("non-empty") {
        nodes.push(top);
    }
    let masses: Vec<f64> = nodes
        .par_windows(2)
        .map(|w| {
            let mut f = |x: f64| density(x);
            gauss_kronrod_21(&mut f, w[0], w[1]).0
        })
        .collect();
    let mut cdf = Vec::with_capacity(nodes.len());
    let mut acc = 0.0;
    cdf.push(0.0);
    for m in masses {
        acc += m.max(0.0);
        cdf.push(acc);
    }
    (nodes, cdf)
}

/// Pearson chi-square test of `batch` against `density` on equal-expected
/// mass bins. Bins whose expected count falls below 5 are merged with a
/// neighbour, so every reported bin has at least that expectation.
pub fn chi_square_gof<F>(batch: &SampleBatch, density: F) -> Result<GofReport>
where
    F: Fn(f64) -> f64 + Sync,
{
    let n = batch.count();
    if n < MIN_SAMPLES {
        return Err(Error::TooFewSamples { got: n, need: MIN_SAMPLES });
    }
    let mut sorted = batch.values.clone();
    sorted.sort_by(f64::total_cmp);
    if !(sorted[0] >= 0.0) || !sorted[n - 1].is_finite() {
        return Err(Error::InvalidParameter("samples must be finite and non-negative".into()));
    }

    let (nodes, cdf) = cdf_table(&sorted, &density);
    let total = *cdf.last().expect("non-empty");
    let mut edges = vec![0.0];
    for j in 1..TARGET_BINS {
        let target = total * j as f64 / TARGET_BINS as f64;
        let i = cdf.partition_point(|&c| c < target).clamp(1, cdf.len() - 1);
        let (c0, c1) = (cdf[i - 1], cdf[i]);
        let t = if c1 > c0 { (target - c0) / (c1 - c0) } else { 0.5 };
        let e = nodes[i - 1] + t * (nodes[i] - nodes[i - 1]);
        if e > *edges.last().expect("non-empty") {
            edges.push(e);
        }
    }

    let last = *edges.last().expect("non-empty");
    let scale = (sorted[n / 2] - sorted[n / 4]).max(last * 1e-3).max(f64::MIN_POSITIVE);
    let mut masses: Vec<f64> = edges
        .par_windows(2)
        .map(|w| integrate(&density, w[0], w[1], BIN_TOL).value)
        .collect();
    let mut f = |x: f64| density(x);
    masses.push(integrate_tail(&mut f, last, scale, BIN_TOL).value);
    if masses.iter().any(|m| !m.is_finite()) {
        return Err(Error::Quadrature {
            value: f64::NAN,
            error: f64::NAN,
            evaluations: 0,
        });
    }

    let mut raw: Vec<GofBin> = Vec::with_capacity(masses.len());
    for (j, m) in masses.iter().enumerate() {
        let lo = edges[j];
        let hi = edges.get(j + 1).copied().unwrap_or(f64::INFINITY);
        let observed = (sorted.partition_point(|&v| v < hi) - sorted.partition_point(|&v| v < lo)) as u64;
        raw.push(GofBin {
            lo,
            hi,
            observed,
            expected: n as f64 * m,
        });
    }

    let mut bins: Vec<GofBin> = Vec::with_capacity(raw.len());
    for b in raw {
        match bins.last_mut() {
            Some(prev) if prev.expected < MIN_EXPECTED => {
                prev.hi = b.hi;
                prev.observed += b.observed;
                prev.expected += b.expected;
            }
            _ => bins.push(b),
        }
    }
    while bins.len() > 1 && bins.last().is_some_and(|b| b.expected < MIN_EXPECTED) {
        let b = bins.pop().expect("len > 1");
        let prev = bins.last_mut().expect("len > 0");
        prev.hi = b.hi;
        prev.observed += b.observed;
        prev.expected += b.expected;
    }

    let statistic: f64 = bins
        .iter()
        .map(|b| {
            let d = b.observed as f64 - b.expected;
            d * d / b.expected
        })
        .sum();
    let dof = bins.len().saturating_sub(1).max(1);
    let p_value = gamma_ur(dof as f64 / 2.0, statistic / 2.0).clamp(0.0, 1.0);
    Ok(GofReport {
        statistic,
        dof,
        p_value,
        bins,
    })
}
