use composite_fading::base_models::{gamma_pdf, mu_from_moments, EtaMuParams, MultipathParams, ShadowParams};
use composite_fading::composite::presets::sampling_presets;
use composite_fading::composite::{mixture_pdf, CompositeSpec, Mixing};
use composite_fading::oracle::{
    chi_square_gof, sample_composite, sample_eta_mu_power, sample_gamma, sample_multipath_power, MIN_SAMPLES,
};
use composite_fading::quadrature::{integrate_semi_infinite, Tolerance};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const COUNT: usize = 1_000_000;
const P_MIN: f64 = 1e-3;

#[test]
fn gamma_sampler_fits() {
    for (b, omega) in [(0.4, 2.0), (1.0, 1.0), (2.3, 0.7)] {
        let s = ShadowParams::new(b, omega).unwrap();
        let batch = sample_gamma(&s, COUNT, 17).unwrap();
        let se = (b * omega * omega / COUNT as f64).sqrt();
        assert!((batch.mean() - b * omega).abs() < 3.0 * se, "b={b}");
        let var = b * omega * omega;
        // Variance of the sample variance for a gamma law: (μ₄ - σ⁴)/n.
        let var_se = (var * var * (2.0 + 6.0 / b) / COUNT as f64).sqrt();
        assert!((batch.variance() - var).abs() < 4.0 * var_se, "b={b}");
        let r = chi_square_gof(&batch, |y| gamma_pdf(y, &s).unwrap()).unwrap();
        assert!(r.p_value > P_MIN, "b={b}: p={}", r.p_value);
    }
}

#[test]
fn rayleigh_power_is_exponential() {
    let p = EtaMuParams::new(1.0, 0.5).unwrap();
    let batch = sample_eta_mu_power(&p, COUNT, 4).unwrap();
    let r = chi_square_gof(&batch, |w| (-w).exp()).unwrap();
    assert!(r.p_value > P_MIN, "p={}", r.p_value);
}

#[test]
fn two_gamma_power_matches_density() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut pairs = vec![(0.3, 1.8)];
    pairs.extend((0..10).map(|_| (10f64.powf(rng.random_range(-1.5..1.5)), rng.random_range(0.3..4.0))));
    for (i, (eta, mu)) in pairs.into_iter().enumerate() {
        let p = MultipathParams::from(EtaMuParams::new(eta, mu).unwrap());
        let batch = sample_multipath_power(&p, COUNT, 100 + i as u64).unwrap();
        let r = chi_square_gof(&batch, |w| p.power_pdf(w).unwrap()).unwrap();
        assert!(r.p_value > P_MIN, "eta={eta} mu={mu}: p={}", r.p_value);
    }
}

#[test]
fn power_mean_is_one() {
    let p = EtaMuParams::new(0.3, 1.8).unwrap();
    let exact = integrate_semi_infinite(
        |w| w * MultipathParams::from(p).power_pdf(w).unwrap(),
        1.0,
        Tolerance::new(1e-13, 1e-12),
    );
    assert!((exact.value - 1.0).abs() < 1e-10);
    let batch = sample_eta_mu_power(&p, COUNT, 8).unwrap();
    let se = (batch.variance() / COUNT as f64).sqrt();
    assert!((batch.mean() - 1.0).abs() < 3.0 * se);
}

#[test]
fn mu_round_trip_from_samples() {
    for (eta, mu) in [(0.3, 1.8), (1.0, 0.75), (4.0, 2.5)] {
        let p = EtaMuParams::new(eta, mu).unwrap();
        let batch = sample_eta_mu_power(&p, COUNT, 31).unwrap();
        // Var(W) = (1 + (H/h)²) / (2μ): the ratio enters squared.
        let ratio = p.big_h() / p.h();
        let est = mu_from_moments(batch.mean(), batch.variance(), ratio * ratio).unwrap();
        assert!((est / mu - 1.0).abs() < 0.02, "eta={eta}: {est} vs {mu}");
    }
}

#[test]
fn composite_presets_fit_mixture() {
    for p in sampling_presets() {
        let batch = sample_composite(&p.spec, COUNT, 7).unwrap();
        let r = chi_square_gof(&batch, |x| mixture_pdf(x, &p.spec).unwrap()).unwrap();
        assert!(r.bins.len() >= 30, "{}", p.name);
        assert!(r.p_value > P_MIN, "{}: p={}", p.name, r.p_value);
    }
}

#[test]
fn degenerate_shadow_is_pure_multipath() {
    // Y → c almost surely when b is large and bΩ = c.
    let c: f64 = 1.3;
    let b = 1e6;
    let mp = MultipathParams::from(EtaMuParams::new(0.4, 1.3).unwrap());
    let spec = CompositeSpec::builder(mp, ShadowParams::new(b, c / b).unwrap())
        .mixing(Mixing::RmsGamma)
        .build()
        .unwrap();
    let batch = sample_composite(&spec, COUNT, 12).unwrap();
    let r = chi_square_gof(&batch, |x| mp.envelope_pdf(x, c.sqrt()).unwrap()).unwrap();
    assert!(r.p_value > P_MIN, "p={}", r.p_value);
}

#[test]
fn p_values_are_calibrated() {
    let s = ShadowParams::new(1.7, 0.9).unwrap();
    let mut p: Vec<f64> = (0..20)
        .map(|seed| {
            let batch = sample_gamma(&s, 4 * MIN_SAMPLES, 1000 + seed).unwrap();
            chi_square_gof(&batch, |y| gamma_pdf(y, &s).unwrap()).unwrap().p_value
        })
        .collect();
    p.sort_by(f64::total_cmp);
    let median = 0.5 * (p[9] + p[10]);
    assert!((0.2..=0.8).contains(&median), "median p = {median}");
}

#[test]
fn same_seed_same_values() {
    let spec = &sampling_presets()[0].spec;
    let a = sample_composite(spec, 200_000, 5).unwrap();
    let b = sample_composite(spec, 200_000, 5).unwrap();
    assert_eq!(a.values, b.values);
    assert!(a.values.iter().all(|&v| v >= 0.0 && v.is_finite()));
}
