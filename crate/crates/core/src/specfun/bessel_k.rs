//! Modified Bessel function of the second kind for real order.
//!
//! `K_μ` and `K_{μ+1}` with `|μ| ≤ 1/2` come from Temme's series (`x < 2`) or
//! Steed's continued fraction (`x ≥ 2`); forward recurrence in the order then
//! reaches `|ν|`. Only `|ν|` enters, so `K_{-ν} = K_ν` holds bit-for-bit.

use crate::error::{Error, Result};
use std::f64::consts::PI;

const EPS: f64 = 1e-16;
const MAX_ITER: usize = 100_000;
const RESCALE: f64 = 1e280;

// Taylor coefficients of 1/Γ(1 + z) about z = 0 (mpmath, 22 digits).
const RGAMMA_TAYLOR: [f64; 28] = [
    1.0,
    0.577_215_664_901_532_860_606_5,
    -0.655_878_071_520_253_881_077,
    -0.042_002_635_034_095_235_529,
    0.166_538_611_382_291_489_501_7,
    -0.042_197_734_555_544_336_748_21,
    -0.009_621_971_527_876_973_562_115,
    0.007_218_943_246_663_099_542_395,
    -0.001_165_167_591_859_065_112_114,
    -0.000_215_241_674_114_950_972_815_7,
    0.000_128_050_282_388_116_186_153_2,
    -0.000_020_134_854_780_788_238_655_69,
    -0.000_001_250_493_482_142_670_657_345,
    0.000_001_133_027_231_981_695_882_374,
    -2.056_338_416_977_607_103_45e-7,
    6.116_095_104_481_415_817_862e-9,
    5.002_007_644_469_222_930_056e-9,
    -1.181_274_570_487_020_144_588e-9,
    1.043_426_711_691_100_510_492e-10,
    7.782_263_439_905_071_254_05e-12,
    -3.696_805_618_642_205_708_188e-12,
    5.100_370_287_454_475_979_015e-13,
    -2.058_326_053_566_506_783_222e-14,
    -5.348_122_539_423_017_982_37e-15,
    1.226_778_628_238_260_790_159e-15,
    -1.181_259_301_697_458_769_514e-16,
    1.186_692_254_751_600_332_58e-18,
    1.412_380_655_318_031_781_556e-18,
];

/// Returns `(Γ₁, Γ₂, 1/Γ(1+μ), 1/Γ(1-μ))` for Temme's series, `|μ| ≤ 1/2`.
fn temme_gammas(mu: f64) -> (f64, f64, f64, f64) {
    let mu2 = mu * mu;
    let mut even = 0.0;
    let mut odd = 0.0;
    let mut pw = 1.0;
    for pair in RGAMMA_TAYLOR.chunks(2) {
        even += pair[0] * pw;
        if let Some(&c) = pair.get(1) {
            odd += c * pw;
        }
        pw *= mu2;
    }
    let gam1 = -odd;
    let gam2 = even;
    (gam1, gam2, gam2 - mu * gam1, gam2 + mu * gam1)
}

/// `(K_μ(x), K_{μ+1}(x))` for `x < 2`, unscaled.
fn temme(mu: f64, x: f64) -> (f64, f64) {
    let x2 = 0.5 * x;
    let pimu = PI * mu;
    let fact = if pimu.abs() < EPS { 1.0 } else { pimu / pimu.sin() };
    let d = -x2.ln();
    let e = mu * d;
    let fact2 = if e.abs() < EPS { 1.0 } else { e.sinh() / e };
    let (gam1, gam2, gampl, gammi) = temme_gammas(mu);
    let mut ff = fact * (gam1 * e.cosh() + gam2 * fact2 * d);
    let mut sum = ff;
    let ee = e.exp();
    let mut p = 0.5 * ee / gampl;
    let mut q = 0.5 / (ee * gammi);
    let mut c = 1.0;
    let dd = x2 * x2;
    let mut sum1 = p;
    for i in 1..MAX_ITER {
        let fi = i as f64;
        ff = (fi * ff + p + q) / (fi * fi - mu * mu);
        c *= dd / fi;
        p /= fi - mu;
        q /= fi + mu;
        let del = c * ff;
        sum += del;
        sum1 += c * (p - fi * ff);
        if del.abs() < sum.abs() * EPS {
            break;
        }
    }
    (sum, sum1 * 2.0 / x)
}

/// `(e^x K_μ(x), e^x K_{μ+1}(x))` for `x ≥ 2`.
fn steed(mu: f64, x: f64) -> (f64, f64) {
    let mut b = 2.0 * (1.0 + x);
    let mut d = 1.0 / b;
    let mut h = d;
    let mut delh = d;
    let mut q1 = 0.0;
    let mut q2 = 1.0;
    let a1 = 0.25 - mu * mu;
    let mut q = a1;
    let mut c = a1;
    let mut a = -a1;
    let mut s = 1.0 + q * delh;
    for i in 2..MAX_ITER {
        let fi = i as f64;
        a -= 2.0 * (fi - 1.0);
        c = -a * c / fi;
        let qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        let dels = q * delh;
        s += dels;
        if (dels / s).abs() < EPS {
            break;
        }
    }
    h *= a1;
    let kmu = (PI / (2.0 * x)).sqrt() / s;
    let k1 = kmu * (mu + x + 0.5 - h) / x;
    (kmu, k1)
}

fn check_args(func: &'static str, nu: f64, x: f64) -> Result<()> {
    if !nu.is_finite() {
        return Err(Error::domain(func, format!("order ν = {nu} must be finite")));
    }
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain(func, format!("x = {x} must be positive and finite")));
    }
    Ok(())
}

/// `ln K_ν(x)` for real `ν`, `x > 0`. Never overflows.
pub fn ln_bessel_k(nu: f64, x: f64) -> Result<f64> {
    check_args("ln_bessel_k", nu, x)?;
    Ok(ln_bessel_k_unchecked(nu, x))
}

pub(crate) fn ln_bessel_k_unchecked(nu: f64, x: f64) -> f64 {
    ln_bessel_k_scaled_unchecked(nu, x) - x
}

/// `ln(e^x K_ν(x))`.
fn ln_bessel_k_scaled_unchecked(nu: f64, x: f64) -> f64 {
    let nu = nu.abs();
    let steps = (nu + 0.5).floor();
    let mu = nu - steps;
    let (mut kmu, mut k1, mut ln_scale) = if x < 2.0 {
        let (a, b) = temme(mu, x);
        (a, b, x)
    } else {
        let (a, b) = steed(mu, x);
        (a, b, 0.0)
    };
    let two_over_x = 2.0 / x;
    for i in 1..=(steps as u64) {
        let next = (mu + i as f64) * two_over_x * k1 + kmu;
        kmu = k1;
        k1 = next;
        if k1 > RESCALE {
            kmu /= RESCALE;
            k1 /= RESCALE;
            ln_scale += RESCALE.ln();
        }
    }
    kmu.ln() + ln_scale
}

/// `K_ν(x)` for real `ν`, `x > 0`.
pub fn bessel_k(nu: f64, x: f64) -> Result<f64> {
    let ln = ln_bessel_k(nu, x)?;
    let v = ln.exp();
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::overflow(
            "bessel_k",
            format!("K_{nu}({x}) exceeds f64 range; use ln_bessel_k"),
        ))
    }
}

/// `e^x K_ν(x)`.
pub fn bessel_k_scaled(nu: f64, x: f64) -> Result<f64> {
    check_args("bessel_k_scaled", nu, x)?;
    let ln = ln_bessel_k_scaled_unchecked(nu, x);
    let v = ln.exp();
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::overflow("bessel_k_scaled", format!("e^x K_{nu}({x}) exceeds f64 range")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::bessel_i;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn closed_form_half_order() {
        let want = (PI / 4.0).sqrt() * (-2.0f64).exp();
        assert!(rel(bessel_k(0.5, 2.0).unwrap(), want) < 1e-14);
        assert!(rel(bessel_k(0.5, 2.0).unwrap(), 0.119_937_7) < 1e-6);
        assert_eq!(bessel_k(-0.5, 2.0).unwrap(), bessel_k(0.5, 2.0).unwrap());
        // K_{3/2}(x) = sqrt(π/2x) e^{-x} (1 + 1/x).
        for &x in &[0.01, 0.7, 1.99, 2.0, 9.0, 55.0] {
            let want = (PI / (2.0 * x)).sqrt() * (-x).exp() * (1.0 + 1.0 / x);
            assert!(rel(bessel_k(1.5, x).unwrap(), want) < 1e-13, "x={x}");
        }
    }

    #[test]
    fn matches_high_precision_reference() {
        // mpmath besselk, 40 digits.
        let cases = [
            (2.3, 1.7, 0.544_545_476_878_363_453_65),
            (0.0, 0.001, 7.023_688_800_562_381_343_6),
            (0.3, 0.5, 0.976_474_124_381_787_921_02),
            (1.0, 2.0, 0.139_865_881_816_522_427_28),
            (4.75, 10.0, 0.000_051_397_761_145_737_859_757),
            (-7.2, 3.3, 9.350_559_373_854_769_962_6),
            (12.5, 0.2, 2.161_803_019_401_676_960_2e20),
            (30.0, 5.0, 4_112_132_063_626_059_728.9),
            (0.45, 60.0, 1.416_266_230_643_377_126_4e-27),
            (17.1, 25.0, 8.945_322_364_169_663_707_3e-10),
            (29.5, 0.01, 6.206_152_606_107_935_442e97),
        ];
        for (nu, x, want) in cases {
            let got = bessel_k(nu, x).unwrap();
            assert!(rel(got, want) < 1e-12, "K_{nu}({x}) = {got}, want {want}");
        }
    }

    #[test]
    fn continuous_across_method_switch() {
        for &nu in &[0.0, 0.25, 0.5, 3.7, 11.0] {
            let a = bessel_k(nu, 2.0 - 1e-12).unwrap();
            let b = bessel_k(nu, 2.0).unwrap();
            assert!(rel(a, b) < 1e-11, "ν={nu}: {a} vs {b}");
        }
    }

    #[test]
    fn wronskian() {
        for &nu in &[0.0, 0.3, 1.0, 2.5, 7.25] {
            for &x in &[0.05, 0.5, 1.9, 2.1, 8.0, 25.0, 45.0] {
                let w = bessel_i(nu, x).unwrap() * bessel_k(nu + 1.0, x).unwrap()
                    + bessel_i(nu + 1.0, x).unwrap() * bessel_k(nu, x).unwrap();
                assert!(rel(w, 1.0 / x) < 1e-12, "ν={nu} x={x}: {w}");
            }
        }
    }

    #[test]
    fn overflow_and_domain() {
        assert!(matches!(bessel_k(80.0, 1e-3), Err(Error::Overflow { .. })));
        assert!(ln_bessel_k(80.0, 1e-3).unwrap().is_finite());
        assert!(bessel_k(1.0, 0.0).is_err());
        assert!(bessel_k(1.0, -1.0).is_err());
        assert!(bessel_k(f64::NAN, 1.0).is_err());
        assert_eq!(bessel_k(0.0, 800.0).unwrap(), 0.0);
        assert!(rel(bessel_k_scaled(0.5, 800.0).unwrap(), (PI / 1600.0).sqrt()) < 1e-14);
    }
}
