//! Gamma, log-gamma and the Pochhammer symbol for positive real arguments.

use crate::error::{Error, Result};
use std::f64::consts::PI;

// Lanczos approximation, g = 7, nine terms.
const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEF: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Largest argument for which `Γ(x)` is finite in `f64`.
pub const GAMMA_MAX_ARG: f64 = 171.624_376_956_302_7;

fn lanczos_sum(z: f64) -> f64 {
    LANCZOS_COEF[1..]
        .iter()
        .enumerate()
        .fold(LANCZOS_COEF[0], |acc, (i, &c)| acc + c / (z + (i + 1) as f64))
}

// Stirling correction B_{2k} / (2k (2k - 1)), k = 1..8.
const STIRLING: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
];
const STIRLING_MIN: f64 = 10.0;

fn stirling_correction(x: f64) -> f64 {
    let inv2 = 1.0 / (x * x);
    STIRLING.iter().rev().fold(0.0, |acc, &c| acc * inv2 + c) / x
}

/// `ln Γ(x)` without argument checks; requires `x > 0`.
pub(crate) fn ln_gamma_unchecked(x: f64) -> f64 {
    if x >= STIRLING_MIN {
        return (x - 0.5) * x.ln() - x + 0.5 * (2.0 * PI).ln() + stirling_correction(x);
    }
    if x < 0.5 {
        // Γ(x) = Γ(x + 1) / x keeps the Lanczos sum in its accurate range.
        return ln_gamma_unchecked(x + 1.0) - x.ln();
    }
    let z = x - 1.0;
    let t = z + LANCZOS_G + 0.5;
    0.5 * (2.0 * PI).ln() + (z + 0.5) * t.ln() - t + lanczos_sum(z).ln()
}

/// Natural logarithm of the gamma function for `x > 0`.
pub fn ln_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain("ln_gamma", format!("x = {x} must be positive and finite")));
    }
    Ok(ln_gamma_unchecked(x))
}

/// The gamma function for `x > 0`.
///
/// Arguments above [`GAMMA_MAX_ARG`] report an overflow instead of returning
/// infinity.
pub fn gamma_fn(x: f64) -> Result<f64> {
    if !(x > 0.0) || x.is_nan() {
        return Err(Error::domain("gamma_fn", format!("x = {x} must be positive")));
    }
    if x > GAMMA_MAX_ARG {
        return Err(Error::overflow("gamma_fn", format!("Γ({x}) exceeds f64 range")));
    }
    if x < 0.5 {
        return Ok(gamma_fn(x + 1.0)? / x);
    }
    if x >= STIRLING_MIN {
        // x^(x - 1/2) split in two so the power cannot overflow ahead of e^-x.
        let half = x.powf(0.5 * (x - 0.5));
        let value = (2.0 * PI).sqrt() * half * (half * (-x).exp()) * stirling_correction(x).exp();
        return if value.is_finite() {
            Ok(value)
        } else {
            Err(Error::overflow("gamma_fn", format!("Γ({x}) exceeds f64 range")))
        };
    }
    let z = x - 1.0;
    let t = z + LANCZOS_G + 0.5;
    // Split the power so that t^(z + 1/2) cannot overflow before e^-t is applied.
    let half = t.powf(0.5 * (z + 0.5));
    let value = (2.0 * PI).sqrt() * half * (half * (-t).exp()) * lanczos_sum(z);
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::overflow("gamma_fn", format!("Γ({x}) exceeds f64 range")))
    }
}

/// Rising factorial `(x)_k = x (x + 1) ... (x + k - 1)`.
pub fn pochhammer(x: f64, k: u32) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain("pochhammer", format!("x = {x} must be positive")));
    }
    let mut acc = 1.0;
    for i in 0..k {
        acc *= x + f64::from(i);
        if !acc.is_finite() {
            return Err(Error::overflow("pochhammer", format!("({x})_{k} exceeds f64 range")));
        }
    }
    Ok(acc)
}

/// `ln (x)_k`, usable where the product itself would overflow.
pub fn ln_pochhammer(x: f64, k: u32) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain("ln_pochhammer", format!("x = {x} must be positive")));
    }
    if k < 64 {
        return Ok((0..k).map(|i| (x + f64::from(i)).ln()).sum());
    }
    Ok(ln_gamma_unchecked(x + f64::from(k)) - ln_gamma_unchecked(x))
}
