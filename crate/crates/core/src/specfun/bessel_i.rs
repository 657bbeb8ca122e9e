//! Modified Bessel functions of the first kind.
//!
//! Three evaluators live here: the convergent power series (with a large-x
//! asymptotic branch), the exact finite sum for half-integer orders, and the
//! finite polynomial approximation of order `n` used by the real-μ series
//! expansions.

use super::gamma::ln_gamma_unchecked;
use super::SeriesOrder;
use crate::error::{Error, Result};
use std::f64::consts::PI;

const EPS: f64 = 1e-17;

fn asymptotic_applies(nu: f64, x: f64) -> bool {
    x > 30.0 && x > nu * nu
}

/// `ln(e^{-x} I_ν(x))` from the large-argument expansion.
fn ln_scaled_asymptotic(nu: f64, x: f64) -> f64 {
    let mu4 = 4.0 * nu * nu;
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..200 {
        let odd = (2 * k - 1) as f64;
        let next = -term * (mu4 - odd * odd) / (8.0 * k as f64 * x);
        if next.abs() >= term.abs() && k > 1 {
            break;
        }
        term = next;
        sum += term;
        if term.abs() < EPS * sum.abs() {
            break;
        }
    }
    sum.ln() - 0.5 * (2.0 * PI * x).ln()
}

/// `ln I_ν(x)` by summing the power series outward from its largest term.
fn ln_series(nu: f64, x: f64) -> f64 {
    let q = 0.25 * x * x;
    // Term ratio t_{l+1}/t_l = q / ((l + 1)(l + 1 + ν)) drops below one here.
    let root = 0.5 * (-nu + (nu * nu + 4.0 * q).sqrt());
    let peak = (root.ceil() - 1.0).max(0.0);
    let ln_peak =
        (nu + 2.0 * peak) * (0.5 * x).ln() - ln_gamma_unchecked(peak + 1.0) - ln_gamma_unchecked(nu + peak + 1.0);

    let mut sum = 1.0;
    let mut t = 1.0;
    let mut l = peak;
    loop {
        t *= q / ((l + 1.0) * (l + 1.0 + nu));
        sum += t;
        l += 1.0;
        if t < EPS * sum {
            break;
        }
    }
    let mut t = 1.0;
    let mut l = peak;
    while l >= 1.0 {
        t *= l * (l + nu) / q;
        sum += t;
        l -= 1.0;
        if t < EPS * sum {
            break;
        }
    }
    ln_peak + sum.ln()
}

fn check_order(func: &'static str, nu: f64) -> Result<()> {
    if !(nu > -1.0) || !nu.is_finite() {
        return Err(Error::domain(func, format!("order ν = {nu} must exceed -1")));
    }
    Ok(())
}

/// `ln(e^{-x} I_ν(x))` for `ν > -1`, `x > 0`.
pub fn ln_bessel_i_scaled(nu: f64, x: f64) -> Result<f64> {
    check_order("ln_bessel_i_scaled", nu)?;
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain("ln_bessel_i_scaled", format!("x = {x} must be positive")));
    }
    Ok(ln_bessel_i_scaled_unchecked(nu, x))
}

pub(crate) fn ln_bessel_i_scaled_unchecked(nu: f64, x: f64) -> f64 {
    if asymptotic_applies(nu, x) {
        ln_scaled_asymptotic(nu, x)
    } else {
        ln_series(nu, x) - x
    }
}

/// `I_ν(x)` for `ν > -1`, `x > 0`, from the convergent series.
pub fn bessel_i(nu: f64, x: f64) -> Result<f64> {
    let ln = ln_bessel_i_scaled(nu, x)? + x;
    let v = ln.exp();
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::overflow("bessel_i", format!("I_{nu}({x}) exceeds f64 range")))
    }
}

/// `ln(e^{-z} I_ν(z) / z^ν)` for `z ≥ 0`.
///
/// The ratio is analytic at `z = 0`, which is what the η-μ kernels need when
/// `H → 0` (η = 1).
pub fn ln_bessel_i_ratio_scaled(nu: f64, z: f64) -> Result<f64> {
    check_order("ln_bessel_i_ratio_scaled", nu)?;
    if !(z >= 0.0) || !z.is_finite() {
        return Err(Error::domain("ln_bessel_i_ratio_scaled", format!("z = {z} must be non-negative")));
    }
    Ok(ln_bessel_i_ratio_scaled_unchecked(nu, z))
}

pub(crate) fn ln_bessel_i_ratio_scaled_unchecked(nu: f64, z: f64) -> f64 {
    let ln_lead = -nu * std::f64::consts::LN_2 - ln_gamma_unchecked(nu + 1.0);
    if z < 1e-8 {
        // Leading two terms of the reduced series.
        return ln_lead + (0.25 * z * z / (nu + 1.0)).ln_1p() - z;
    }
    if z < 1.0 {
        let q = 0.25 * z * z;
        let mut t = 1.0;
        let mut sum = 1.0;
        let mut l = 0.0;
        while t > EPS * sum {
            t *= q / ((l + 1.0) * (l + 1.0 + nu));
            sum += t;
            l += 1.0;
        }
        return ln_lead + sum.ln() - z;
    }
    ln_bessel_i_scaled_unchecked(nu, z) - nu * z.ln()
}

/// Exact finite-sum evaluation of `I_{n+1/2}(x)`.
///
/// The alternating sum is used directly while it is well conditioned; once the
/// cancellation between its terms would cost more than four digits (small `x`
/// relative to `n`), the convergent series for the same order is returned.
/// The `e^{x}`/`e^{-x}` pair is combined as `e^{x}(1 ± e^{-2x})` with
/// `expm1`, so the `n = 0` case is exact down to `x → 0`.
pub fn bessel_i_half_integer(n: u32, x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain("bessel_i_half_integer", format!("x = {x} must be positive")));
    }
    let minus_exp = -(-2.0 * x).exp_m1();
    let plus_exp = 1.0 + (-2.0 * x).exp();
    let mut sum = 0.0;
    let mut abs_sum = 0.0;
    // (n + k)! / (k! (n - k)!) built incrementally.
    let mut ratio = 1.0;
    for k in 0..=n {
        if k > 0 {
            let kf = f64::from(k);
            ratio *= (f64::from(n) + kf) * (f64::from(n) - kf + 1.0) / kf;
        }
        let same_sign = (k + n + 1) % 2 == 0;
        let combo = if same_sign { plus_exp } else { minus_exp };
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        let term = sign * ratio * combo / (2.0 * x).powf(f64::from(k) + 0.5);
        sum += term;
        abs_sum += term.abs();
    }
    let ln_prefactor = x - 0.5 * PI.ln();
    if sum > 0.0 && abs_sum / sum < 1e4 {
        let v = (ln_prefactor + sum.ln()).exp();
        return if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::overflow("bessel_i_half_integer", format!("I_{{{n}+1/2}}({x}) exceeds f64 range")))
        };
    }
    bessel_i(f64::from(n) + 0.5, x)
}

/// Order-`n` polynomial approximation of `I_ν(x)`:
/// `Σ_{l=0}^{n} Γ(n+l) n^{1-2l} / (Γ(l+1) Γ(n-l+1) Γ(ν+l+1)) (x/2)^{ν+2l}`.
///
/// The coefficient of `(x/2)^{ν+2l}` equals the series coefficient times
/// `Π_{j<l} (1 - j²/n²)`, so the error falls off like `1/n²`.
pub fn bessel_i_poly(nu: f64, x: f64, order: SeriesOrder) -> Result<f64> {
    if !(nu >= 0.0) || !nu.is_finite() {
        return Err(Error::domain("bessel_i_poly", format!("order ν = {nu} must be non-negative")));
    }
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain("bessel_i_poly", format!("x = {x} must be positive")));
    }
    let n = f64::from(order.get());
    let ln_half_x = (0.5 * x).ln();
    let mut sum = 0.0;
    for l in 0..=order.get() {
        let lf = f64::from(l);
        let ln_term = ln_gamma_unchecked(n + lf) - ln_gamma_unchecked(lf + 1.0) - ln_gamma_unchecked(n - lf + 1.0)
            + (1.0 - 2.0 * lf) * n.ln()
            - ln_gamma_unchecked(nu + lf + 1.0)
            + (nu + 2.0 * lf) * ln_half_x;
        sum += ln_term.exp();
    }
    if sum.is_finite() {
        Ok(sum)
    } else {
        Err(Error::overflow(
            "bessel_i_poly",
            format!("x = {x} too large for order {n}; the truncated polynomial is unreliable there"),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn series_matches_reference() {
        // mpmath, 40 digits.
        let cases = [
            (0.5, 1.0, 0.937_674_888_245_487_646_72),
            (1.5, 2.0, 1.099_473_188_633_109_675_5),
            (0.1, 0.3, 0.887_378_418_232_008_741_42),
            (-0.3, 1.2, 1.410_906_597_227_134_540_1),
            (2.0, 50.0, 2.816_430_640_245_194_054_8e20),
            (4.5, 120.0, 4.368_358_667_328_270_842e50),
            (6.5, 0.1, 1.867_742_398_259_506_096e-12),
            (1.3, 35.0, 104_741_398_161_831.396_27),
        ];
        for (nu, x, want) in cases {
            let got = bessel_i(nu, x).unwrap();
            assert!(rel(got, want) < 1e-12, "I_{nu}({x}) = {got}, want {want}");
        }
        let ln = ln_bessel_i_scaled(0.0, 700.0).unwrap() + 700.0;
        assert!(rel(ln, 1.529_593_347_671_873_736_3e302_f64.ln()) < 1e-14);
    }

    #[test]
    fn series_and_asymptotic_agree_at_switch() {
        for &nu in &[0.0, 0.5, 2.3, 5.0] {
            let x = f64::max(30.0, nu * nu) + 1e-9;
            let a = ln_series(nu, x) - x;
            let b = ln_scaled_asymptotic(nu, x);
            assert!((a - b).abs() < 1e-13, "ν={nu}: {a} vs {b}");
        }
    }

    #[test]
    fn half_integer_examples() {
        let v = bessel_i_half_integer(0, 1.0).unwrap();
        assert!(rel(v, (2.0 / PI).sqrt() * 1f64.sinh()) < 1e-15);
        assert!(rel(v, 0.937_674_888_245_444_4) < 1e-13);
        // n = 1: sqrt(2/(2π)) (cosh 2 - sinh 2 / 2).
        let v = bessel_i_half_integer(1, 2.0).unwrap();
        let want = (1.0 / PI).sqrt() * (2f64.cosh() - 2f64.sinh() / 2.0);
        assert!(rel(v, want) < 1e-14);
        assert!(rel(v, 1.099_473_188_633_109_7) < 1e-13);
        // Small-argument behaviour of I_{1/2}.
        let x = 1e-6;
        let lead = (2.0 * x / PI).sqrt() * (1.0 + x * x / 6.0);
        assert!(rel(bessel_i_half_integer(0, x).unwrap(), lead) < 1e-12);
    }

    #[test]
    fn half_integer_matches_series_on_grid() {
        for n in 0..=6u32 {
            for i in 0..60 {
                let x = 0.1 * (500f64).powf(i as f64 / 59.0);
                let a = bessel_i_half_integer(n, x).unwrap();
                let b = bessel_i(f64::from(n) + 0.5, x).unwrap();
                assert!(rel(a, b) < 1e-10, "n={n} x={x}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn ratio_is_smooth_through_zero() {
        for &nu in &[-0.4, 0.0, 0.1, 1.3, 4.5] {
            let at0 = ln_bessel_i_ratio_scaled(nu, 0.0).unwrap();
            let lead = -nu * std::f64::consts::LN_2 - ln_gamma_unchecked(nu + 1.0);
            assert!((at0 - lead).abs() < 1e-15);
            for &z in &[1e-9, 1e-3, 0.5, 0.999, 1.0, 3.0, 80.0] {
                let r = ln_bessel_i_ratio_scaled(nu, z).unwrap();
                let direct = ln_bessel_i_scaled(nu, z).unwrap() - nu * z.ln();
                assert!((r - direct).abs() < 1e-12, "ν={nu} z={z}: {r} vs {direct}");
            }
        }
    }

    #[test]
    fn poly_first_two_coefficients_are_exact() {
        // For l ≤ 1 the printed coefficient equals 1/(l! Γ(ν+l+1)) exactly, so at
        // small x the approximation error is governed by the l = 2 term.
        let nu = 0.5;
        let x = 1e-3;
        let series = bessel_i(nu, x).unwrap();
        let poly = bessel_i_poly(nu, x, SeriesOrder::new(5).unwrap()).unwrap();
        assert!(rel(poly, series) < 1e-13);
    }

    #[test]
    fn poly_refines_monotonically_with_order() {
        for &(nu, x) in &[(0.5, 1.0), (1.5, 5.0), (3.5, 12.0), (0.1, 0.7)] {
            let exact = bessel_i(nu, x).unwrap();
            let mut prev = f64::INFINITY;
            for n in [1u32, 2, 4, 8, 16, 32, 64, 128] {
                let e = rel(bessel_i_poly(nu, x, SeriesOrder::new(n).unwrap()).unwrap(), exact);
                assert!(e <= prev * (1.0 + 1e-12), "ν={nu} x={x} n={n}: {e} > {prev}");
                prev = e;
            }
        }
    }

    #[test]
    fn poly_error_decays_like_inverse_square_order() {
        // Frozen from mpmath: relative errors at (ν, x) = (0.5, 1) for n = 20, 40.
        let exact = bessel_i(0.5, 1.0).unwrap();
        let e20 = rel(bessel_i_poly(0.5, 1.0, SeriesOrder::new(20).unwrap()).unwrap(), exact);
        let e40 = rel(bessel_i_poly(0.5, 1.0, SeriesOrder::new(40).unwrap()).unwrap(), exact);
        assert!(rel(e20, 1.991_658_774_249_129e-5) < 1e-6);
        assert!(rel(e40, 4.980_079_597_820_43e-6) < 1e-6);
        assert!((e20 / e40 - 4.0).abs() < 0.01);
    }

    #[test]
    fn poly_vanishes_at_small_argument() {
        let v = bessel_i_poly(2.0, 1e-12, SeriesOrder::default()).unwrap();
        assert!(v < 1e-24);
    }

    #[test]
    fn domain_errors() {
        assert!(bessel_i_half_integer(2, 0.0).is_err());
        assert!(bessel_i_poly(-0.5, 1.0, SeriesOrder::default()).is_err());
        assert!(bessel_i_poly(0.5, -1.0, SeriesOrder::default()).is_err());
        assert!(bessel_i(-1.5, 1.0).is_err());
        assert!(matches!(
            bessel_i_poly(0.5, 2000.0, SeriesOrder::new(400).unwrap()),
            Err(Error::Overflow { .. })
        ));
    }
}
