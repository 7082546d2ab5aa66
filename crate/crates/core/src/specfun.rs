//! Complex dilogarithm and the Lobachevsky function.
//!
//! `dilog` evaluates the principal branch of Li₂. Arguments are first mapped
//! into the region `|w| <= 1, Re w <= 1/2` with the inversion
//! `Li₂(z) + Li₂(1/z) = -π²/6 - ½ log²(-z)` and the reflection
//! `Li₂(z) + Li₂(1-z) = π²/6 - log z · log(1-z)`. Inside that region the
//! Bernoulli series in `u = -log(1-w)` is used; there `|u| < 1.3`, so the
//! series converges geometrically with ratio below 0.05, including on the
//! unit circle near `e^{±iπ/3}` where the plain power series stalls.
//!
//! `lobachevsky` is computed from the Clausen series and does not go through
//! `dilog`, so the two can be checked against each other via
//! `Λ(θ) = ½ Im Li₂(e^{2iθ})`.
//!
//! On the real ray `(1, ∞)` the branch follows the sign of the zero imaginary
//! part: `+0.0` gives the limit from the upper half plane.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

pub type ComplexValue = Complex64;

const PI2_6: f64 = PI * PI / 6.0;

/// `B_{2k} / (2k+1)!` for k = 1..=22.
const DILOG_BERNOULLI: [f64; 22] = [
    0.027777777777777776,
    -0.0002777777777777778,
    4.72411186696901e-06,
    -9.185773074661964e-08,
    1.8978869988971e-09,
    -4.0647616451442256e-11,
    8.921691020456452e-13,
    -1.9939295860721074e-14,
    4.518980029619918e-16,
    -1.0356517612181247e-17,
    2.395218621026187e-19,
    -5.581785874325009e-21,
    1.3091507554183213e-22,
    -3.0874198024267403e-24,
    7.315975652702203e-26,
    -1.740845657234001e-27,
    4.1576356446139e-29,
    -9.962148488284622e-31,
    2.3940344248961652e-32,
    -5.76834735536739e-34,
    1.393179479647008e-35,
    -3.3721219654850894e-37,
];

/// `|B_{2k}| / (2k (2k+1)!)` for k = 1..=30.
const CLAUSEN_BERNOULLI: [f64; 30] = [
    0.013888888888888888,
    6.944444444444444e-05,
    7.873519778281683e-07,
    1.1482216343327455e-08,
    1.8978869988971e-10,
    3.387301370953521e-12,
    6.372636443183181e-14,
    1.2462059912950672e-15,
    2.5105444608999545e-17,
    5.178258806090623e-19,
    1.0887357368300849e-20,
    2.325744114302087e-22,
    5.03519521314739e-24,
    1.1026499294381215e-25,
    2.4386585509007344e-27,
    5.440142678856253e-29,
    1.2228340131217352e-30,
    2.767263468967951e-32,
    6.3000905918320136e-34,
    1.4420868388418476e-35,
    3.3170939991595428e-37,
    7.663913557920658e-39,
    1.7778714733830659e-40,
    4.1396058982341375e-42,
    9.671557036081102e-44,
    2.2667187016766123e-45,
    5.327956311328254e-47,
    1.2557248389564336e-48,
    2.967000542247094e-50,
    7.026787317600742e-52,
];

/// Principal branch of the dilogarithm `Li₂(z) = -∫₀^z log(1-t)/t dt`.
pub fn dilog(z: ComplexValue) -> Result<ComplexValue> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::domain(format!("dilog argument {z} is not finite")));
    }
    let value = dilog_unchecked(z);
    if value.re.is_finite() && value.im.is_finite() {
        Ok(value)
    } else {
        Err(Error::NonFinite("dilog"))
    }
}

fn dilog_unchecked(z: Complex64) -> Complex64 {
    if z == Complex64::new(0.0, 0.0) {
        return z;
    }
    if z == Complex64::new(1.0, 0.0) {
        return Complex64::new(PI2_6, 0.0);
    }
    if z.norm_sqr() > 1.0 {
        let log_neg = (-z).ln();
        return -PI2_6 - 0.5 * log_neg * log_neg - dilog_unit_disk(z.inv());
    }
    dilog_unit_disk(z)
}

/// `|z| <= 1`.
fn dilog_unit_disk(z: Complex64) -> Complex64 {
    if z.re > 0.5 {
        let w = 1.0 - z;
        if w == Complex64::new(0.0, 0.0) {
            return Complex64::new(PI2_6, 0.0);
        }
        // |w| <= 1 and Re w < 1/2 here.
        PI2_6 - z.ln() * w.ln() - bernoulli_series(w)
    } else {
        bernoulli_series(z)
    }
}

/// Li₂(w) = u - u²/4 + Σ B_{2k} u^{2k+1}/(2k+1)!, u = -log(1-w).
fn bernoulli_series(w: Complex64) -> Complex64 {
    let u = -(1.0 - w).ln();
    let u2 = u * u;
    let mut sum = u - 0.25 * u2;
    let mut power = u;
    for &coef in DILOG_BERNOULLI.iter() {
        power *= u2;
        let term = coef * power;
        sum += term;
        if term.norm() <= 1e-18 * sum.norm() {
            break;
        }
    }
    sum
}

/// Lobachevsky function `Λ(θ) = -∫₀^θ log|2 sin t| dt`.
///
/// Odd and π-periodic; `Λ(θ) = ½ Cl₂(2θ)`.
pub fn lobachevsky(theta: f64) -> Result<f64> {
    if !theta.is_finite() {
        return Err(Error::domain(format!(
            "Lobachevsky argument {theta} is not finite"
        )));
    }
    let reduced = theta - PI * (theta / PI).round();
    Ok(0.5 * clausen_principal(2.0 * reduced))
}

/// Cl₂(x) for |x| <= π.
fn clausen_principal(x: f64) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    let ax = x.abs();
    let x2 = x * x;
    let mut sum = x - x * ax.ln();
    let mut power = x;
    for &coef in CLAUSEN_BERNOULLI.iter() {
        power *= x2;
        let term = coef * power;
        sum += term;
        if term.abs() <= 1e-18 * ax {
            break;
        }
    }
    sum
}
