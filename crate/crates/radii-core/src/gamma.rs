//! Gamma function on the positive real axis.
//!
//! A Lanczos approximation (g = 7, 9 coefficients) evaluated without the
//! reflection formula: the normalization constants `1/(2^nu Gamma(nu+1))`
//! only ever need `nu > -1`, i.e. arguments `> 0`, where this form is
//! accurate to a few ulps.

use crate::error::{Error, Result};

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

/// `Gamma(x)` for `x > 0`.
pub fn gamma(x: f64) -> Result<f64> {
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::InvalidArgument(format!(
            "gamma is only evaluated for x > 0, got {x}"
        )));
    }
    // Shift small arguments up through Gamma(x) = Gamma(x+1)/x so the core
    // approximation always runs at x >= 1 where it is most accurate.
    if x < 1.0 {
        return Ok(gamma_core(x + 1.0) / x);
    }
    Ok(gamma_core(x))
}

fn gamma_core(x: f64) -> f64 {
    let z = x - 1.0;
    let mut acc = LANCZOS_COEF[0];
    for (i, c) in LANCZOS_COEF.iter().enumerate().skip(1) {
        acc += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    (2.0 * std::f64::consts::PI).sqrt() * t.powf(z + 0.5) * (-t).exp() * acc
}
