//! Shared helpers for the integration tests: an integral-representation
//! Bessel oracle that shares no code with the power-series kernel under
//! test, plus a tiny deterministic generator for sample points.
#![allow(dead_code)]

use std::f64::consts::PI;

/// `J_n(x)` for integer `n` via the trapezoid rule on
/// `(1/pi) * integral_0^pi cos(n t - x sin t) dt`.
///
/// The integrand extends to a smooth 2pi-periodic function, so the
/// trapezoid sum converges geometrically once the panel count passes
/// `x/2`; the choice below keeps the error near machine precision for
/// arguments up to several hundred.
pub fn bessel_j_oracle(n: u32, x: f64) -> f64 {
    let panels = (1.15 * x) as usize + 60;
    let h = PI / panels as f64;
    let n = n as f64;
    let mut sum = 0.5 * (1.0 + (n * PI).cos());
    for k in 1..panels {
        let t = k as f64 * h;
        sum += (n * t - x * t.sin()).cos();
    }
    sum * h / PI
}

/// `k`-th positive zero of `J_n` (`k >= 1`): McMahon's asymptotic guess
/// refined by bisection on the integral oracle.
pub fn bessel_zero_oracle(n: u32, k: u32) -> f64 {
    let beta = (k as f64 + n as f64 / 2.0 - 0.25) * PI;
    let mu = 4.0 * (n as f64) * (n as f64);
    let guess = beta - (mu - 1.0) / (8.0 * beta);
    let (mut lo, mut hi) = (guess - 0.4, guess + 0.4);
    let mut f_lo = bessel_j_oracle(n, lo);
    assert!(
        f_lo * bessel_j_oracle(n, hi) < 0.0,
        "McMahon bracket misses the zero for n = {n}, k = {k}"
    );
    for _ in 0..80 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let f_mid = bessel_j_oracle(n, mid);
        if f_mid == 0.0 {
            return mid;
        }
        if (f_lo < 0.0) == (f_mid < 0.0) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Deterministic 64-bit LCG for reproducible sample points.
pub struct Lcg(u64);

impl Lcg {
    pub fn new(seed: u64) -> Self {
        Self(seed)
    }

    /// Uniform draw from [0, 1).
    pub fn next_f64(&mut self) -> f64 {
        self.0 = self
            .0
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        (self.0 >> 11) as f64 / (1u64 << 53) as f64
    }
}
