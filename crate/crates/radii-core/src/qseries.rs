//! q-Pochhammer symbols `(a; q)_n`.

use crate::error::{Error, Result};

fn check_q(q: f64) -> Result<()> {
    if !q.is_finite() || q <= 0.0 || q >= 1.0 {
        return Err(Error::InvalidArgument(format!(
            "q-Pochhammer needs 0 < q < 1, got q = {q}"
        )));
    }
    Ok(())
}

/// Finite product `(a; q)_n = prod_{k=0}^{n-1} (1 - a q^k)`; `(a; q)_0 = 1`.
pub fn q_pochhammer(a: f64, q: f64, n: u32) -> Result<f64> {
    check_q(q)?;
    let mut prod = 1.0;
    let mut aq = a;
    for _ in 0..n {
        prod *= 1.0 - aq;
        aq *= q;
    }
    Ok(prod)
}

/// Infinite product `(a; q)_inf`, truncated once the factors are within
/// one ulp of 1.
pub fn q_pochhammer_infinite(a: f64, q: f64) -> Result<f64> {
    check_q(q)?;
    let mut prod = 1.0;
    let mut aq = a;
    let mut k: u64 = 0;
    while aq.abs() > 1e-18 {
        prod *= 1.0 - aq;
        aq *= q;
        k += 1;
        if k > 100_000_000 {
            return Err(Error::NonConvergence {
                max_terms: 100_000_000,
                abs_z: a.abs(),
            });
        }
    }
    Ok(prod)
}

/// Ratio `(a; q)_inf / (b; q)_inf` accumulated factor by factor.
///
/// Written as a single product so the value survives q near 1, where each
/// infinite product alone underflows (e.g. `(0.999; 0.999)_inf ~ 1e-715`).
pub fn q_pochhammer_ratio(a: f64, b: f64, q: f64) -> Result<f64> {
    check_q(q)?;
    let scale = (a.abs() + b.abs()).max(1.0);
    let mut prod = 1.0;
    let mut qk = 1.0;
    let mut k: u64 = 0;
    // The log of the dropped tail is bounded by |a - b| q^k / (1 - q).
    while scale * qk / (1.0 - q) > 1e-18 {
        let den = 1.0 - b * qk;
        if den == 0.0 {
            return Err(Error::InvalidArgument(format!(
                "({b}; {q})_inf vanishes at factor {k}"
            )));
        }
        prod *= (1.0 - a * qk) / den;
        qk *= q;
        k += 1;
        if k > 100_000_000 {
            return Err(Error::NonConvergence {
                max_terms: 100_000_000,
                abs_z: a.abs().max(b.abs()),
            });
        }
    }
    Ok(prod)
}
