//! Series kernels `T` with `p(z) = kappa * z^rho * T(z)`.
//!
//! Each family member factors through an even entire function
//! `T(z) = sum_k t_k z^{2k}` with `t_0 = 1` whose positive zeros are the
//! positive zeros of the member itself: for Bessel-type families `T` is the
//! prefactor-stripped power series, for Lommel it is the hypergeometric
//! factor `1F2(1; (mu+2)/2, (mu+3)/2; -z^2/4)`, and for `P_{2m-1}` it is the
//! polynomial `P_{2m-1}(z) / (P'_{2m-1}(0) z)`.
//!
//! The coefficients satisfy first-order ratio recurrences:
//!
//! * Bessel:      `t_{k+1}/t_k = -1 / (4 (k+1)(k+nu+1))`
//! * Jackson:     `t_{k+1}/t_k = -q^{2k+1+nu} / (4 (1-q^{k+nu+1})(1-q^{k+1}))`
//! * Hahn-Exton:  `t_{k+1}/t_k = -q^{k+1} / ((1-q^{k+nu+1})(1-q^{k+1}))`
//! * Lommel:      `t_{k+1}/t_k = -1 / ((mu+2+2k)(mu+3+2k))`
//!
//! so the whole table is built once per kernel and reused by every zero
//! scan, radius solve, and boundary sample. All evaluation happens on `T`
//! and its first two derivatives; the prefactor `kappa * z^rho` is applied
//! only on the positive real axis (or for integer `rho`), never through a
//! branch cut.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::config::SeriesConfig;
use crate::error::{Error, Result};
use crate::family::FamilySpec;
use crate::gamma::gamma;
use crate::qseries::q_pochhammer_ratio;

/// Value of a family member (or a derivative) returned by [`eval_family`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EvalResult {
    pub value: Complex64,
    pub terms_used: usize,
    /// Absolute bound on the dropped series tail plus accumulated roundoff.
    pub truncation_bound: f64,
}

/// `T`, `T'`, `T''` at one point, with the truncation diagnostics.
#[derive(Debug, Clone, Copy)]
pub struct KernelJet {
    pub t: Complex64,
    pub dt: Complex64,
    pub ddt: Complex64,
    pub terms_used: usize,
    pub truncation_bound: f64,
}

/// Real-axis restriction of [`KernelJet`].
#[derive(Debug, Clone, Copy)]
pub struct RealJet {
    pub t: f64,
    pub dt: f64,
    pub ddt: f64,
}

/// A family member reduced to its even series part.
#[derive(Debug, Clone)]
pub struct Kernel {
    family: FamilySpec,
    coeffs: Vec<f64>,
    rho: f64,
    kappa: f64,
    /// Legendre kernels are polynomials: the coefficient list is exact and
    /// exhaustive, not a truncation.
    polynomial: bool,
    cfg: SeriesConfig,
}

impl Kernel {
    pub fn new(family: &FamilySpec, cfg: &SeriesConfig) -> Result<Self> {
        family.validate()?;
        cfg.validate()?;
        let (coeffs, kappa, polynomial) = match *family {
            FamilySpec::BesselJ { nu } => {
                let c = ratio_coeffs(cfg.max_terms + 2, |k| {
                    let k = k as f64;
                    -1.0 / (4.0 * (k + 1.0) * (k + nu + 1.0))
                });
                let kappa = 1.0 / (2f64.powf(nu) * gamma(nu + 1.0)?);
                (c, kappa, false)
            }
            FamilySpec::JacksonQ { nu, q } => {
                let c = ratio_coeffs(cfg.max_terms + 2, |k| {
                    let k = k as f64;
                    -q.powf(2.0 * k + 1.0 + nu)
                        / (4.0 * (1.0 - q.powf(k + nu + 1.0)) * (1.0 - q.powi(k as i32 + 1)))
                });
                let c_nu = q_pochhammer_ratio(q, q.powf(nu + 1.0), q)?;
                (c, 1.0 / (2f64.powf(nu) * c_nu), false)
            }
            FamilySpec::HahnExtonQ { nu, q } => {
                let c = ratio_coeffs(cfg.max_terms + 2, |k| {
                    let k = k as f64;
                    -q.powf(k + 1.0) / ((1.0 - q.powf(k + nu + 1.0)) * (1.0 - q.powf(k + 1.0)))
                });
                let c_nu = q_pochhammer_ratio(q, q.powf(nu + 1.0), q)?;
                (c, 1.0 / c_nu, false)
            }
            FamilySpec::Lommel { mu } => {
                let c = ratio_coeffs(cfg.max_terms + 2, |k| {
                    let k = 2.0 * k as f64;
                    -1.0 / ((mu + 2.0 + k) * (mu + 3.0 + k))
                });
                (c, 1.0 / (mu * (mu + 1.0)), false)
            }
            FamilySpec::LegendreOdd { m } => {
                let poly = legendre_coeffs(2 * m as usize - 1);
                let c1 = poly[1];
                let t: Vec<f64> = (0..m as usize).map(|k| poly[2 * k + 1] / c1).collect();
                (t, c1, true)
            }
        };
        Ok(Kernel {
            family: *family,
            coeffs,
            rho: family.rho(),
            kappa,
            polynomial,
            cfg: *cfg,
        })
    }

    pub fn family(&self) -> &FamilySpec {
        &self.family
    }

    pub fn rho(&self) -> f64 {
        self.rho
    }

    /// Constant `kappa` with `p(z) = kappa z^rho T(z)`; negative for some
    /// Lommel and Legendre parameters.
    pub fn kappa(&self) -> f64 {
        self.kappa
    }

    pub fn coeff(&self, k: usize) -> f64 {
        self.coeffs.get(k).copied().unwrap_or(0.0)
    }

    pub fn is_polynomial(&self) -> bool {
        self.polynomial
    }

    /// Evaluate `T`, `T'`, `T''` at complex `z`.
    ///
    /// With `u = z^2`: `T = S0(u)`, `T' = 2z S1(u)`, `T'' = 2 S2(u)` where
    /// `S0 = sum t_k u^k`, `S1 = sum k t_k u^{k-1}`,
    /// `S2 = sum k(2k-1) t_k u^{k-1}`, so one pass yields all three and the
    /// formulas stay finite at `z = 0`.
    pub fn eval(&self, z: Complex64) -> Result<KernelJet> {
        if !z.re.is_finite() || !z.im.is_finite() {
            return Err(Error::InvalidArgument(format!("non-finite argument {z}")));
        }
        let u = z * z;
        let au = u.norm();
        let mut s0 = Complex64::new(0.0, 0.0);
        let mut s1 = s0;
        let mut s2 = s0;
        let mut pow = Complex64::new(1.0, 0.0); // u^k
        let mut pow_prev = pow; // u^{k-1}, meaningful from k = 1
        let mut apow = 1.0f64; // |u|^k
        let mut abs_sum = 0.0f64;
        let tiny = 1e-300f64;

        let n_avail = self.coeffs.len();
        let limit = if self.polynomial {
            n_avail
        } else {
            self.cfg.max_terms.min(n_avail)
        };
        for k in 0..limit {
            let tk = self.coeffs[k];
            s0 += tk * pow;
            abs_sum += tk.abs() * apow;
            if k >= 1 {
                let kf = k as f64;
                s1 += kf * tk * pow_prev;
                s2 += kf * (2.0 * kf - 1.0) * tk * pow_prev;
            }

            // Lookahead magnitudes of the next term in each partial sum.
            let t_next = self.coeff(k + 1);
            let m0 = t_next.abs() * apow * au;
            let kf1 = (k + 1) as f64;
            let m1 = kf1 * t_next.abs() * apow;
            let m2 = kf1 * (2.0 * kf1 + 1.0) * t_next.abs() * apow;
            let enough = k + 1 >= self.cfg.min_terms || k + 1 >= limit;
            let settled = m0 <= self.cfg.rel_tol * s0.norm().max(tiny)
                && m1 <= self.cfg.rel_tol * s1.norm().max(tiny)
                && m2 <= self.cfg.rel_tol * s2.norm().max(tiny);
            // Only trust the lookahead once the term ratio is clearly below 1,
            // i.e. past the hump of the series.
            let ratio = if t_next.abs() > 0.0 {
                au * (self.coeff(k + 2) / t_next).abs()
            } else {
                0.0
            };
            if enough && settled && ratio < 0.9 {
                let tail = if t_next.abs() > 0.0 {
                    (m0.max(m2)) / (1.0 - ratio)
                } else {
                    0.0
                };
                let terms = k + 1;
                let round = terms as f64 * f64::EPSILON * abs_sum;
                return Ok(KernelJet {
                    t: s0,
                    dt: 2.0 * z * s1,
                    ddt: 2.0 * s2,
                    terms_used: terms,
                    truncation_bound: tail + round,
                });
            }

            pow_prev = pow;
            pow *= u;
            apow *= au;
        }
        if self.polynomial {
            let round = n_avail as f64 * f64::EPSILON * abs_sum;
            return Ok(KernelJet {
                t: s0,
                dt: 2.0 * z * s1,
                ddt: 2.0 * s2,
                terms_used: n_avail,
                truncation_bound: round,
            });
        }
        Err(Error::NonConvergence {
            max_terms: self.cfg.max_terms,
            abs_z: z.norm(),
        })
    }

    /// [`Kernel::eval`] restricted to the real axis.
    ///
    /// Complex arithmetic on inputs with zero imaginary part produces exactly
    /// zero imaginary parts here, so the restriction is exact.
    pub fn eval_real(&self, x: f64) -> Result<RealJet> {
        let jet = self.eval(Complex64::new(x, 0.0))?;
        Ok(RealJet {
            t: jet.t.re,
            dt: jet.dt.re,
            ddt: jet.ddt.re,
        })
    }

    /// The family member itself (`order` = 0) or its first or second
    /// derivative at real `x > 0`, prefactor included:
    ///
    /// * `p   = kappa x^rho T`
    /// * `p'  = kappa x^(rho-1) (rho T + x T')`
    /// * `p'' = kappa x^(rho-2) (rho(rho-1) T + 2 rho x T' + x^2 T'')`
    pub fn underlying_real(&self, x: f64, order: u32) -> Result<f64> {
        if x <= 0.0 || x.is_nan() {
            return Err(Error::InvalidArgument(format!(
                "underlying_real needs x > 0, got {x}"
            )));
        }
        let jet = self.eval_real(x)?;
        let rho = self.rho;
        Ok(match order {
            0 => self.kappa * x.powf(rho) * jet.t,
            1 => self.kappa * x.powf(rho - 1.0) * (rho * jet.t + x * jet.dt),
            2 => {
                self.kappa
                    * x.powf(rho - 2.0)
                    * (rho * (rho - 1.0) * jet.t + 2.0 * rho * x * jet.dt + x * x * jet.ddt)
            }
            _ => {
                return Err(Error::InvalidArgument(format!(
                    "derivative order {order} not supported"
                )))
            }
        })
    }
}

fn ratio_coeffs(n: usize, ratio: impl Fn(usize) -> f64) -> Vec<f64> {
    let mut c = Vec::with_capacity(n);
    c.push(1.0);
    for k in 0..n - 1 {
        let next = c[k] * ratio(k);
        c.push(next);
        if next == 0.0 {
            break;
        }
    }
    c
}

/// Monomial coefficients of `P_n` via the three-term recurrence
/// `(k+1) P_{k+1} = (2k+1) x P_k - k P_{k-1}`.
fn legendre_coeffs(n: usize) -> Vec<f64> {
    let mut prev = vec![1.0];
    if n == 0 {
        return prev;
    }
    let mut cur = vec![0.0, 1.0];
    for k in 1..n {
        let mut next = vec![0.0; k + 2];
        for (i, &c) in cur.iter().enumerate() {
            next[i + 1] += (2.0 * k as f64 + 1.0) * c;
        }
        for (i, &c) in prev.iter().enumerate() {
            next[i] -= k as f64 * c;
        }
        for v in &mut next {
            *v /= k as f64 + 1.0;
        }
        prev = cur;
        cur = next;
    }
    cur
}

/// Evaluate a family member or one of its first two derivatives.
///
/// The fractional-power prefactor `kappa z^rho` is applied for real
/// `z >= 0` (and for integer `rho` anywhere); other arguments are an error,
/// since every exported quantity is defined through the prefactor-free
/// kernel — see [`Kernel::eval`] for that route.
pub fn eval_family(
    family: &FamilySpec,
    z: Complex64,
    order: u32,
    cfg: &SeriesConfig,
) -> Result<EvalResult> {
    if order > 2 {
        return Err(Error::InvalidArgument(format!(
            "derivative order {order} not supported"
        )));
    }
    let kernel = Kernel::new(family, cfg)?;
    let rho = kernel.rho();
    let kappa = kernel.kappa();
    let rho_int = rho.fract() == 0.0 && rho >= 0.0;

    if z.im == 0.0 && z.re >= 0.0 {
        let x = z.re;
        if x == 0.0 {
            let value = value_at_origin(&kernel, order)?;
            return Ok(EvalResult {
                value: Complex64::new(value, 0.0),
                terms_used: 1,
                truncation_bound: 0.0,
            });
        }
        let jet = kernel.eval(z)?;
        let value = match order {
            0 => kappa * x.powf(rho) * jet.t.re,
            1 => kappa * x.powf(rho - 1.0) * (rho * jet.t.re + x * jet.dt.re),
            _ => {
                kappa
                    * x.powf(rho - 2.0)
                    * (rho * (rho - 1.0) * jet.t.re
                        + 2.0 * rho * x * jet.dt.re
                        + x * x * jet.ddt.re)
            }
        };
        return Ok(EvalResult {
            value: Complex64::new(value, 0.0),
            terms_used: jet.terms_used,
            truncation_bound: kappa.abs() * x.powf(rho - order as f64) * jet.truncation_bound,
        });
    }

    if !rho_int {
        return Err(Error::InvalidArgument(
            "fractional-power prefactor is only applied on the positive real axis; \
             use Kernel::eval for the series part"
                .into(),
        ));
    }
    let jet = kernel.eval(z)?;
    let n = rho as i32;
    let value = match order {
        0 => kappa * z.powi(n) * jet.t,
        1 => kappa * z.powi(n - 1) * (rho * jet.t + z * jet.dt),
        _ => {
            kappa
                * z.powi(n - 2)
                * (rho * (rho - 1.0) * jet.t + 2.0 * rho * z * jet.dt + z * z * jet.ddt)
        }
    };
    Ok(EvalResult {
        value,
        terms_used: jet.terms_used,
        truncation_bound: kappa.abs() * z.norm().powi(n - order as i32) * jet.truncation_bound,
    })
}

fn value_at_origin(kernel: &Kernel, order: u32) -> Result<f64> {
    let rho = kernel.rho();
    let d = order as f64;
    if rho > d {
        return Ok(0.0);
    }
    // Only the term kappa t_k z^{2k+rho} with 2k + rho = order survives.
    if rho.fract() == 0.0 && rho >= 0.0 {
        let diff = d - rho;
        if diff.rem_euclid(2.0) == 0.0 {
            let k = (diff / 2.0) as usize;
            let mut fact = 1.0;
            for i in 1..=order {
                fact *= i as f64;
            }
            return Ok(kernel.kappa() * kernel.coeff(k) * fact);
        }
        return Ok(0.0);
    }
    Err(Error::InvalidArgument(format!(
        "derivative of order {order} at the origin is unbounded for leading exponent {rho}"
    )))
}
