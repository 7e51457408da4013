//! Real-axis zero location for the kernel and its derivative combinations.
//!
//! Every domain cap used by the radius solver is the first positive zero of
//! either the family member `p` itself, of `p'`, or of a combination
//! `z p' + c p`. In kernel form (`p = kappa z^rho T`) these are, for `x > 0`,
//! the zeros of
//!
//! * `T(x)`                      (function)
//! * `rho T(x) + x T'(x)`        (derivative)
//! * `(rho + c) T(x) + x T'(x)`  (combination with coefficient `c`)
//!
//! The strategy is deliberately plain: walk outward from just past the
//! origin with a family-sized step until the sign flips, rescan the crossed
//! stretch at one eighth of the step to make sure a close pair of zeros was
//! not jumped over, then bisect. If a whole sweep sees no sign change the
//! step is halved and the sweep repeated, a bounded number of times.

use serde::{Deserialize, Serialize};

use crate::config::SeriesConfig;
use crate::error::{Error, Result};
use crate::family::FamilySpec;
use crate::kernel::Kernel;

/// Which function of the kernel the scan is hunting zeros of.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ComboKind {
    /// Zeros of the family member itself (equivalently of `T`).
    Function,
    /// Zeros of its first derivative.
    Derivative,
    /// Zeros of `z p'(z) + c p(z)`.
    Combination(f64),
}

/// A family member together with the derivative combination to scan.
#[derive(Debug, Clone)]
pub struct ZeroTarget {
    pub family: FamilySpec,
    pub combo: ComboKind,
}

/// Scan geometry: where to start, how far apart the probe points sit and
/// how far out to give up.
#[derive(Debug, Clone, Copy)]
pub struct ScanParams {
    pub start: f64,
    pub step: f64,
    pub max_span: f64,
}

impl Default for ScanParams {
    fn default() -> Self {
        Self {
            start: 1e-3,
            step: 0.05,
            max_span: 60.0,
        }
    }
}

impl ScanParams {
    /// Step sizes that respect the zero spacing of each family: Bessel-type
    /// zeros spread out with growing order, Legendre roots crowd together
    /// with growing degree and all lie inside the unit interval.
    pub fn for_family(family: &FamilySpec) -> Self {
        let base = Self::default();
        match family {
            FamilySpec::LegendreOdd { m } => Self {
                step: (0.2 / *m as f64).min(0.1),
                max_span: 2.0,
                ..base
            },
            _ => Self {
                step: 0.05 * (1.0 + family.rho().max(0.0)),
                ..base
            },
        }
    }
}

/// One located zero with the bracket it was refined from.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ZeroResult {
    pub location: f64,
    /// Scan-level bracket the bisection started from.
    pub bracket: (f64, f64),
    /// `|W(location)|` for the scanned combination `W`.
    pub residual: f64,
    /// Probe spacing of the pass that produced the bracket.
    pub scan_step: f64,
}

const MAX_STEP_HALVINGS: u32 = 6;

struct ComboFn<'a> {
    kernel: &'a Kernel,
    /// `W(x) = shift * T + x T'`, up to the positive factor
    /// `kappa x^(rho-1)` that cannot vanish for `x > 0`; `None` scans the
    /// plain kernel `T`.
    shift: Option<f64>,
}

impl<'a> ComboFn<'a> {
    fn new(kernel: &'a Kernel, combo: ComboKind) -> Self {
        let shift = match combo {
            ComboKind::Function => None,
            ComboKind::Derivative => Some(kernel.rho()),
            ComboKind::Combination(c) => Some(kernel.rho() + c),
        };
        Self { kernel, shift }
    }

    fn eval(&self, x: f64) -> Result<f64> {
        let jet = self.kernel.eval_real(x)?;
        let w = match self.shift {
            None => jet.t,
            Some(shift) => shift * jet.t + x * jet.dt,
        };
        if !w.is_finite() {
            return Err(Error::BracketFailure(format!(
                "scanned combination is not finite at x = {x}"
            )));
        }
        Ok(w)
    }
}

/// First sign change of `f` on the grid `start, start+step, ...` up to `end`.
fn scan_once(f: &ComboFn, start: f64, step: f64, end: f64) -> Result<Option<(f64, f64)>> {
    let mut x_prev = start;
    let mut w_prev = f.eval(x_prev)?;
    if w_prev == 0.0 {
        return Ok(Some((start, start + step)));
    }
    loop {
        let x = x_prev + step;
        if x <= x_prev {
            return Err(Error::BracketFailure(format!(
                "scan step {step} vanishes at x = {x_prev}"
            )));
        }
        let w = f.eval(x)?;
        if w == 0.0 || (w_prev < 0.0) != (w < 0.0) {
            return Ok(Some((x_prev, x)));
        }
        if x >= end {
            return Ok(None);
        }
        x_prev = x;
        w_prev = w;
    }
}

/// Bracket with progressive step halving, then a one-eighth-step
/// confirmation pass over the crossed stretch.
fn find_bracket(f: &ComboFn, start: f64, step: f64, max_span: f64) -> Result<(f64, f64, f64)> {
    let end = start + max_span;
    for halving in 0..=MAX_STEP_HALVINGS {
        let coarse = step / f64::powi(2.0, halving as i32);
        if let Some((_, b)) = scan_once(f, start, coarse, end)? {
            let fine = coarse / 8.0;
            if let Some((c, d)) = scan_once(f, start, fine, b)? {
                return Ok((c, d, fine));
            }
            // The coarse crossing cannot evaporate at finer resolution, but
            // do not let rounding at the stretch edge turn into a panic.
            return Ok((b - coarse, b, coarse));
        }
    }
    Err(Error::NoSignChange {
        start,
        end,
        refinements: MAX_STEP_HALVINGS,
    })
}

fn bisect(f: &ComboFn, mut lo: f64, mut hi: f64, tol: f64) -> Result<(f64, f64)> {
    let mut w_lo = f.eval(lo)?;
    if w_lo == 0.0 {
        return Ok((lo, lo));
    }
    for _ in 0..256 {
        if hi - lo <= tol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let w_mid = f.eval(mid)?;
        if w_mid == 0.0 {
            return Ok((mid, mid));
        }
        if (w_mid < 0.0) == (w_lo < 0.0) {
            lo = mid;
            w_lo = w_mid;
        } else {
            hi = mid;
        }
    }
    Ok((lo, hi))
}

fn validate_inputs(params: &ScanParams, tol: f64) -> Result<()> {
    if tol < 1e-14 || tol.is_nan() {
        return Err(Error::InvalidArgument(format!(
            "zero tolerance must be at least 1e-14, got {tol}"
        )));
    }
    if !(params.start > 0.0 && params.step > 0.0 && params.max_span > params.step) {
        return Err(Error::InvalidArgument(format!(
            "scan parameters out of range: {params:?}"
        )));
    }
    Ok(())
}

/// Lowest bracket `(lo, hi)` with a sign change of the scanned combination.
pub fn bracket_scan(
    target: &ZeroTarget,
    params: &ScanParams,
    cfg: &SeriesConfig,
) -> Result<(f64, f64)> {
    validate_inputs(params, 1e-12)?;
    target.family.validate()?;
    let kernel = Kernel::new(&target.family, cfg)?;
    let f = ComboFn::new(&kernel, target.combo);
    let (lo, hi, _) = find_bracket(&f, params.start, params.step, params.max_span)?;
    Ok((lo, hi))
}

/// Smallest positive zero of the scanned combination, bisected to `tol`.
pub fn first_positive_zero(
    target: &ZeroTarget,
    params: &ScanParams,
    tol: f64,
    cfg: &SeriesConfig,
) -> Result<ZeroResult> {
    validate_inputs(params, tol)?;
    target.family.validate()?;
    let kernel = Kernel::new(&target.family, cfg)?;
    let f = ComboFn::new(&kernel, target.combo);
    let (zero, _) = locate_next(&f, params.start, params.step, params.max_span, tol)?;
    Ok(zero)
}

/// The `count` smallest positive zeros, in increasing order.
///
/// Later rungs scale the probe step and the sweep span with the spacing
/// seen so far, since the zeros of the q-Bessel kernels spread out
/// geometrically.
pub fn zero_ladder(
    target: &ZeroTarget,
    count: usize,
    params: &ScanParams,
    tol: f64,
    cfg: &SeriesConfig,
) -> Result<Vec<ZeroResult>> {
    if count == 0 {
        return Err(Error::InvalidArgument(
            "ladder count must be positive".into(),
        ));
    }
    validate_inputs(params, tol)?;
    target.family.validate()?;
    let kernel = Kernel::new(&target.family, cfg)?;
    let f = ComboFn::new(&kernel, target.combo);

    let mut rungs: Vec<ZeroResult> = Vec::with_capacity(count);
    let mut resume = params.start;
    while rungs.len() < count {
        let (step, span) = match rungs.len() {
            0 => (params.step, params.max_span),
            n => {
                let prev = rungs[n - 1].location;
                let grown = if kernel.is_polynomial() {
                    params.step
                } else {
                    params.step.max(0.02 * prev)
                };
                let spread = if n >= 2 {
                    4.0 * (prev - rungs[n - 2].location)
                } else {
                    3.0 * prev
                };
                (grown, params.max_span.max(spread))
            }
        };
        let (zero, past) = locate_next(&f, resume, step, span, tol)?;
        debug_assert!(rungs.last().is_none_or(|p| zero.location > p.location));
        resume = past + (1e-9 * (1.0 + zero.location)).max(tol);
        rungs.push(zero);
    }
    Ok(rungs)
}

/// Bracket and bisect the next zero at or beyond `start`; also returns the
/// tight upper bisection edge so ladder scans can resume past the zero.
fn locate_next(
    f: &ComboFn,
    start: f64,
    step: f64,
    span: f64,
    tol: f64,
) -> Result<(ZeroResult, f64)> {
    let (lo, hi, used_step) = find_bracket(f, start, step, span)?;
    let (tight_lo, tight_hi) = bisect(f, lo, hi, tol)?;
    let location = 0.5 * (tight_lo + tight_hi);
    let residual = f.eval(location)?.abs();
    Ok((
        ZeroResult {
            location,
            bracket: (lo, hi),
            residual,
            scan_step: used_step,
        },
        tight_hi,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    const TOL: f64 = 1e-12;

    fn cfg() -> SeriesConfig {
        SeriesConfig::default()
    }

    fn first(family: FamilySpec, combo: ComboKind) -> f64 {
        let target = ZeroTarget { family, combo };
        let params = ScanParams::for_family(&target.family);
        first_positive_zero(&target, &params, TOL, &cfg())
            .unwrap()
            .location
    }

    #[test]
    fn half_integer_bessel_ladder_hits_multiples_of_pi() {
        // J_(1/2) is proportional to sin(x)/sqrt(x).
        let target = ZeroTarget {
            family: FamilySpec::BesselJ { nu: 0.5 },
            combo: ComboKind::Function,
        };
        let params = ScanParams::for_family(&target.family);
        let ladder = zero_ladder(&target, 3, &params, TOL, &cfg()).unwrap();
        for (n, rung) in ladder.iter().enumerate() {
            let expect = std::f64::consts::PI * (n as f64 + 1.0);
            assert!(
                (rung.location - expect).abs() < 1e-9,
                "rung {n}: {} vs {expect}",
                rung.location
            );
            assert!(rung.bracket.0 < rung.location && rung.location < rung.bracket.1);
        }
    }

    #[test]
    fn classical_bessel_zeros_match_reference_values() {
        assert!(
            (first(FamilySpec::BesselJ { nu: 0.0 }, ComboKind::Function) - 2.404_825_557_695_772_8)
                .abs()
                < 1e-10
        );
        assert!(
            (first(FamilySpec::BesselJ { nu: 1.0 }, ComboKind::Function) - 3.831_705_970_207_512_3)
                .abs()
                < 1e-10
        );
        assert!(
            (first(FamilySpec::BesselJ { nu: 1.0 }, ComboKind::Derivative)
                - 1.841_183_781_340_659_3)
                .abs()
                < 1e-10
        );
        assert!(
            (first(FamilySpec::BesselJ { nu: 2.5 }, ComboKind::Derivative)
                - 3.632_797_319_831_762_5)
                .abs()
                < 1e-10
        );
    }

    #[test]
    fn jackson_q_bessel_zeros_match_reference_values() {
        let target = ZeroTarget {
            family: FamilySpec::JacksonQ { nu: 1.0, q: 0.5 },
            combo: ComboKind::Function,
        };
        let params = ScanParams::for_family(&target.family);
        let ladder = zero_ladder(&target, 2, &params, TOL, &cfg()).unwrap();
        assert!((ladder[0].location - 2.681_153_019_685_281_5).abs() < 1e-10);
        assert!((ladder[1].location - 6.798_685_084_689_429_5).abs() < 1e-10);

        assert!(
            (first(
                FamilySpec::JacksonQ { nu: 0.5, q: 0.3 },
                ComboKind::Function
            ) - 3.902_012_358_941_007_8)
                .abs()
                < 1e-10
        );
        assert!(
            (first(
                FamilySpec::JacksonQ { nu: 1.5, q: 0.7 },
                ComboKind::Function
            ) - 1.576_426_176_602_324_8)
                .abs()
                < 1e-10
        );
    }

    #[test]
    fn deep_jackson_ladder_spans_the_geometric_spread() {
        // Zero spacing for q = 0.3 grows roughly like 1/q per rung; the
        // ladder has to widen its sweep to keep up.
        let target = ZeroTarget {
            family: FamilySpec::JacksonQ { nu: 1.5, q: 0.3 },
            combo: ComboKind::Function,
        };
        let params = ScanParams::for_family(&target.family);
        let ladder = zero_ladder(&target, 3, &params, TOL, &cfg()).unwrap();
        assert!((ladder[0].location - 7.626_307_360_156_884_9).abs() < 1e-9);
        assert!((ladder[1].location - 28.723_446_186_609_835).abs() < 1e-8);
        assert!(ladder[2].location > 90.0);
    }

    #[test]
    fn hahn_exton_zeros_match_reference_values() {
        let target = ZeroTarget {
            family: FamilySpec::HahnExtonQ { nu: 1.0, q: 0.5 },
            combo: ComboKind::Function,
        };
        let params = ScanParams::for_family(&target.family);
        let ladder = zero_ladder(&target, 2, &params, TOL, &cfg()).unwrap();
        assert!((ladder[0].location - 1.104_689_973_497_065_3).abs() < 1e-10);
        assert!((ladder[1].location - 1.947_377_589_334_666_9).abs() < 1e-10);

        assert!(
            (first(
                FamilySpec::HahnExtonQ { nu: 0.5, q: 0.3 },
                ComboKind::Function
            ) - 1.614_106_759_016_604_3)
                .abs()
                < 1e-10
        );
    }

    #[test]
    fn lommel_zero_order_reverses_below_minus_half() {
        // For mu in (0, 1) the derivative zero precedes the function zero;
        // for mu in (-1, -1/2) the order flips.
        let f = first(FamilySpec::Lommel { mu: 0.25 }, ComboKind::Function);
        let d = first(FamilySpec::Lommel { mu: 0.25 }, ComboKind::Derivative);
        assert!((f - 3.632_348_426_234_078_1).abs() < 1e-10);
        assert!((d - 1.553_051_480_913_768_7).abs() < 1e-10);
        assert!(d < f);

        let f = first(FamilySpec::Lommel { mu: -0.75 }, ComboKind::Function);
        let d = first(FamilySpec::Lommel { mu: -0.75 }, ComboKind::Derivative);
        assert!((f - 1.922_836_239_190_608_6).abs() < 1e-10);
        assert!((d - 3.376_390_084_195_124).abs() < 1e-10);
        assert!(f < d);
    }

    #[test]
    fn legendre_roots_match_closed_forms() {
        // Normalized P_3 vanishes at sqrt(3/5); its derivative at 1/sqrt(5).
        let root = first(FamilySpec::LegendreOdd { m: 2 }, ComboKind::Function);
        assert!((root - (3.0f64 / 5.0).sqrt()).abs() < 1e-12);
        let droot = first(FamilySpec::LegendreOdd { m: 2 }, ComboKind::Derivative);
        assert!((droot - 1.0 / 5.0f64.sqrt()).abs() < 1e-12);

        let target = ZeroTarget {
            family: FamilySpec::LegendreOdd { m: 3 },
            combo: ComboKind::Function,
        };
        let params = ScanParams::for_family(&target.family);
        let ladder = zero_ladder(&target, 2, &params, TOL, &cfg()).unwrap();
        assert!((ladder[0].location - 0.538_469_310_105_683_09).abs() < 1e-12);
        assert!((ladder[1].location - 0.906_179_845_938_663_99).abs() < 1e-12);
    }

    #[test]
    fn combination_zero_matches_reference_value() {
        // First zero of z p' + (1 - nu) p for the Hahn-Exton kernel.
        let loc = first(
            FamilySpec::HahnExtonQ { nu: 0.5, q: 0.3 },
            ComboKind::Combination(0.5),
        );
        assert!((loc - 0.861_904_336_886_911_65).abs() < 1e-10, "{loc}");
    }

    #[test]
    fn exhausted_polynomial_ladder_reports_no_sign_change() {
        // Normalized P_3 has a single positive root.
        let target = ZeroTarget {
            family: FamilySpec::LegendreOdd { m: 2 },
            combo: ComboKind::Function,
        };
        let params = ScanParams::for_family(&target.family);
        let err = zero_ladder(&target, 2, &params, TOL, &cfg()).unwrap_err();
        assert!(matches!(err, Error::NoSignChange { .. }), "{err}");
    }

    #[test]
    fn residual_is_small_against_bracket_scale() {
        for (family, combo) in [
            (FamilySpec::BesselJ { nu: 1.0 }, ComboKind::Function),
            (
                FamilySpec::JacksonQ { nu: 0.5, q: 0.7 },
                ComboKind::Derivative,
            ),
            (FamilySpec::Lommel { mu: 0.75 }, ComboKind::Function),
        ] {
            let target = ZeroTarget { family, combo };
            let params = ScanParams::for_family(&target.family);
            let zero = first_positive_zero(&target, &params, TOL, &cfg()).unwrap();
            let kernel = Kernel::new(&target.family, &cfg()).unwrap();
            let f = ComboFn::new(&kernel, target.combo);
            let scale = f
                .eval(zero.bracket.0)
                .unwrap()
                .abs()
                .max(f.eval(zero.bracket.1).unwrap().abs());
            assert!(
                zero.residual <= 1e-10 * scale.max(1.0),
                "residual {} vs scale {scale}",
                zero.residual
            );
        }
    }

    #[test]
    fn rejects_bad_tolerance_and_count() {
        let target = ZeroTarget {
            family: FamilySpec::BesselJ { nu: 1.0 },
            combo: ComboKind::Function,
        };
        let params = ScanParams::for_family(&target.family);
        assert!(matches!(
            first_positive_zero(&target, &params, 1e-15, &cfg()),
            Err(Error::InvalidArgument(_))
        ));
        assert!(matches!(
            zero_ladder(&target, 0, &params, TOL, &cfg()),
            Err(Error::InvalidArgument(_))
        ));
    }
}
