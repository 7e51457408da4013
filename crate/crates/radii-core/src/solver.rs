//! Radius computation by monotone bisection.
//!
//! Each radius problem reduces to a scalar equation on a segment of the
//! positive real axis: the boundary ratio (`phi` for starlikeness, `psi`
//! for convexity) restricted to `(0, cap)` is strictly monotone, starts at
//! `1` in the origin limit and diverges at the cap, so it crosses the class
//! target exactly once. The cap is the first positive zero of the function,
//! of its derivative, or of a derivative combination, depending on the
//! normalization and on whether the starlike or the convex class is asked
//! for; `h`-type normalizations live in the square of the zero.
//!
//! Targets:
//!
//! * lemniscate starlike / convex: ratio = `2 - sqrt(2)`, approached from
//!   above. The single exception is the `f`-normalized Lommel function
//!   with `mu` in `(-1, -1/2)`, whose leading exponent is negative: there
//!   the starlike equation has its root where `phi` climbs to `+sqrt(2)`.
//! * Janowski starlike / convex with `-1 <= B < A <= 1`: ratio =
//!   `1 - (A - B)/(1 + |B|)`, approached from above.
//!
//! Bisection refines to the requested tolerance and then keeps going to
//! the floating-point limit of the bracket, so the master-equation
//! residual is as small as the arithmetic allows.

use serde::{Deserialize, Serialize};

use crate::config::SeriesConfig;
use crate::error::{Error, Result};
use crate::family::{FamilySpec, Normalization};
use crate::kernel::Kernel;
use crate::ratios;
use crate::residual;
use crate::zeros::{self, ComboKind, ScanParams, ZeroTarget};

/// The four radius kinds.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum RadiusKind {
    LemStar,
    LemConvex,
    JanStar {
        #[serde(rename = "A")]
        a: f64,
        #[serde(rename = "B")]
        b: f64,
    },
    JanConvex {
        #[serde(rename = "A")]
        a: f64,
        #[serde(rename = "B")]
        b: f64,
    },
}

impl RadiusKind {
    pub fn code(&self) -> &'static str {
        match self {
            RadiusKind::LemStar => "lem-star",
            RadiusKind::LemConvex => "lem-convex",
            RadiusKind::JanStar { .. } => "jan-star",
            RadiusKind::JanConvex { .. } => "jan-convex",
        }
    }

    pub fn janowski_params(&self) -> Option<(f64, f64)> {
        match *self {
            RadiusKind::JanStar { a, b } | RadiusKind::JanConvex { a, b } => Some((a, b)),
            _ => None,
        }
    }

    fn is_convex(&self) -> bool {
        matches!(self, RadiusKind::LemConvex | RadiusKind::JanConvex { .. })
    }
}

/// A fully specified radius computation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RadiusProblem {
    #[serde(flatten)]
    pub family: FamilySpec,
    pub norm: Normalization,
    #[serde(flatten)]
    pub kind: RadiusKind,
}

impl RadiusProblem {
    pub fn validate(&self) -> Result<()> {
        self.family.validate_with_norm(self.norm)?;
        if let Some((a, b)) = self.kind.janowski_params() {
            if !(a.is_finite() && b.is_finite() && -1.0 <= b && b < a && a <= 1.0) {
                return Err(Error::InvalidSpec(format!(
                    "Janowski parameters need -1 <= B < A <= 1, got A = {a}, B = {b}"
                )));
            }
        }
        // The f-normalized Lommel function with negative leading exponent
        // only supports the lemniscate starlike problem; the other three
        // kinds rest on derivative-zero structure available for mu > -1/2.
        if let FamilySpec::Lommel { mu } = self.family {
            if self.norm == Normalization::F
                && mu < -0.5
                && !matches!(self.kind, RadiusKind::LemStar)
            {
                return Err(Error::InvalidProblem(format!(
                    "kind {} of the f-normalized Lommel function needs mu in (-1/2, 1), got mu = {mu}",
                    self.kind.code()
                )));
            }
        }
        Ok(())
    }
}

/// Which ratio the master equation constrains.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RatioKind {
    Phi,
    Psi,
}

/// Target value of the ratio and the crossing direction.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct TargetSpec {
    pub ratio: RatioKind,
    pub value: f64,
    /// `true` when the ratio climbs through the target instead of falling.
    pub increasing: bool,
}

/// A solved radius with its certification-grade diagnostics.
#[derive(Debug, Clone, Serialize)]
pub struct RadiusResult {
    pub radius: f64,
    pub domain_cap: f64,
    pub target: f64,
    /// `|ratio(radius) - target|`.
    pub residual_master: f64,
    /// Normalized residual of the literal equation the radius is a root of.
    pub residual_paper: f64,
    pub iterations: usize,
}

/// The ratio value the solved radius must produce.
pub fn target_value(problem: &RadiusProblem) -> Result<TargetSpec> {
    problem.validate()?;
    const LEM: f64 = 2.0 - std::f64::consts::SQRT_2;
    Ok(match problem.kind {
        RadiusKind::LemStar => {
            let climbing = matches!(problem.family, FamilySpec::Lommel { mu } if mu < -0.5)
                && problem.norm == Normalization::F;
            if climbing {
                TargetSpec {
                    ratio: RatioKind::Phi,
                    value: std::f64::consts::SQRT_2,
                    increasing: true,
                }
            } else {
                TargetSpec {
                    ratio: RatioKind::Phi,
                    value: LEM,
                    increasing: false,
                }
            }
        }
        RadiusKind::LemConvex => TargetSpec {
            ratio: RatioKind::Psi,
            value: LEM,
            increasing: false,
        },
        RadiusKind::JanStar { a, b } => TargetSpec {
            ratio: RatioKind::Phi,
            value: 1.0 - janowski_delta(a, b),
            increasing: false,
        },
        RadiusKind::JanConvex { a, b } => TargetSpec {
            ratio: RatioKind::Psi,
            value: 1.0 - janowski_delta(a, b),
            increasing: false,
        },
    })
}

pub(crate) fn janowski_delta(a: f64, b: f64) -> f64 {
    (a - b) / (1.0 + b.abs())
}

/// Right end of the monotonicity interval the root is bisected inside.
pub fn domain_cap(problem: &RadiusProblem, cfg: &SeriesConfig) -> Result<f64> {
    problem.validate()?;
    let combo = cap_combo(problem);
    let target = ZeroTarget {
        family: problem.family,
        combo,
    };
    let params = ScanParams::for_family(&problem.family);
    let zero = zeros::first_positive_zero(&target, &params, 1e-13, cfg)?;
    // h-type functions take the argument square root, so their caps live
    // in the square of the scanned zero.
    Ok(if problem.norm == Normalization::H {
        zero.location * zero.location
    } else {
        zero.location
    })
}

fn cap_combo(problem: &RadiusProblem) -> ComboKind {
    if !problem.kind.is_convex() {
        return ComboKind::Function;
    }
    match (&problem.family, problem.norm) {
        (_, Normalization::F) => ComboKind::Derivative,
        (FamilySpec::LegendreOdd { .. }, _) => ComboKind::Derivative,
        (FamilySpec::Lommel { mu }, Normalization::G) => ComboKind::Combination(0.5 - mu),
        (FamilySpec::Lommel { mu }, Normalization::H) => ComboKind::Combination(1.5 - mu),
        (family, Normalization::G) => ComboKind::Combination(1.0 - family.param1()),
        (family, Normalization::H) => ComboKind::Combination(2.0 - family.param1()),
        (_, Normalization::Intrinsic) => ComboKind::Derivative,
    }
}

/// Solve one radius problem.
pub fn solve_radius(problem: &RadiusProblem, tol: f64, cfg: &SeriesConfig) -> Result<RadiusResult> {
    problem.validate()?;
    if tol < 1e-13 || tol.is_nan() {
        return Err(Error::InvalidArgument(format!(
            "solver tolerance must be at least 1e-13, got {tol}"
        )));
    }
    let target = target_value(problem)?;
    let cap = domain_cap(problem, cfg)?;
    let kernel = Kernel::new(&problem.family, cfg)?;

    let gap = |r: f64| -> Result<f64> {
        let ratio = match target.ratio {
            RatioKind::Phi => ratios::phi_real(&kernel, problem.norm, r)?,
            RatioKind::Psi => ratios::convex_real(&kernel, problem.norm, r)?,
        };
        Ok(ratio - target.value)
    };

    let mut lo = 1e-9 * cap;
    let mut hi = cap * (1.0 - 1e-9);
    let g_lo = gap(lo)?;
    let g_hi = gap(hi)?;
    if g_lo.abs() < 1e-12 {
        return Err(Error::InvalidProblem(format!(
            "target already attained at the inner bracket edge r = {lo:e}; the radius degenerates to zero"
        )));
    }
    // Near the origin the ratio sits at 1, above a falling target and below
    // a rising one.
    let want_lo_positive = !target.increasing;
    if (g_lo > 0.0) != want_lo_positive {
        return Err(Error::BracketFailure(format!(
            "ratio - target = {g_lo:e} at the inner edge has the wrong sign for a {} crossing",
            if target.increasing {
                "rising"
            } else {
                "falling"
            }
        )));
    }
    if (g_hi > 0.0) == (g_lo > 0.0) {
        return Err(Error::BracketFailure(format!(
            "no sign change over ({lo:e}, {hi:e}): gap goes {g_lo:e} -> {g_hi:e}"
        )));
    }

    let lo_sign_positive = g_lo > 0.0;
    let mut iterations = 0usize;
    let mut achieved_tol = false;
    loop {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let g_mid = gap(mid)?;
        iterations += 1;
        if g_mid == 0.0 {
            lo = mid;
            hi = mid;
            break;
        }
        if (g_mid > 0.0) == lo_sign_positive {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= tol {
            achieved_tol = true;
        }
        // Refinement past the requested tolerance is cheap and pins the
        // master residual to the arithmetic floor, so always finish the
        // bracket off.
        if iterations >= 200 {
            break;
        }
    }
    if !(achieved_tol || hi == lo) {
        return Err(Error::BracketFailure(format!(
            "bisection stalled at width {:e} without reaching tol = {tol:e}",
            hi - lo
        )));
    }

    let radius = 0.5 * (lo + hi);
    let residual_master = gap(radius)?.abs();
    let residual_paper = residual::paper_residual_with(&kernel, problem, radius)?;
    Ok(RadiusResult {
        radius,
        domain_cap: cap,
        target: target.value,
        residual_master,
        residual_paper,
        iterations,
    })
}

/// Solve a batch, keeping per-problem failures isolated.
pub fn radius_table(
    problems: &[RadiusProblem],
    tol: f64,
    cfg: &SeriesConfig,
) -> Vec<Result<RadiusResult>> {
    problems
        .iter()
        .map(|problem| solve_radius(problem, tol, cfg))
        .collect()
}
