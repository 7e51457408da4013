//! Residuals of the literal radius equations.
//!
//! The solver works on the compact master form `ratio(r) = target`, which
//! is algebraically equivalent to, but not textually the same as, the
//! published per-family equations written in terms of the underlying
//! function `p` and its derivatives (with every denominator multiplied
//! through). This module evaluates those literal forms, term by term, and
//! reports `|sum of terms| / max(1, largest |term|)` so a solved radius can
//! be checked against the equation as displayed rather than against the
//! solver's own reformulation.
//!
//! `h`-type equations sample `p` at `sqrt(r)`; the Legendre forms are
//! stated for the normalized polynomial, so the kernel prefactor is divided
//! back out there.

use crate::config::SeriesConfig;
use crate::error::{Error, Result};
use crate::family::{FamilySpec, Normalization};
use crate::kernel::Kernel;
use crate::solver::{janowski_delta, RadiusKind, RadiusProblem};

/// Normalized residual of the literal radius equation at `r`.
pub fn paper_residual(problem: &RadiusProblem, r: f64, cfg: &SeriesConfig) -> Result<f64> {
    let kernel = Kernel::new(&problem.family, cfg)?;
    paper_residual_with(&kernel, problem, r)
}

pub(crate) fn paper_residual_with(kernel: &Kernel, problem: &RadiusProblem, r: f64) -> Result<f64> {
    problem.validate()?;
    if !(r > 0.0 && r.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "residual needs a positive radius, got {r}"
        )));
    }
    let terms = equation_terms(kernel, problem, r)?;
    let sum: f64 = terms.iter().sum();
    let scale = terms
        .iter()
        .fold(0.0f64, |acc, t| acc.max(t.abs()))
        .max(1.0);
    Ok(sum.abs() / scale)
}

/// `p`, `p'`, `p''` at the equation's sample point (`sqrt(r)` for `h`).
struct Jet {
    u: f64,
    up: f64,
    upp: f64,
    /// The sample point itself.
    x: f64,
}

fn jet_at(kernel: &Kernel, x: f64) -> Result<Jet> {
    Ok(Jet {
        u: kernel.underlying_real(x, 0)?,
        up: kernel.underlying_real(x, 1)?,
        upp: kernel.underlying_real(x, 2)?,
        x,
    })
}

/// The quadratic `X^2 - 2X - 1 = 0` in `X = num/den`, cleared of `den`.
fn lem_convex_terms(num: f64, den: f64) -> Vec<f64> {
    vec![num * num, -2.0 * num * den, -den * den]
}

fn equation_terms(kernel: &Kernel, problem: &RadiusProblem, r: f64) -> Result<Vec<f64>> {
    let delta = problem
        .kind
        .janowski_params()
        .map(|(a, b)| janowski_delta(a, b));
    match problem.family {
        FamilySpec::BesselJ { nu }
        | FamilySpec::JacksonQ { nu, .. }
        | FamilySpec::HahnExtonQ { nu, .. } => bessel_type_terms(kernel, problem, r, nu, delta),
        FamilySpec::Lommel { mu } => lommel_terms(kernel, problem, r, mu, delta),
        FamilySpec::LegendreOdd { .. } => legendre_terms(kernel, problem, r, delta),
    }
}

fn bessel_type_terms(
    kernel: &Kernel,
    problem: &RadiusProblem,
    r: f64,
    nu: f64,
    delta: Option<f64>,
) -> Result<Vec<f64>> {
    use Normalization::*;
    let jet = match problem.norm {
        H => jet_at(kernel, r.sqrt())?,
        _ => jet_at(kernel, r)?,
    };
    let Jet { u, up, upp, x } = jet;
    Ok(match (problem.kind, problem.norm) {
        (RadiusKind::LemStar, F) => vec![
            r * r * up * up,
            -4.0 * nu * r * u * up,
            2.0 * nu * nu * u * u,
        ],
        (RadiusKind::LemStar, G) => {
            let lhs = r * up - nu * u;
            vec![lhs * lhs, -2.0 * lhs * u, -u * u]
        }
        (RadiusKind::LemStar, H) => {
            let lhs = x * up - nu * u;
            vec![lhs * lhs, -4.0 * lhs * u, -4.0 * u * u]
        }
        (RadiusKind::LemConvex, F) => {
            let lambda = 1.0 / nu - 1.0;
            lem_convex_terms(r * upp * u + lambda * r * up * up, u * up)
        }
        (RadiusKind::LemConvex, G) => lem_convex_terms(
            r * r * upp + 2.0 * (1.0 - nu) * r * up + nu * (nu - 1.0) * u,
            r * up + (1.0 - nu) * u,
        ),
        (RadiusKind::LemConvex, H) => lem_convex_terms(
            r * upp + (3.0 - 2.0 * nu) * x * up + nu * (nu - 2.0) * u,
            2.0 * (x * up + (2.0 - nu) * u),
        ),
        (RadiusKind::JanStar { .. }, F) => {
            let delta = delta.unwrap();
            vec![r * up, nu * (delta - 1.0) * u]
        }
        (RadiusKind::JanStar { .. }, G) => {
            let delta = delta.unwrap();
            vec![r * up, (delta - nu) * u]
        }
        (RadiusKind::JanStar { .. }, H) => {
            let delta = delta.unwrap();
            vec![x * up, (2.0 * delta - nu) * u]
        }
        (RadiusKind::JanConvex { .. }, F) => {
            let delta = delta.unwrap();
            let lambda = 1.0 / nu - 1.0;
            vec![r * upp * u, lambda * r * up * up, delta * u * up]
        }
        (RadiusKind::JanConvex { .. }, G) => {
            let delta = delta.unwrap();
            vec![
                nu * (nu - 1.0) * u + 2.0 * (1.0 - nu) * r * up + r * r * upp,
                delta * ((1.0 - nu) * u + r * up),
            ]
        }
        (RadiusKind::JanConvex { .. }, H) => {
            let delta = delta.unwrap();
            vec![
                nu * (nu - 2.0) * u + (3.0 - 2.0 * nu) * x * up + r * upp,
                delta * 2.0 * ((2.0 - nu) * u + x * up),
            ]
        }
        (_, Intrinsic) => unreachable!("validated: intrinsic is Legendre-only"),
    })
}

fn lommel_terms(
    kernel: &Kernel,
    problem: &RadiusProblem,
    r: f64,
    mu: f64,
    delta: Option<f64>,
) -> Result<Vec<f64>> {
    use Normalization::*;
    let jet = match problem.norm {
        H => jet_at(kernel, r.sqrt())?,
        _ => jet_at(kernel, r)?,
    };
    let Jet { u, up, upp, x } = jet;
    let half = mu + 0.5;
    Ok(match (problem.kind, problem.norm) {
        (RadiusKind::LemStar, F) if mu < -0.5 => {
            vec![r * r * up * up, -2.0 * half * half * u * u]
        }
        (RadiusKind::LemStar, F) => vec![
            r * r * up * up,
            -4.0 * half * r * up * u,
            2.0 * half * half * u * u,
        ],
        (RadiusKind::LemStar, G) => vec![
            r * r * up * up,
            -(2.0 * mu + 3.0) * r * up * u,
            (mu * mu + 3.0 * mu + 0.25) * u * u,
        ],
        (RadiusKind::LemStar, H) => vec![
            4.0 * r * up * up,
            -4.0 * (5.0 + 2.0 * mu) * x * up * u,
            (4.0 * mu * mu + 20.0 * mu - 7.0) * u * u,
        ],
        (RadiusKind::LemConvex, F) => {
            let lambda = 1.0 / half - 1.0;
            lem_convex_terms(r * upp * u + lambda * r * up * up, u * up)
        }
        (RadiusKind::LemConvex, G) => lem_convex_terms(
            r * r * upp + (1.0 - 2.0 * mu) * r * up + (mu * mu - 0.25) * u,
            r * up + (0.5 - mu) * u,
        ),
        (RadiusKind::LemConvex, H) => lem_convex_terms(
            r * upp + 2.0 * (1.0 - mu) * x * up + 0.25 * (2.0 * mu - 3.0) * (2.0 * mu + 1.0) * u,
            2.0 * ((1.5 - mu) * u + x * up),
        ),
        (RadiusKind::JanStar { .. }, F) => {
            let delta = delta.unwrap();
            vec![r * up, half * (delta - 1.0) * u]
        }
        (RadiusKind::JanStar { .. }, G) => {
            let delta = delta.unwrap();
            vec![r * up, (delta - half) * u]
        }
        (RadiusKind::JanStar { .. }, H) => {
            let delta = delta.unwrap();
            vec![x * up, (2.0 * delta - half) * u]
        }
        (RadiusKind::JanConvex { .. }, F) => {
            let delta = delta.unwrap();
            let lambda = 1.0 / half - 1.0;
            vec![r * upp * u, lambda * r * up * up, delta * u * up]
        }
        (RadiusKind::JanConvex { .. }, G) => {
            let delta = delta.unwrap();
            vec![
                (1.5 - mu) * r * up + r * r * upp,
                (delta - half) * ((0.5 - mu) * u + r * up),
            ]
        }
        (RadiusKind::JanConvex { .. }, H) => {
            let delta = delta.unwrap();
            vec![
                (2.5 - mu) * x * up + r * upp,
                (2.0 * delta - half) * ((1.5 - mu) * u + x * up),
            ]
        }
        (_, Intrinsic) => unreachable!("validated: intrinsic is Legendre-only"),
    })
}

fn legendre_terms(
    kernel: &Kernel,
    problem: &RadiusProblem,
    r: f64,
    delta: Option<f64>,
) -> Result<Vec<f64>> {
    // The published Legendre equations use the polynomial normalized by its
    // derivative at zero.
    let kappa = kernel.kappa();
    let p = kernel.underlying_real(r, 0)? / kappa;
    let dp = kernel.underlying_real(r, 1)? / kappa;
    let ddp = kernel.underlying_real(r, 2)? / kappa;
    Ok(match problem.kind {
        RadiusKind::LemStar => vec![r * r * dp * dp, -4.0 * r * dp * p, 2.0 * p * p],
        RadiusKind::LemConvex => vec![r * r * ddp * ddp, -2.0 * r * ddp * dp, -dp * dp],
        RadiusKind::JanStar { .. } => {
            let delta = delta.unwrap();
            vec![r * dp, (delta - 1.0) * p]
        }
        RadiusKind::JanConvex { .. } => {
            let delta = delta.unwrap();
            vec![r * ddp, delta * dp]
        }
    })
}
