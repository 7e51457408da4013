//! Independent certification of solved radii.
//!
//! A radius claim is checked on three faces:
//!
//! * **inner**: just inside the claimed radius the defining boundary
//!   quantity stays strictly below `1` at every sampled angle;
//! * **outer**: just outside, it exceeds `1`;
//! * **oracle**: a brute-force radial grid scan, knowing nothing about the
//!   master equation, lands on the same radius up to twice its step.
//!
//! The sampled quantity is the sharp bound the class proofs drive to `1`:
//! with `dev = |1 - ratio(z)|` it is `dev^2 + 2 dev` for the lemniscate
//! kinds (which dominates `|ratio^2 - 1|` by the triangle inequality) and
//! `dev / (A - B - |B| dev)` for the Janowski kinds (`+inf` once the
//! denominator is exhausted, which dominates
//! `|(ratio - 1)/(A - B ratio)|`). On the positive real axis the bound is
//! attained, so its unit level set is exactly the solved radius; off the
//! axis it majorizes the literal class inequality, so `max < 1` on a circle
//! certifies membership on that circle.
//!
//! The maximum over a circle sits at the real point for every family
//! treated here (positive-real-zero products). The certifier still
//! measures that claim instead of assuming it: the inner sweep must attain
//! its maximum at angle zero to within `1e-9`, otherwise the outer check
//! falls back to a full sweep and the certificate carries
//! `extremal_real_axis: false`.

use num_complex::Complex64;
use serde::Serialize;

use crate::config::SeriesConfig;
use crate::error::{CertFace, Error, Result};
use crate::kernel::Kernel;
use crate::ratios;
use crate::solver::{self, RadiusKind, RadiusProblem, RatioKind};

/// Sampling controls for [`certify`].
#[derive(Debug, Clone, Copy)]
pub struct CertifyOptions {
    /// Relative offset of the inner and outer test circles.
    pub epsilon: f64,
    /// Angle count per half-circle sweep.
    pub n_angles: usize,
    /// Absolute radial grid step of the brute-force oracle.
    pub oracle_step: f64,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        Self {
            epsilon: 1e-3,
            n_angles: 256,
            oracle_step: 1e-4,
        }
    }
}

/// Machine-checkable record of a certified radius.
#[derive(Debug, Clone, Serialize)]
pub struct Certificate {
    pub problem: RadiusProblem,
    pub radius: f64,
    /// `1 - max LHS` on the circle of radius `radius * (1 - epsilon)`.
    pub inner_margin: f64,
    /// `max LHS - 1` just outside the claimed radius.
    pub outer_violation: f64,
    /// Largest brute-force grid radius with max LHS still below 1.
    pub oracle_radius: f64,
    /// `radius - oracle_radius`, bounded by twice the oracle step.
    pub oracle_delta: f64,
    pub n_angles: usize,
    pub epsilon: f64,
    /// Whether the inner sweep peaked at angle zero; when `false` the
    /// outer check ran over the full circle instead of the real point.
    pub extremal_real_axis: bool,
}

/// The certified boundary quantity at a single point.
pub fn boundary_lhs(problem: &RadiusProblem, z: Complex64, cfg: &SeriesConfig) -> Result<f64> {
    problem.validate()?;
    let kernel = Kernel::new(&problem.family, cfg)?;
    lhs_with(&kernel, problem, z)
}

fn lhs_with(kernel: &Kernel, problem: &RadiusProblem, z: Complex64) -> Result<f64> {
    let ratio = match ratio_kind(&problem.kind) {
        RatioKind::Phi => ratios::phi_ratio_with(kernel, problem.norm, z)?,
        RatioKind::Psi => ratios::convex_ratio_with(kernel, problem.norm, z)?,
    };
    let dev = (Complex64::new(1.0, 0.0) - ratio).norm();
    Ok(match problem.kind.janowski_params() {
        None => dev * dev + 2.0 * dev,
        Some((a, b)) => {
            let den = (a - b) - b.abs() * dev;
            if den <= 0.0 {
                f64::INFINITY
            } else {
                dev / den
            }
        }
    })
}

fn ratio_kind(kind: &RadiusKind) -> RatioKind {
    match kind {
        RadiusKind::LemStar | RadiusKind::JanStar { .. } => RatioKind::Phi,
        RadiusKind::LemConvex | RadiusKind::JanConvex { .. } => RatioKind::Psi,
    }
}

/// Maximum of the boundary quantity over the upper half-circle `|z| = rho`
/// (conjugate symmetry covers the lower half).
pub fn boundary_max(
    problem: &RadiusProblem,
    rho: f64,
    n_angles: usize,
    cfg: &SeriesConfig,
) -> Result<f64> {
    problem.validate()?;
    let cap = solver::domain_cap(problem, cfg)?;
    if !(rho > 0.0 && rho < cap) {
        return Err(Error::InvalidArgument(format!(
            "boundary_max needs 0 < rho < {cap}, got {rho}"
        )));
    }
    let kernel = Kernel::new(&problem.family, cfg)?;
    boundary_max_with(&kernel, problem, rho, n_angles).map(|(max, _)| max)
}

/// Sweep one circle; returns the maximum and the angle attaining it.
/// Isolated pole samples are skipped, up to 1% of the sweep (at least one).
fn boundary_max_with(
    kernel: &Kernel,
    problem: &RadiusProblem,
    rho: f64,
    n_angles: usize,
) -> Result<(f64, f64)> {
    if n_angles < 8 {
        return Err(Error::InvalidArgument(format!(
            "need at least 8 angles, got {n_angles}"
        )));
    }
    let mut max = f64::NEG_INFINITY;
    let mut arg = 0.0;
    let mut poles = 0usize;
    let mut first_pole = None;
    for k in 0..=n_angles {
        let theta = std::f64::consts::PI * k as f64 / n_angles as f64;
        let z = Complex64::from_polar(rho, theta);
        match lhs_with(kernel, problem, z) {
            Ok(value) => {
                if value > max {
                    max = value;
                    arg = theta;
                }
            }
            Err(Error::PoleAtZero { .. }) => {
                poles += 1;
                first_pole.get_or_insert(z);
            }
            Err(other) => return Err(other),
        }
    }
    let allowed = ((n_angles + 1) / 100).max(1);
    if poles > allowed {
        return Err(Error::PoleAtZero {
            z: first_pole.expect("pole count positive"),
        });
    }
    Ok((max, arg))
}

/// Knowledge-free radius oracle: walk a radial grid outward and report the
/// last circle on which the boundary quantity stayed below 1 everywhere.
pub fn brute_force_radius(
    problem: &RadiusProblem,
    rho_step: f64,
    n_angles: usize,
    cfg: &SeriesConfig,
) -> Result<f64> {
    problem.validate()?;
    let cap = solver::domain_cap(problem, cfg)?;
    let kernel = Kernel::new(&problem.family, cfg)?;
    brute_force_with(&kernel, problem, rho_step, n_angles, cap)
}

fn brute_force_with(
    kernel: &Kernel,
    problem: &RadiusProblem,
    rho_step: f64,
    n_angles: usize,
    cap: f64,
) -> Result<f64> {
    if !(rho_step > 0.0 && rho_step <= 1e-3 * cap) {
        return Err(Error::InvalidArgument(format!(
            "oracle step must lie in (0, {:e}], got {rho_step:e}",
            1e-3 * cap
        )));
    }
    for k in 1.. {
        let rho = k as f64 * rho_step;
        if rho >= cap {
            return Err(Error::CapReached { cap });
        }
        let (max, _) = boundary_max_with(kernel, problem, rho, n_angles)?;
        if max >= 1.0 {
            return Ok((k - 1) as f64 * rho_step);
        }
    }
    unreachable!("the grid either violates the bound or reaches the cap")
}

/// Certify a solved radius on the inner, outer and oracle faces.
pub fn certify(
    problem: &RadiusProblem,
    radius: f64,
    opts: &CertifyOptions,
    cfg: &SeriesConfig,
) -> Result<Certificate> {
    problem.validate()?;
    if !(opts.epsilon > 0.0 && opts.epsilon <= 0.1) {
        return Err(Error::InvalidArgument(format!(
            "epsilon must lie in (0, 0.1], got {}",
            opts.epsilon
        )));
    }
    if opts.n_angles < 8 {
        return Err(Error::InvalidArgument(format!(
            "need at least 8 angles, got {}",
            opts.n_angles
        )));
    }
    let cap = solver::domain_cap(problem, cfg)?;
    if !(radius > 0.0 && radius < cap) {
        return Err(Error::InvalidArgument(format!(
            "radius {radius} outside the certifiable range (0, {cap})"
        )));
    }
    let kernel = Kernel::new(&problem.family, cfg)?;

    let rho_in = radius * (1.0 - opts.epsilon);
    let (inner_max, inner_arg) = boundary_max_with(&kernel, problem, rho_in, opts.n_angles)?;
    if inner_max >= 1.0 || inner_max.is_nan() {
        return Err(Error::CertificationFailure {
            face: CertFace::Inner,
            detail: format!(
                "boundary maximum {inner_max:.6e} at theta = {inner_arg:.6} on rho = {rho_in:.12e}"
            ),
        });
    }
    let real_value = lhs_with(&kernel, problem, Complex64::new(rho_in, 0.0))?;
    let extremal_real_axis = inner_max - real_value <= 1e-9 * inner_max.abs().max(1.0);

    let mut rho_out = radius * (1.0 + opts.epsilon);
    if rho_out >= cap {
        rho_out = 0.5 * (radius + cap);
    }
    let outer_max = if extremal_real_axis {
        lhs_with(&kernel, problem, Complex64::new(rho_out, 0.0))?
    } else {
        boundary_max_with(&kernel, problem, rho_out, opts.n_angles)?.0
    };
    let outer_violation = outer_max - 1.0;
    if outer_violation <= 0.0 || outer_violation.is_nan() {
        return Err(Error::CertificationFailure {
            face: CertFace::Outer,
            detail: format!(
                "boundary quantity {outer_max:.6e} shows no violation on rho = {rho_out:.12e}"
            ),
        });
    }

    // The radial detection happens at the real-axis sample, so a handful of
    // angles suffices for the oracle; the certificate-level sweeps above
    // carry the angular resolution.
    let oracle_radius = brute_force_with(&kernel, problem, opts.oracle_step, 8, cap)?;
    let oracle_delta = radius - oracle_radius;
    if oracle_delta.abs() > 2.0 * opts.oracle_step {
        return Err(Error::CertificationFailure {
            face: CertFace::Oracle,
            detail: format!(
                "grid oracle found {oracle_radius:.12e}, off the claim by {oracle_delta:.3e} > 2 steps"
            ),
        });
    }

    Ok(Certificate {
        problem: problem.clone(),
        radius,
        inner_margin: 1.0 - inner_max,
        outer_violation,
        oracle_radius,
        oracle_delta,
        n_angles: opts.n_angles,
        epsilon: opts.epsilon,
        extremal_real_axis,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{FamilySpec, Normalization};
    use crate::solver::solve_radius;

    fn cfg() -> SeriesConfig {
        SeriesConfig::default()
    }

    fn legendre_star() -> RadiusProblem {
        RadiusProblem {
            family: FamilySpec::LegendreOdd { m: 2 },
            norm: Normalization::Intrinsic,
            kind: RadiusKind::LemStar,
        }
    }

    #[test]
    fn boundary_max_reaches_one_at_the_solved_radius() {
        // Closed-form radius (sqrt(2)-1) sqrt(3/5) of the normalized P_3.
        let max = boundary_max(&legendre_star(), 0.320_848_7, 64, &cfg()).unwrap();
        assert!((max - 1.0).abs() < 1e-5, "max = {max}");
        // Attained on the real axis.
        let real =
            boundary_lhs(&legendre_star(), Complex64::new(0.320_848_7, 0.0), &cfg()).unwrap();
        assert!(max - real <= 1e-9, "max {max} vs real-axis value {real}");
    }

    #[test]
    fn boundary_max_vanishes_toward_the_origin() {
        let max = boundary_max(&legendre_star(), 1e-8, 16, &cfg()).unwrap();
        assert!((0.0..1e-6).contains(&max), "max = {max}");
    }

    #[test]
    fn janowski_bound_stays_below_one_inside_the_radius() {
        // Radius is 1/sqrt(5) = 0.447; test at 0.40.
        let problem = RadiusProblem {
            kind: RadiusKind::JanStar { a: 1.0, b: -1.0 },
            ..legendre_star()
        };
        let max = boundary_max(&problem, 0.40, 64, &cfg()).unwrap();
        assert!(max < 1.0, "max = {max}");
    }

    #[test]
    fn brute_force_matches_closed_forms() {
        let star = brute_force_radius(&legendre_star(), 1e-4, 8, &cfg()).unwrap();
        assert!((star - 0.320_848_445_768_848_85).abs() <= 2e-4, "{star}");

        let jconvex = RadiusProblem {
            kind: RadiusKind::JanConvex { a: 1.0, b: -1.0 },
            ..legendre_star()
        };
        let oracle = brute_force_radius(&jconvex, 1e-4, 8, &cfg()).unwrap();
        assert!((oracle - 1.0 / 15.0f64.sqrt()).abs() <= 2e-4, "{oracle}");
    }

    #[test]
    fn certificates_hold_across_kinds_and_families() {
        let problems = vec![
            legendre_star(),
            RadiusProblem {
                family: FamilySpec::BesselJ { nu: 1.0 },
                norm: Normalization::G,
                kind: RadiusKind::JanStar { a: 1.0, b: 0.0 },
            },
            RadiusProblem {
                family: FamilySpec::JacksonQ { nu: 0.5, q: 0.7 },
                norm: Normalization::G,
                kind: RadiusKind::LemConvex,
            },
            RadiusProblem {
                family: FamilySpec::Lommel { mu: 0.25 },
                norm: Normalization::H,
                kind: RadiusKind::JanConvex { a: 0.5, b: 0.0 },
            },
        ];
        let opts = CertifyOptions {
            n_angles: 64,
            ..CertifyOptions::default()
        };
        for problem in problems {
            let solved = solve_radius(&problem, 1e-12, &cfg()).unwrap();
            let cert = certify(&problem, solved.radius, &opts, &cfg()).unwrap();
            assert!(cert.inner_margin > 0.0, "{cert:?}");
            assert!(cert.outer_violation > 0.0, "{cert:?}");
            assert!(
                cert.oracle_delta.abs() <= 2.0 * opts.oracle_step,
                "{cert:?}"
            );
            assert!(cert.extremal_real_axis, "{cert:?}");
            assert_eq!(cert.n_angles, 64);
            assert_eq!(cert.epsilon, 1e-3);
        }
    }

    #[test]
    fn wrong_radius_fails_on_a_named_face() {
        let problem = legendre_star();
        let cap = solver::domain_cap(&problem, &cfg()).unwrap();
        let opts = CertifyOptions {
            n_angles: 32,
            ..CertifyOptions::default()
        };
        // Near the cap the inequality has long since failed.
        let err = certify(&problem, cap * 0.999_999, &opts, &cfg()).unwrap_err();
        match err {
            Error::CertificationFailure { face, .. } => assert_eq!(face, CertFace::Inner),
            other => panic!("unexpected error {other}"),
        }
        // Far below the radius the outer circle shows no violation.
        let solved = solve_radius(&problem, 1e-12, &cfg()).unwrap();
        let err = certify(&problem, solved.radius * 0.9, &opts, &cfg()).unwrap_err();
        match err {
            Error::CertificationFailure { face, .. } => assert_eq!(face, CertFace::Outer),
            other => panic!("unexpected error {other}"),
        }
    }

    #[test]
    fn boundary_quantity_is_conjugate_symmetric() {
        let problem = RadiusProblem {
            family: FamilySpec::BesselJ { nu: 1.5 },
            norm: Normalization::H,
            kind: RadiusKind::LemStar,
        };
        for k in 1..=10 {
            let rho = 0.3 * k as f64;
            let theta = 0.17 + 0.23 * k as f64;
            let upper = boundary_lhs(&problem, Complex64::from_polar(rho, theta), &cfg()).unwrap();
            let lower = boundary_lhs(&problem, Complex64::from_polar(rho, -theta), &cfg()).unwrap();
            assert!(
                (upper - lower).abs() <= 1e-12 * upper.abs().max(1.0),
                "asymmetry at rho = {rho}, theta = {theta}"
            );
        }
    }

    #[test]
    fn rejects_out_of_range_options() {
        let problem = legendre_star();
        let bad_eps = CertifyOptions {
            epsilon: 0.0,
            ..CertifyOptions::default()
        };
        assert!(matches!(
            certify(&problem, 0.3, &bad_eps, &cfg()),
            Err(Error::InvalidArgument(_))
        ));
        let bad_angles = CertifyOptions {
            n_angles: 4,
            ..CertifyOptions::default()
        };
        assert!(matches!(
            certify(&problem, 0.3, &bad_angles, &cfg()),
            Err(Error::InvalidArgument(_))
        ));
        assert!(matches!(
            brute_force_radius(&problem, 0.1, 8, &cfg()),
            Err(Error::InvalidArgument(_))
        ));
    }
}
