//! Radii of starlikeness and convexity for normalized special functions.
//!
//! This crate computes, for five families of entire functions (Bessel `J_nu`,
//! Jackson and Hahn-Exton q-Bessel, Lommel `s_{mu-1/2,1/2}`, and odd-degree
//! Legendre polynomials), the largest disk radius on which standard
//! normalizations of the family stay in two classical geometric function
//! classes:
//!
//! * **lemniscate starlike / convex**: `z f'(z)/f(z)` (resp. `1 + z f''/f'`)
//!   lies inside the right loop of the Bernoulli lemniscate `|w^2 - 1| = 1`;
//! * **Janowski starlike / convex**: the same ratio is subordinate to
//!   `(1 + Az)/(1 + Bz)` with `-1 <= B < A <= 1`.
//!
//! Every family member factors as `kappa * z^rho * T(z)` with `T` an even
//! entire function, `T(0) = 1`, whose positive zeros are exactly the
//! positive zeros of the member. All exported quantities (log-derivative
//! ratios, zeros, radii) are computed from `T` alone, so fractional-power
//! prefactors are never evaluated off the positive real axis; see
//! [`kernel::Kernel`].
//!
//! The radius of each class reduces to a scalar equation `ratio(r) = target`
//! with `ratio` strictly monotone on `(0, cap)`, where `cap` is the first
//! positive zero of the relevant function, derivative, or derivative
//! combination ([`solver::domain_cap`]). [`solver::solve_radius`] brackets
//! and bisects that equation; [`certify`] independently re-checks the result
//! by sampling the defining inequality on circles just inside and outside the
//! radius and by a brute-force grid scan.

// Reference constants (the Lanczos table, frozen zero locations and radii)
// are transcribed with every digit of the computation that produced them;
// the compiler rounds each literal to the nearest binary64.
#![allow(clippy::excessive_precision)]

pub mod certify;
pub mod config;
pub mod error;
pub mod family;
pub mod gamma;
pub mod kernel;
pub mod qseries;
pub mod ratios;
pub mod residual;
pub mod solver;
pub mod zeros;

pub use config::SeriesConfig;
pub use error::{CertFace, Error, Result};
pub use family::{FamilySpec, Normalization};
pub use kernel::{eval_family, EvalResult, Kernel};
pub use ratios::{convex_ratio, phi_ratio};
pub use solver::{
    domain_cap, radius_table, solve_radius, target_value, RadiusKind, RadiusProblem, RadiusResult,
    RatioKind, TargetSpec,
};
pub use zeros::{
    bracket_scan, first_positive_zero, zero_ladder, ComboKind, ScanParams, ZeroResult, ZeroTarget,
};

pub use certify::{
    boundary_lhs, boundary_max, brute_force_radius, certify, Certificate, CertifyOptions,
};
