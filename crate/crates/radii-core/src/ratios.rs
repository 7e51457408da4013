//! The two boundary ratios that drive every radius computation.
//!
//! For a normalized function `f` the starlikeness ratio is
//! `phi(z) = z f'(z) / f(z)` and the convexity ratio is
//! `psi(z) = 1 + z f''(z) / f'(z)`. Both are computed from the even kernel
//! `T` of the underlying family member `p = kappa z^rho T(z)` so that the
//! power prefactor never has to be evaluated off the positive real axis.
//!
//! With `N(z) = z T'(z) / T(z)` the four normalizations give
//!
//! * `f`-type:        `phi = 1 + N / rho`
//! * `g`-type:        `phi = 1 + N`
//! * `h`-type:        `phi = 1 + N(w) / 2` with `w = sqrt(z)`
//! * intrinsic:       `phi = 1 + N` (the normalized Legendre polynomial
//!   is itself of `g`-type shape `kappa z T`)
//!
//! and analogous closed forms for `psi` listed at the implementation sites.
//! Every formula here was cross-checked against direct differentiation of
//! the explicitly normalized functions.
//!
//! All ratios equal `1` at the origin. Points where a needed denominator
//! vanishes (zeros of `T` or of the relevant derivative combination) are
//! reported as [`Error::PoleAtZero`].

use num_complex::Complex64;

use crate::config::SeriesConfig;
use crate::error::{Error, Result};
use crate::family::{FamilySpec, Normalization};
use crate::kernel::Kernel;

/// `z f'(z) / f(z)` for the normalization `norm` of `family`.
pub fn phi_ratio(
    family: &FamilySpec,
    norm: Normalization,
    z: Complex64,
    cfg: &SeriesConfig,
) -> Result<Complex64> {
    family.validate_with_norm(norm)?;
    let kernel = Kernel::new(family, cfg)?;
    phi_ratio_with(&kernel, norm, z)
}

/// `1 + z f''(z) / f'(z)` for the normalization `norm` of `family`.
pub fn convex_ratio(
    family: &FamilySpec,
    norm: Normalization,
    z: Complex64,
    cfg: &SeriesConfig,
) -> Result<Complex64> {
    family.validate_with_norm(norm)?;
    let kernel = Kernel::new(family, cfg)?;
    convex_ratio_with(&kernel, norm, z)
}

/// [`phi_ratio`] against an already-built kernel.
pub fn phi_ratio_with(kernel: &Kernel, norm: Normalization, z: Complex64) -> Result<Complex64> {
    let rho = kernel.rho();
    let value = match norm {
        Normalization::F => {
            let n = log_derivative(kernel, z)?;
            Complex64::new(1.0, 0.0) + n / rho
        }
        Normalization::G | Normalization::Intrinsic => {
            let n = log_derivative(kernel, z)?;
            Complex64::new(1.0, 0.0) + n
        }
        Normalization::H => {
            let n = log_derivative(kernel, z.sqrt())?;
            Complex64::new(1.0, 0.0) + n * 0.5
        }
    };
    finite_or_pole(value, z)
}

/// [`convex_ratio`] against an already-built kernel.
pub fn convex_ratio_with(kernel: &Kernel, norm: Normalization, z: Complex64) -> Result<Complex64> {
    let rho = kernel.rho();
    let one = Complex64::new(1.0, 0.0);
    let value = match norm {
        // f = (kappa z^rho T)^(1/rho):
        // psi = 1 + (rho(rho-1)T + 2 rho zT' + z^2 T'')/(rho T + zT')
        //         + (1/rho - 1)(rho + N)
        Normalization::F => {
            let jet = kernel.eval(z)?;
            let num = rho * (rho - 1.0) * jet.t + 2.0 * rho * z * jet.dt + z * z * jet.ddt;
            let den = rho * jet.t + z * jet.dt;
            if den.norm() == 0.0 || jet.t.norm() == 0.0 {
                return Err(Error::PoleAtZero { z });
            }
            let n = z * jet.dt / jet.t;
            one + num / den + (1.0 / rho - 1.0) * (rho + n)
        }
        // g and the normalized Legendre polynomial are kappa z T:
        // psi = 1 + (z^2 T'' + 2 zT')/(T + zT')
        Normalization::G | Normalization::Intrinsic => {
            let jet = kernel.eval(z)?;
            let den = jet.t + z * jet.dt;
            if den.norm() == 0.0 {
                return Err(Error::PoleAtZero { z });
            }
            one + (z * z * jet.ddt + 2.0 * z * jet.dt) / den
        }
        // h = kappa z T(sqrt(z)):
        // psi = 1 + (w^2 T'' + 3 w T')/(2 (2T + w T')) at w = sqrt(z)
        Normalization::H => {
            let w = z.sqrt();
            let jet = kernel.eval(w)?;
            let den = 2.0 * (2.0 * jet.t + w * jet.dt);
            if den.norm() == 0.0 {
                return Err(Error::PoleAtZero { z });
            }
            one + (w * w * jet.ddt + 3.0 * w * jet.dt) / den
        }
    };
    finite_or_pole(value, z)
}

/// `phi` restricted to the positive real axis; exact because complex
/// arithmetic on real inputs keeps the imaginary part at zero.
pub(crate) fn phi_real(kernel: &Kernel, norm: Normalization, r: f64) -> Result<f64> {
    phi_ratio_with(kernel, norm, Complex64::new(r, 0.0)).map(|v| v.re)
}

/// `psi` restricted to the positive real axis.
pub(crate) fn convex_real(kernel: &Kernel, norm: Normalization, r: f64) -> Result<f64> {
    convex_ratio_with(kernel, norm, Complex64::new(r, 0.0)).map(|v| v.re)
}

fn log_derivative(kernel: &Kernel, z: Complex64) -> Result<Complex64> {
    let jet = kernel.eval(z)?;
    if jet.t.norm() == 0.0 {
        return Err(Error::PoleAtZero { z });
    }
    Ok(z * jet.dt / jet.t)
}

fn finite_or_pole(value: Complex64, z: Complex64) -> Result<Complex64> {
    if value.re.is_finite() && value.im.is_finite() {
        Ok(value)
    } else {
        Err(Error::PoleAtZero { z })
    }
}
