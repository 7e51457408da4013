use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One member of the five supported function families.
///
/// The parameter ranges are the ones under which the radius problems below
/// are well posed; they are enforced at construction time by [`FamilySpec::validate`]:
///
/// * `BesselJ`, `JacksonQ`, `HahnExtonQ`: `nu > -1` (and `0 < q < 1`);
///   the power-type normalization `F` additionally needs `nu > 0`.
/// * `Lommel`: `mu` in `(-1, 1)` excluding `0` and `-1/2`.
/// * `LegendreOdd`: degree `2m - 1` with `m >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum FamilySpec {
    #[serde(rename = "bessel")]
    BesselJ { nu: f64 },
    #[serde(rename = "qbessel2")]
    JacksonQ { nu: f64, q: f64 },
    #[serde(rename = "qbessel3")]
    HahnExtonQ { nu: f64, q: f64 },
    #[serde(rename = "lommel")]
    Lommel { mu: f64 },
    #[serde(rename = "legendre")]
    LegendreOdd { m: u32 },
}

/// How a family member is normalized to `f(0) = 0`, `f'(0) = 1` before the
/// geometric conditions are imposed.
///
/// For a member `p(z) = kappa * z^rho * T(z^2-series)`:
///
/// * `F`: `(const * p)^(1/rho)` (power type; needs `rho > 0`),
/// * `G`: `const * z^(1-rho) * p(z)`,
/// * `H`: `const * z^(1-rho/2) * p(sqrt z)`,
/// * `Intrinsic`: Legendre only, `P_{2m-1}(z) / P'_{2m-1}(0)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Normalization {
    F,
    G,
    H,
    Intrinsic,
}

impl std::fmt::Display for Normalization {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Normalization::F => write!(f, "f"),
            Normalization::G => write!(f, "g"),
            Normalization::H => write!(f, "h"),
            Normalization::Intrinsic => write!(f, "intrinsic"),
        }
    }
}

impl FamilySpec {
    /// Family-level parameter validation (normalization-independent).
    pub fn validate(&self) -> Result<()> {
        let check_nu_q = |nu: f64, q: Option<f64>| -> Result<()> {
            if !nu.is_finite() || nu <= -1.0 {
                return Err(Error::InvalidSpec(format!("need nu > -1, got nu = {nu}")));
            }
            if let Some(q) = q {
                if !q.is_finite() || q <= 0.0 || q >= 1.0 {
                    return Err(Error::InvalidSpec(format!("need 0 < q < 1, got q = {q}")));
                }
            }
            Ok(())
        };
        match *self {
            FamilySpec::BesselJ { nu } => check_nu_q(nu, None),
            FamilySpec::JacksonQ { nu, q } | FamilySpec::HahnExtonQ { nu, q } => {
                check_nu_q(nu, Some(q))
            }
            FamilySpec::Lommel { mu } => {
                if !mu.is_finite() || mu <= -1.0 || mu >= 1.0 {
                    return Err(Error::InvalidSpec(format!(
                        "need mu in (-1, 1), got mu = {mu}"
                    )));
                }
                if mu == 0.0 {
                    return Err(Error::InvalidSpec("mu = 0 is excluded".into()));
                }
                if mu == -0.5 {
                    return Err(Error::InvalidSpec("mu = -1/2 is excluded".into()));
                }
                Ok(())
            }
            FamilySpec::LegendreOdd { m } => {
                if m < 1 {
                    return Err(Error::InvalidSpec("need m >= 1".into()));
                }
                if m > 60 {
                    // Coefficients of P_{2m-1} are built in f64; beyond this
                    // degree they are no longer reliable.
                    return Err(Error::InvalidSpec(format!("m = {m} exceeds supported 60")));
                }
                Ok(())
            }
        }
    }

    /// Validation of the pair (family, normalization).
    pub fn validate_with_norm(&self, norm: Normalization) -> Result<()> {
        self.validate()?;
        let legendre = matches!(self, FamilySpec::LegendreOdd { .. });
        match norm {
            Normalization::Intrinsic if !legendre => Err(Error::InvalidSpec(
                "the intrinsic normalization applies to Legendre only".into(),
            )),
            Normalization::F | Normalization::G | Normalization::H if legendre => Err(
                Error::InvalidSpec("Legendre uses the intrinsic normalization".into()),
            ),
            Normalization::F => {
                // F exponentiates by 1/rho, so the leading exponent must be positive.
                match *self {
                    FamilySpec::BesselJ { nu }
                    | FamilySpec::JacksonQ { nu, .. }
                    | FamilySpec::HahnExtonQ { nu, .. }
                        if nu <= 0.0 =>
                    {
                        Err(Error::InvalidSpec(format!(
                            "normalization f needs nu > 0, got nu = {nu}"
                        )))
                    }
                    _ => Ok(()),
                }
            }
            _ => Ok(()),
        }
    }

    /// Exponent `rho` of the leading power in `p(z) = kappa z^rho T(z)`.
    pub fn rho(&self) -> f64 {
        match *self {
            FamilySpec::BesselJ { nu }
            | FamilySpec::JacksonQ { nu, .. }
            | FamilySpec::HahnExtonQ { nu, .. } => nu,
            FamilySpec::Lommel { mu } => mu + 0.5,
            FamilySpec::LegendreOdd { .. } => 1.0,
        }
    }

    /// Short identifier used in CLI output.
    pub fn code(&self) -> &'static str {
        match self {
            FamilySpec::BesselJ { .. } => "bessel",
            FamilySpec::JacksonQ { .. } => "qbessel2",
            FamilySpec::HahnExtonQ { .. } => "qbessel3",
            FamilySpec::Lommel { .. } => "lommel",
            FamilySpec::LegendreOdd { .. } => "legendre",
        }
    }

    /// Primary parameter (`nu`, `mu`, or `m`) for tabular output.
    pub fn param1(&self) -> f64 {
        match *self {
            FamilySpec::BesselJ { nu }
            | FamilySpec::JacksonQ { nu, .. }
            | FamilySpec::HahnExtonQ { nu, .. } => nu,
            FamilySpec::Lommel { mu } => mu,
            FamilySpec::LegendreOdd { m } => m as f64,
        }
    }

    /// Secondary parameter (`q`), when the family has one.
    pub fn param2(&self) -> Option<f64> {
        match *self {
            FamilySpec::JacksonQ { q, .. } | FamilySpec::HahnExtonQ { q, .. } => Some(q),
            _ => None,
        }
    }
}
