//! Flag-to-problem translation shared by the subcommands.

use clap::Args;
use radii_core::solver::{RadiusKind, RadiusProblem};
use radii_core::zeros::ComboKind;
use radii_core::{Error, FamilySpec, Normalization, Result};

/// Family selection: `--family` plus whichever parameter flags it needs.
#[derive(Args, Debug, Clone)]
pub struct Selection {
    /// Function family: bessel | qbessel2 | qbessel3 | lommel | legendre.
    #[arg(long)]
    pub family: String,
    /// Order nu (bessel, qbessel2, qbessel3).
    #[arg(long, allow_hyphen_values = true)]
    pub nu: Option<f64>,
    /// Parameter mu (lommel).
    #[arg(long, allow_hyphen_values = true)]
    pub mu: Option<f64>,
    /// Deformation base q in (0, 1) (qbessel2, qbessel3).
    #[arg(long)]
    pub q: Option<f64>,
    /// Index m >= 1 selecting the degree 2m-1 polynomial (legendre).
    #[arg(long)]
    pub m: Option<u32>,
}

impl Selection {
    pub fn family_spec(&self) -> Result<FamilySpec> {
        let need = |opt: Option<f64>, flag: &str| {
            opt.ok_or_else(|| {
                Error::InvalidSpec(format!("--family {} requires --{flag}", self.family))
            })
        };
        let spec = match self.family.as_str() {
            "bessel" => FamilySpec::BesselJ {
                nu: need(self.nu, "nu")?,
            },
            "qbessel2" => FamilySpec::JacksonQ {
                nu: need(self.nu, "nu")?,
                q: need(self.q, "q")?,
            },
            "qbessel3" => FamilySpec::HahnExtonQ {
                nu: need(self.nu, "nu")?,
                q: need(self.q, "q")?,
            },
            "lommel" => FamilySpec::Lommel {
                mu: need(self.mu, "mu")?,
            },
            "legendre" => FamilySpec::LegendreOdd {
                m: self
                    .m
                    .ok_or_else(|| Error::InvalidSpec("--family legendre requires --m".into()))?,
            },
            other => {
                let expected = "bessel, qbessel2, qbessel3, lommel or legendre";
                return Err(Error::InvalidSpec(format!(
                    "unknown family {other:?}: expected {expected}"
                )));
            }
        };
        spec.validate()?;
        Ok(spec)
    }
}

/// Full radius-problem selection: family, normalization and radius kind.
#[derive(Args, Debug, Clone)]
pub struct ProblemArgs {
    #[command(flatten)]
    pub selection: Selection,
    /// Normalization: f | g | h | intrinsic.
    #[arg(long)]
    pub norm: String,
    /// Radius kind: lem-star | lem-convex | jan-star | jan-convex.
    #[arg(long)]
    pub kind: String,
    /// Janowski parameter A (jan-star, jan-convex).
    #[arg(long = "A", allow_hyphen_values = true)]
    pub a: Option<f64>,
    /// Janowski parameter B (jan-star, jan-convex).
    #[arg(long = "B", allow_hyphen_values = true)]
    pub b: Option<f64>,
}

impl ProblemArgs {
    pub fn problem(&self) -> Result<RadiusProblem> {
        let family = self.selection.family_spec()?;
        let norm = parse_norm(&self.norm)?;
        let janowski = || -> Result<(f64, f64)> {
            match (self.a, self.b) {
                (Some(a), Some(b)) => Ok((a, b)),
                _ => Err(Error::InvalidSpec(format!(
                    "--kind {} requires both --A and --B",
                    self.kind
                ))),
            }
        };
        let kind = match self.kind.as_str() {
            "lem-star" | "lem-convex" => {
                if self.a.is_some() || self.b.is_some() {
                    return Err(Error::InvalidSpec(
                        "--A/--B apply only to the Janowski kinds".into(),
                    ));
                }
                if self.kind == "lem-star" {
                    RadiusKind::LemStar
                } else {
                    RadiusKind::LemConvex
                }
            }
            "jan-star" => {
                let (a, b) = janowski()?;
                RadiusKind::JanStar { a, b }
            }
            "jan-convex" => {
                let (a, b) = janowski()?;
                RadiusKind::JanConvex { a, b }
            }
            other => {
                return Err(Error::InvalidSpec(format!(
                    "unknown kind {other:?}: expected lem-star, lem-convex, jan-star or jan-convex"
                )))
            }
        };
        let problem = RadiusProblem { family, norm, kind };
        problem.validate()?;
        Ok(problem)
    }
}

pub fn parse_norm(text: &str) -> Result<Normalization> {
    match text {
        "f" => Ok(Normalization::F),
        "g" => Ok(Normalization::G),
        "h" => Ok(Normalization::H),
        "intrinsic" => Ok(Normalization::Intrinsic),
        other => Err(Error::InvalidSpec(format!(
            "unknown normalization {other:?}: expected f, g, h or intrinsic"
        ))),
    }
}

/// Combination selector for `zeros`: `fn`, `dfn` or `combo:<c>`.
pub fn parse_combo(text: &str) -> std::result::Result<ComboKind, String> {
    match text {
        "fn" => Ok(ComboKind::Function),
        "dfn" => Ok(ComboKind::Derivative),
        other => match other.strip_prefix("combo:") {
            Some(c) => c
                .parse::<f64>()
                .map(ComboKind::Combination)
                .map_err(|_| format!("combo shift {c:?} is not a number")),
            None => Err(format!(
                "unknown combination {other:?}: expected fn, dfn or combo:<c>"
            )),
        },
    }
}
