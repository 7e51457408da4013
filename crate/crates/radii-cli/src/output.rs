//! Output rendering: frozen-column CSV with RFC-4180-style quoting, and
//! JSON mirrors of the same fields under a timestamped envelope.

use radii_core::solver::{RadiusProblem, RadiusResult};
use radii_core::zeros::{ComboKind, ZeroResult};
use radii_core::Certificate;
use serde_json::{json, Value};

/// Frozen column order; new fields append only.
pub const TABLE_HEADER: &str =
    "family,param1,param2,norm,kind,A,B,radius,domain_cap,target,residual_master,residual_paper,status";
pub const CERTIFY_COLUMNS: &str = ",inner_margin,outer_violation,oracle_radius,oracle_delta";
pub const ZEROS_HEADER: &str =
    "family,param1,param2,combo,n,location,residual,bracket_lo,bracket_hi,scan_step";

/// 17 significant digits, enough for an exact binary64 round-trip.
pub fn fmt_float(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn csv_field(text: &str) -> String {
    if text.contains(',') || text.contains('"') || text.contains('\n') || text.contains('\r') {
        format!("\"{}\"", text.replace('"', "\"\""))
    } else {
        text.to_string()
    }
}

pub fn combo_code(combo: ComboKind) -> String {
    match combo {
        ComboKind::Function => "fn".into(),
        ComboKind::Derivative => "dfn".into(),
        ComboKind::Combination(c) => format!("combo:{c}"),
    }
}

/// One table line: the solved result with an optional certificate, or the
/// error that stopped the job.
pub struct JobOutcome {
    pub problem: RadiusProblem,
    pub outcome: Result<(RadiusResult, Option<Certificate>), radii_core::Error>,
}

fn identity_fields(
    problem: &RadiusProblem,
) -> (String, String, String, String, String, String, String) {
    let family = problem.family.code().to_string();
    let param1 = fmt_float(problem.family.param1());
    let param2 = problem.family.param2().map(fmt_float).unwrap_or_default();
    let norm = problem.norm.to_string();
    let kind = problem.kind.code().to_string();
    let (a, b) = match problem.kind.janowski_params() {
        Some((a, b)) => (fmt_float(a), fmt_float(b)),
        None => (String::new(), String::new()),
    };
    (family, param1, param2, norm, kind, a, b)
}

pub fn csv_table(outcomes: &[JobOutcome], with_certificates: bool) -> String {
    let mut out = String::from(TABLE_HEADER);
    if with_certificates {
        out.push_str(CERTIFY_COLUMNS);
    }
    out.push('\n');
    for job in outcomes {
        let (family, p1, p2, norm, kind, a, b) = identity_fields(&job.problem);
        let mut fields = vec![family, p1, p2, norm, kind, a, b];
        match &job.outcome {
            Ok((result, cert)) => {
                fields.extend([
                    fmt_float(result.radius),
                    fmt_float(result.domain_cap),
                    fmt_float(result.target),
                    fmt_float(result.residual_master),
                    fmt_float(result.residual_paper),
                    "ok".to_string(),
                ]);
                if with_certificates {
                    match cert {
                        Some(c) => fields.extend([
                            fmt_float(c.inner_margin),
                            fmt_float(c.outer_violation),
                            fmt_float(c.oracle_radius),
                            fmt_float(c.oracle_delta),
                        ]),
                        None => fields.extend(std::iter::repeat_with(String::new).take(4)),
                    }
                }
            }
            Err(e) => {
                fields.extend(std::iter::repeat_with(String::new).take(5));
                fields.push(e.to_string());
                if with_certificates {
                    fields.extend(std::iter::repeat_with(String::new).take(4));
                }
            }
        }
        let line: Vec<String> = fields.iter().map(|f| csv_field(f)).collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    out
}

/// JSON rows mirror the CSV fields; numbers stay numbers and absent
/// values become null.
pub fn json_rows(outcomes: &[JobOutcome]) -> Value {
    let rows: Vec<Value> = outcomes
        .iter()
        .map(|job| {
            let (a, b) = match job.problem.kind.janowski_params() {
                Some((a, b)) => (json!(a), json!(b)),
                None => (Value::Null, Value::Null),
            };
            let mut row = json!({
                "family": job.problem.family.code(),
                "param1": job.problem.family.param1(),
                "param2": job.problem.family.param2(),
                "norm": job.problem.norm.to_string(),
                "kind": job.problem.kind.code(),
                "A": a,
                "B": b,
            });
            let map = row.as_object_mut().expect("object literal");
            match &job.outcome {
                Ok((result, cert)) => {
                    map.insert("radius".into(), json!(result.radius));
                    map.insert("domain_cap".into(), json!(result.domain_cap));
                    map.insert("target".into(), json!(result.target));
                    map.insert("residual_master".into(), json!(result.residual_master));
                    map.insert("residual_paper".into(), json!(result.residual_paper));
                    map.insert("iterations".into(), json!(result.iterations));
                    map.insert("status".into(), json!("ok"));
                    map.insert(
                        "certificate".into(),
                        match cert {
                            Some(c) => serde_json::to_value(c).expect("certificate serializes"),
                            None => Value::Null,
                        },
                    );
                }
                Err(e) => {
                    for key in [
                        "radius",
                        "domain_cap",
                        "target",
                        "residual_master",
                        "residual_paper",
                        "iterations",
                        "certificate",
                    ] {
                        map.insert(key.into(), Value::Null);
                    }
                    map.insert("status".into(), json!(e.to_string()));
                }
            }
            row
        })
        .collect();
    Value::Array(rows)
}

pub fn csv_zeros(
    family: &radii_core::FamilySpec,
    combo: ComboKind,
    rungs: &[ZeroResult],
) -> String {
    let mut out = String::from(ZEROS_HEADER);
    out.push('\n');
    let param2 = family.param2().map(fmt_float).unwrap_or_default();
    for (i, rung) in rungs.iter().enumerate() {
        let fields = [
            family.code().to_string(),
            fmt_float(family.param1()),
            param2.clone(),
            combo_code(combo),
            (i + 1).to_string(),
            fmt_float(rung.location),
            fmt_float(rung.residual),
            fmt_float(rung.bracket.0),
            fmt_float(rung.bracket.1),
            fmt_float(rung.scan_step),
        ];
        let line: Vec<String> = fields.iter().map(|f| csv_field(f)).collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    out
}

pub fn json_zeros(
    family: &radii_core::FamilySpec,
    combo: ComboKind,
    rungs: &[ZeroResult],
) -> Value {
    let zeros: Vec<Value> = rungs
        .iter()
        .enumerate()
        .map(|(i, rung)| {
            json!({
                "n": i + 1,
                "location": rung.location,
                "residual": rung.residual,
                "bracket": [rung.bracket.0, rung.bracket.1],
                "scan_step": rung.scan_step,
            })
        })
        .collect();
    json!({
        "family": family.code(),
        "param1": family.param1(),
        "param2": family.param2(),
        "combo": combo_code(combo),
        "zeros": zeros,
    })
}

/// Wrap a payload with the emission timestamp; everything else in the
/// output is deterministic.
pub fn envelope(payload: Value) -> Value {
    json!({
        "timestamp": chrono::Utc::now().to_rfc3339(),
        "data": payload,
    })
}
