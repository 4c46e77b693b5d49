//! JSON problem files.
//!
//! ```json
//! {
//!   "spectra": [
//!     { "alpha": "0", "isotypic": [ { "m": 0, "k": 1 }, { "m": 1, "k": 1 } ] },
//!     { "alpha": "2", "isotypic": [ { "m": 0, "k": 1 } ] }
//!   ],
//!   "deg_s1": [ { "subgroup": "Z1", "coeff": 1 } ],
//!   "unique_critical_point": true
//! }
//! ```
//!
//! `alpha` is an integer or a `"p/q"` string, `coeff` an integer (or a decimal string for
//! values outside `i64`). Floats and unknown fields are rejected.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::euler_ring::{EulerElementS1, S1Orbit};
use crate::representations::S1Representation;
use crate::spectral::{
    format_rational, parse_rational, CriticalPointProblem, ProblemError, SpectralDatum,
};

#[derive(Debug, thiserror::Error)]
pub enum ProblemFileError {
    #[error("malformed problem file: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid {field}: {message}")]
    Field { field: String, message: String },
    #[error(transparent)]
    Problem(#[from] ProblemError),
}

fn field_err(field: impl Into<String>, message: impl Into<String>) -> ProblemFileError {
    ProblemFileError::Field {
        field: field.into(),
        message: message.into(),
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawProblem {
    spectra: Vec<RawDatum>,
    deg_s1: Vec<RawDegreeTerm>,
    unique_critical_point: bool,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDatum {
    alpha: Value,
    isotypic: Vec<RawSummand>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSummand {
    m: u64,
    k: u64,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDegreeTerm {
    subgroup: String,
    coeff: Value,
}

/// Integer JSON value, or a string holding a decimal integer.
pub(crate) fn integer_from_json(v: &Value, field: &str) -> Result<BigInt, ProblemFileError> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(i.into())
            } else if let Some(u) = n.as_u64() {
                Ok(u.into())
            } else {
                Err(field_err(field, format!("{n} is not an integer")))
            }
        }
        Value::String(s) => parse_rational(s)
            .filter(|q| q.is_integer())
            .map(|q| q.to_integer())
            .ok_or_else(|| field_err(field, format!("{s:?} is not an integer"))),
        other => Err(field_err(
            field,
            format!("expected an integer, found {other}"),
        )),
    }
}

pub(crate) fn integer_to_json(c: &BigInt) -> Value {
    match i64::try_from(c) {
        Ok(v) => Value::from(v),
        Err(_) => Value::String(c.to_string()),
    }
}

fn rational_from_json(v: &Value, field: &str) -> Result<BigRational, ProblemFileError> {
    match v {
        Value::Number(n) if n.is_i64() || n.is_u64() => {
            Ok(BigRational::from_integer(integer_from_json(v, field)?))
        }
        Value::Number(n) => Err(field_err(field, format!("{n}: floats are not accepted"))),
        Value::String(s) => parse_rational(s)
            .ok_or_else(|| field_err(field, format!("{s:?} is not a rational \"p/q\""))),
        other => Err(field_err(
            field,
            format!("expected a rational, found {other}"),
        )),
    }
}

/// Parses and validates a problem file.
pub fn parse_problem(text: &str) -> Result<CriticalPointProblem, ProblemFileError> {
    let raw: RawProblem = serde_json::from_str(text)?;
    let mut spectra = Vec::with_capacity(raw.spectra.len());
    for (i, d) in raw.spectra.iter().enumerate() {
        let alpha = rational_from_json(&d.alpha, &format!("spectra[{i}].alpha"))?;
        let isotypic = S1Representation::from_summands(d.isotypic.iter().map(|s| (s.m, s.k)));
        spectra.push(SpectralDatum::new(alpha, isotypic));
    }
    let mut terms = Vec::with_capacity(raw.deg_s1.len());
    for (i, t) in raw.deg_s1.iter().enumerate() {
        let orbit: S1Orbit = t
            .subgroup
            .parse()
            .map_err(|e| field_err(format!("deg_s1[{i}].subgroup"), format!("{e}")))?;
        let coeff = integer_from_json(&t.coeff, &format!("deg_s1[{i}].coeff"))?;
        terms.push((coeff, orbit));
    }
    Ok(CriticalPointProblem::new(
        spectra,
        EulerElementS1::from_terms(terms),
        raw.unique_critical_point,
    )?)
}

/// Canonical pretty-printed JSON for a problem; [`parse_problem`] reads it back unchanged.
pub fn write_problem(problem: &CriticalPointProblem) -> String {
    let raw = RawProblem {
        spectra: problem
            .spectra()
            .iter()
            .map(|d| RawDatum {
                alpha: Value::String(format_rational(&d.alpha)),
                isotypic: d
                    .isotypic
                    .summands()
                    .into_iter()
                    .map(|(m, k)| RawSummand { m, k })
                    .collect(),
            })
            .collect(),
        deg_s1: problem
            .deg_s1()
            .terms()
            .map(|(o, c)| RawDegreeTerm {
                subgroup: o.to_string(),
                coeff: integer_to_json(c),
            })
            .collect(),
        unique_critical_point: problem.unique_critical_point(),
    };
    let mut out = serde_json::to_string_pretty(&raw).expect("plain data serializes");
    out.push('\n');
    out
}
