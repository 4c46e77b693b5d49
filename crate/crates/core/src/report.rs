//! JSON serialization of bifurcation reports.

use serde::Serialize;
use serde_json::Value;

use crate::bifurcation::{Analysis, BifurcationReport};
use crate::euler_ring::EulerElementT2;
use crate::problem_file::integer_to_json;
use crate::spectral::{format_rational, BifurcationLevel};

#[derive(Serialize)]
pub struct LevelJson {
    pub k: u64,
    pub alpha: String,
    pub lambda_sq: String,
}

impl From<&BifurcationLevel> for LevelJson {
    fn from(l: &BifurcationLevel) -> Self {
        LevelJson {
            k: l.k(),
            alpha: format_rational(l.alpha()),
            lambda_sq: format_rational(l.lambda_sq()),
        }
    }
}

#[derive(Serialize)]
pub struct TermJson {
    pub generator: String,
    pub coeff: Value,
}

pub fn element_json(e: &EulerElementT2) -> Vec<TermJson> {
    e.terms()
        .map(|(h, c)| TermJson {
            generator: h.to_string(),
            coeff: integer_to_json(c),
        })
        .collect()
}

#[derive(Serialize)]
pub struct ReportJson {
    pub level: LevelJson,
    pub index: Vec<TermJson>,
    pub nontrivial: bool,
    pub certificate: &'static str,
    pub classification: &'static str,
}

impl From<&BifurcationReport> for ReportJson {
    fn from(r: &BifurcationReport) -> Self {
        ReportJson {
            level: (&r.level).into(),
            index: element_json(&r.index),
            nontrivial: r.nontrivial,
            certificate: r.certificate.as_str(),
            classification: r.classification.as_str(),
        }
    }
}

#[derive(Serialize)]
pub struct AnalysisJson {
    pub classification: &'static str,
    pub reports: Vec<ReportJson>,
    /// Per report: `λ²` values of a zero-sum subset through that level, or `null`.
    pub zero_sum_subsets: Vec<Option<Vec<String>>>,
}

impl From<&Analysis> for AnalysisJson {
    fn from(a: &Analysis) -> Self {
        AnalysisJson {
            classification: a.classification.as_str(),
            reports: a.reports.iter().map(ReportJson::from).collect(),
            zero_sum_subsets: a
                .zero_sum_witnesses
                .iter()
                .map(|w| {
                    w.as_ref().map(|levels| {
                        levels
                            .iter()
                            .map(|l| format_rational(l.lambda_sq()))
                            .collect()
                    })
                })
                .collect(),
        }
    }
}

pub fn report_to_json(r: &BifurcationReport) -> String {
    serde_json::to_string_pretty(&ReportJson::from(r)).expect("plain data serializes")
}

pub fn analysis_to_json(a: &Analysis) -> String {
    serde_json::to_string_pretty(&AnalysisJson::from(a)).expect("plain data serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bifurcation::{example_problem, report};
    use num_rational::BigRational;

    #[test]
    fn report_fields() {
        let p = example_problem();
        let level = p.level(1, &BigRational::from_integer(2.into())).unwrap();
        let r = report(&p, &level).unwrap();
        let v: Value = serde_json::from_str(&report_to_json(&r)).unwrap();
        assert_eq!(v["level"]["k"], 1);
        assert_eq!(v["level"]["alpha"], "2");
        assert_eq!(v["level"]["lambda_sq"], "1/2");
        assert_eq!(v["index"][0]["generator"], "F(1,0;0,1)");
        assert_eq!(v["index"][0]["coeff"], -1);
        assert_eq!(v["nontrivial"], true);
        assert_eq!(v["certificate"], "SameSignPath");
        assert_eq!(v["classification"], "NonCompactGuaranteed(c2)");
    }
}
