//! JSON report format. Numeric defects and tolerances are decimal strings
//! so 50-digit values survive the trip; field order is fixed by the struct
//! layout, making serialize → parse → serialize byte-identical.

use periods_core::matrices::{CheckResult, CheckStatus};
use serde::{Deserialize, Serialize};

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct Report {
    pub tool_version: String,
    pub timestamp: String,
    pub prec: u32,
    pub results: Vec<ResultRow>,
    pub summary: Summary,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct ResultRow {
    pub name: String,
    pub status: String,
    pub defect: String,
    pub tolerance: String,
    pub elapsed_s: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

pub fn status_str(s: CheckStatus) -> &'static str {
    match s {
        CheckStatus::Pass => "pass",
        CheckStatus::Fail => "fail",
        CheckStatus::Skipped => "skipped",
    }
}

pub fn build_report(prec: u32, results: &[CheckResult]) -> Report {
    let rows: Vec<ResultRow> = results
        .iter()
        .map(|r| ResultRow {
            name: r.name.clone(),
            status: status_str(r.status).to_string(),
            defect: r.defect_str(),
            tolerance: r.tolerance_str(),
            elapsed_s: r.elapsed_s,
            note: r.note.clone(),
        })
        .collect();
    let summary = Summary {
        passed: results
            .iter()
            .filter(|r| r.status == CheckStatus::Pass)
            .count(),
        failed: results
            .iter()
            .filter(|r| r.status == CheckStatus::Fail)
            .count(),
        skipped: results
            .iter()
            .filter(|r| r.status == CheckStatus::Skipped)
            .count(),
    };
    Report {
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        timestamp: chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true),
        prec,
        results: rows,
        summary,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_roundtrip_is_byte_identical() {
        let report = Report {
            tool_version: "0.1.0".into(),
            timestamp: "2025-01-01T00:00:00Z".into(),
            prec: 50,
            results: vec![ResultRow {
                name: "zeta_even".into(),
                status: "pass".into(),
                defect: "8.43e-65".into(),
                tolerance: "1e-40".into(),
                elapsed_s: 0.0133,
                note: None,
            }],
            summary: Summary {
                passed: 1,
                failed: 0,
                skipped: 0,
            },
        };
        let first = serde_json::to_string_pretty(&report).unwrap();
        let parsed: Report = serde_json::from_str(&first).unwrap();
        let second = serde_json::to_string_pretty(&parsed).unwrap();
        assert_eq!(first, second);
        assert_eq!(parsed, report);
    }
}
