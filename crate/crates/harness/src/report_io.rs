//! Report serialization: a header line plus one report per line (NDJSON),
//! and a human-readable rendering of the same data.
//!
//! Everything in the output is a deterministic function of the suite and the
//! instance spec except the header's `timestamp` field.

use std::io::{self, Write};
use std::time::{SystemTime, UNIX_EPOCH};

use nhilbert_core::report::{PropertyReport, ReportStatus};
use nhilbert_core::TolerancePolicy;
use serde::{Deserialize, Serialize};

/// First line of every report stream. Records how the run was configured,
/// including the sampling distribution, which is a harness choice rather
/// than a mathematical one.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunHeader {
    pub tool: String,
    pub version: String,
    pub suite: String,
    pub seed: u64,
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub distribution: String,
    /// Seconds since the Unix epoch; the single nondeterministic field.
    pub timestamp: u64,
}

impl RunHeader {
    pub fn new(suite: &str, seed: u64, tol: TolerancePolicy) -> Self {
        let timestamp = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        Self {
            tool: "nhilbert".to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            suite: suite.to_string(),
            seed,
            abs_tol: tol.abs_tol,
            rel_tol: tol.rel_tol,
            distribution: "entries uniform in [-1, 1) per component (unit box)".to_string(),
            timestamp,
        }
    }
}

/// Write the header and each report as one JSON object per line.
pub fn write_reports(
    out: &mut dyn Write,
    header: &RunHeader,
    reports: &[PropertyReport],
) -> io::Result<()> {
    let line = serde_json::to_string(header).map_err(io::Error::other)?;
    writeln!(out, "{line}")?;
    for report in reports {
        let line = serde_json::to_string(report).map_err(io::Error::other)?;
        writeln!(out, "{line}")?;
    }
    Ok(())
}

/// The full NDJSON stream as a string.
pub fn reports_to_ndjson(header: &RunHeader, reports: &[PropertyReport]) -> String {
    let mut buf = Vec::new();
    write_reports(&mut buf, header, reports).expect("writing to a Vec cannot fail");
    String::from_utf8(buf).expect("serde_json output is UTF-8")
}

/// Human-readable rendering: one status line per report plus a verdict.
pub fn render_text(header: &RunHeader, reports: &[PropertyReport]) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "{} {} · suite {} · seed {} · tol abs {:e} rel {:e}\n",
        header.tool, header.version, header.suite, header.seed, header.abs_tol, header.rel_tol
    ));
    for r in reports {
        let status = match r.status {
            ReportStatus::Pass => "pass",
            ReportStatus::Fail => "FAIL",
            ReportStatus::Fixture => "fixture",
        };
        out.push_str(&format!(
            "  {:<18} {:>7}  trials {:>5}  failures {:>3}  worst {:.3e}\n",
            r.suite, status, r.trials, r.failures, r.worst_violation
        ));
        if r.status == ReportStatus::Fail {
            if let Some(w) = &r.witness {
                out.push_str(&format!("      witness: {w}\n"));
            }
        }
    }
    let failed = reports
        .iter()
        .filter(|r| r.status == ReportStatus::Fail)
        .count();
    if failed == 0 {
        out.push_str("verdict: all reports pass\n");
    } else {
        out.push_str(&format!("verdict: {failed} report(s) FAILED\n"));
    }
    out
}

/// The process exit code implied by a set of reports: 0 when nothing failed
/// (fixtures count as expected), 1 otherwise. Invalid input is the caller's
/// concern and maps to 2 before reports exist.
pub fn exit_code(reports: &[PropertyReport]) -> i32 {
    if reports.iter().any(|r| r.status == ReportStatus::Fail) {
        1
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample_report(suite: &str, status: ReportStatus) -> PropertyReport {
        PropertyReport {
            suite: suite.to_string(),
            seed: 7,
            trials: 10,
            failures: if status == ReportStatus::Pass { 0 } else { 2 },
            worst_violation: 1.5e-12,
            witness: None,
            status,
        }
    }

    #[test]
    fn ndjson_has_header_line_then_one_line_per_report() {
        let header = RunHeader::new("riesz", 7, TolerancePolicy::default());
        let reports = vec![
            sample_report("riesz", ReportStatus::Pass),
            sample_report("riesz-fixture", ReportStatus::Pass),
        ];
        let text = reports_to_ndjson(&header, &reports);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 3);
        let head: serde_json::Value = serde_json::from_str(lines[0]).unwrap();
        assert_eq!(head["tool"], "nhilbert");
        assert_eq!(head["seed"], 7);
        let first: PropertyReport = serde_json::from_str(lines[1]).unwrap();
        assert_eq!(first, reports[0]);
    }

    #[test]
    fn header_round_trips_and_timestamp_is_isolated() {
        let mut a = RunHeader::new("all", 0, TolerancePolicy::new(1e-8, 1e-8));
        let mut b = RunHeader::new("all", 0, TolerancePolicy::new(1e-8, 1e-8));
        a.timestamp = 0;
        b.timestamp = 0;
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
        let back: RunHeader = serde_json::from_str(&serde_json::to_string(&a).unwrap()).unwrap();
        assert_eq!(back, a);
    }

    #[test]
    fn render_text_shows_status_and_verdict() {
        let header = RunHeader::new("norms", 0, TolerancePolicy::default());
        let reports = vec![
            sample_report("norm-relations", ReportStatus::Pass),
            sample_report("norm-skew", ReportStatus::Fixture),
        ];
        let text = render_text(&header, &reports);
        assert!(text.contains("norm-relations"));
        assert!(text.contains("pass"));
        assert!(text.contains("fixture"));
        assert!(text.contains("verdict: all reports pass"));
    }

    #[test]
    fn exit_code_ignores_fixtures_but_not_failures() {
        let pass = sample_report("a", ReportStatus::Pass);
        let fixture = sample_report("b", ReportStatus::Fixture);
        let fail = sample_report("c", ReportStatus::Fail);
        assert_eq!(exit_code(&[pass.clone(), fixture.clone()]), 0);
        assert_eq!(exit_code(&[pass, fixture, fail]), 1);
    }
}
