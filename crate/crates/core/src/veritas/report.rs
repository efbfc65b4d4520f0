use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use serde::Serialize;
use sha2::{Digest, Sha256};

use super::{ClaimResult, VeritasError};

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: u32,
    pub suite: String,
    pub summary: String,
    pub passed: usize,
    pub total: usize,
    pub claims: Vec<ClaimResult>,
}

impl Report {
    /// Failing claims first, registry order otherwise.
    pub fn new(suite: &str, mut claims: Vec<ClaimResult>) -> Report {
        claims.sort_by_key(|c| c.pass);
        let passed = claims.iter().filter(|c| c.pass).count();
        let total = claims.len();
        Report { schema: 1, suite: suite.to_string(), summary: format!("{passed}/{total}"), passed, total, claims }
    }

    pub fn all_pass(&self) -> bool {
        self.passed == self.total
    }

    pub fn failures(&self) -> impl Iterator<Item = &ClaimResult> {
        self.claims.iter().filter(|c| !c.pass)
    }
}

pub fn render_table(report: &Report) -> String {
    let w = report.claims.iter().map(|c| c.id.len()).max().unwrap_or(5).max(5);
    let sw = report.claims.iter().map(|c| c.suite.len()).max().unwrap_or(5).max(5);
    let mut out = String::new();
    let _ = writeln!(out, "{:<4}  {:<sw$}  {:<w$}  {:>6}  expected / computed", "", "suite", "claim", "ms");
    for c in &report.claims {
        let mark = if c.pass { "ok" } else { "FAIL" };
        let _ = write!(out, "{:<4}  {:<sw$}  {:<w$}  {:>6}  {}", mark, c.suite, c.id, c.runtime_ms, c.expected);
        if !c.pass {
            let _ = write!(out, " / {}", c.computed);
        }
        out.push('\n');
    }
    let _ = writeln!(out, "{}: {}", report.suite, report.summary);
    out
}

/// Writes `<suite>-<hash>.json` under `dir`, where the hash covers the JSON body.
pub fn write_report(report: &Report, dir: &Path) -> Result<PathBuf, VeritasError> {
    let body = serde_json::to_string_pretty(report).map_err(|e| VeritasError::Io(e.to_string()))?;
    let digest = Sha256::digest(body.as_bytes());
    let hex: String = digest.iter().take(6).map(|b| format!("{b:02x}")).collect();
    let slug: String =
        report.suite.chars().map(|c| if c.is_ascii_alphanumeric() { c } else { '-' }).collect();
    fs::create_dir_all(dir).map_err(|e| VeritasError::Io(e.to_string()))?;
    let path = dir.join(format!("{slug}-{hex}.json"));
    fs::write(&path, body + "\n").map_err(|e| VeritasError::Io(e.to_string()))?;
    Ok(path)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_report() {
        let r = Report::new("none", vec![]);
        assert_eq!(r.summary, "0/0");
        assert!(r.all_pass());
        assert!(render_table(&r).contains("none: 0/0"));
    }

    fn claim(id: &str, pass: bool) -> ClaimResult {
        ClaimResult {
            suite: "toy".into(),
            id: id.into(),
            anchor: "anchor".into(),
            inputs: String::new(),
            expected: serde_json::json!(1),
            provenance: super::super::Provenance::Trivial,
            computed: serde_json::json!(if pass { 1 } else { 2 }),
            pass,
            runtime_ms: 0,
        }
    }

    #[test]
    fn failures_first_then_registry_order() {
        let r = Report::new("toy", vec![claim("a", true), claim("b", false), claim("c", true), claim("d", false)]);
        let ids: Vec<&str> = r.claims.iter().map(|c| c.id.as_str()).collect();
        assert_eq!(ids, ["b", "d", "a", "c"]);
        assert_eq!(r.summary, "2/4");
        assert!(!r.all_pass());
        assert!(render_table(&r).contains("FAIL"));
    }

    #[test]
    fn written_report_is_content_addressed() {
        let dir = std::env::temp_dir().join(format!("svcurves-report-{}", std::process::id()));
        let r = Report::new("toy 1", vec![claim("a", true)]);
        let p1 = write_report(&r, &dir).unwrap();
        let p2 = write_report(&r, &dir).unwrap();
        assert_eq!(p1, p2);
        assert!(p1.file_name().unwrap().to_str().unwrap().starts_with("toy-1-"));
        let body = std::fs::read_to_string(&p1).unwrap();
        assert!(body.contains("\"provenance\": \"trivial\""));
        assert!(!body.contains("runtime"));
        std::fs::remove_dir_all(&dir).unwrap();
    }
}
