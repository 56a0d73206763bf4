//! Named checks over Chevalley-basis computations, and their reports.

mod checks;

use std::fmt::Write as _;
use std::time::Duration;

use serde::Serialize;
use serde_json::Value;
use thiserror::Error;

pub use checks::{
    cmd_property_suite, cmd_setup_report, cmd_sl2_table, cmd_verify_g2, cmd_verify_minimal_orbits,
    run_all, MAX_RANK,
};

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("max rank must be between 1 and {MAX_RANK}, got {0}")]
    MaxRank(usize),
    #[error("{alpha} is not a simple root of {simple_type}")]
    NotSimple {
        alpha: String,
        simple_type: chevalley::SimpleType,
    },
    #[error(transparent)]
    Algebra(#[from] chevalley::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    ReportOnly,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::ReportOnly => "report-only",
        }
    }
}

/// Outcome of one named check. `elapsed` is wall-clock time and is left out
/// of the JSON form so that reports are byte-stable.
#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub check_id: String,
    pub status: Status,
    pub details: Value,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl CheckResult {
    pub fn asserted(check_id: impl Into<String>, ok: bool, details: Value) -> Self {
        CheckResult {
            check_id: check_id.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            details,
            elapsed: Duration::ZERO,
        }
    }

    pub fn report_only(check_id: impl Into<String>, details: Value) -> Self {
        CheckResult {
            check_id: check_id.into(),
            status: Status::ReportOnly,
            details,
            elapsed: Duration::ZERO,
        }
    }

    pub fn with_elapsed(mut self, elapsed: Duration) -> Self {
        self.elapsed = elapsed;
        self
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
    pub report_only: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub checks: Vec<CheckResult>,
    pub summary: Tally,
}

impl Report {
    /// Sorts by `check_id` so the order never depends on execution order.
    pub fn new(mut checks: Vec<CheckResult>) -> Self {
        checks.sort_by(|a, b| a.check_id.cmp(&b.check_id));
        let mut summary = Tally::default();
        for c in &checks {
            match c.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::ReportOnly => summary.report_only += 1,
            }
        }
        Report { checks, summary }
    }

    pub fn any_failed(&self) -> bool {
        self.summary.fail > 0
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report values are plain JSON");
        s.push('\n');
        s
    }

    /// Aligned table with one row per check. Details are abbreviated.
    pub fn to_text(&self) -> String {
        let id_width = self
            .checks
            .iter()
            .map(|c| c.check_id.chars().count())
            .max()
            .unwrap_or(0)
            .max("CHECK".len());
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:<id_width$}  {:<11}  {:>9}  DETAILS",
            "CHECK", "STATUS", "ELAPSED"
        );
        for c in &self.checks {
            let _ = writeln!(
                out,
                "{:<id_width$}  {:<11}  {:>7.1}ms  {}",
                c.check_id,
                c.status.as_str(),
                c.elapsed.as_secs_f64() * 1e3,
                brief(&c.details)
            );
        }
        let _ = writeln!(
            out,
            "{} pass, {} fail, {} report-only",
            self.summary.pass, self.summary.fail, self.summary.report_only
        );
        out
    }
}

fn brief(details: &Value) -> String {
    const LIMIT: usize = 120;
    let s = details.to_string();
    if s.chars().count() <= LIMIT {
        s
    } else {
        let cut: String = s.chars().take(LIMIT - 3).collect();
        format!("{cut}...")
    }
}
