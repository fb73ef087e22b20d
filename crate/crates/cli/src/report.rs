//! The JSON report: configuration echo, conventions, check records and
//! summary counts.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::config::RunConfig;

/// Outcome of one check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// One executed (or skipped) check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    /// `suite/…/property`, unique within a report.
    pub name: String,
    /// The mathematical statement the check verifies.
    pub anchor: String,
    pub status: Status,
    /// First counterexample of a failing check, or why it was skipped.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub runtime_ms: u64,
}

/// Conventions every value in the report depends on.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Conventions {
    pub euler_form: String,
    pub serre_pairs: String,
    pub interval_order: String,
    /// Which coproduct enters opposite when the Hopf pairing splits products.
    pub pairing_side: String,
    /// Multiplier of `(α|β)/h` in the value of `(Ξ_α|Ξ_β)`.
    pub pairing_cartan_scale: String,
    pub wedge: String,
    pub deformation: String,
}

impl Conventions {
    pub fn of(cfg: &RunConfig) -> Self {
        let pairing = cqg_core::hopf::pairing::PairingOptions::default();
        Conventions {
            euler_form: cfg.euler.name().into(),
            serre_pairs: cfg.serre.name().into(),
            interval_order: cfg.interval_order.name().into(),
            pairing_side: pairing.side.name().into(),
            pairing_cartan_scale: pairing.cartan_scale.to_string(),
            wedge: "a^b = (a (x) b - b (x) a)/2".into(),
            deformation: "q = exp(h/2), K = exp(h Xi/2)".into(),
        }
    }
}

/// Counts by status.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

/// A complete run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub config: RunConfig,
    pub conventions: Conventions,
    pub checks: Vec<CheckRecord>,
    pub summary: Summary,
}

impl Report {
    /// Assembles a report; records are sorted by name.
    pub fn new(config: RunConfig, mut checks: Vec<CheckRecord>) -> Self {
        checks.sort_by(|a, b| a.name.cmp(&b.name));
        let mut summary = Summary { total: checks.len(), ..Summary::default() };
        for c in &checks {
            match c.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Skipped => summary.skipped += 1,
            }
        }
        Report { conventions: Conventions::of(&config), config, checks, summary }
    }

    /// Exit-status contract: success iff no check failed.
    pub fn success(&self) -> bool {
        self.summary.fail == 0
    }

    /// Records whose name starts with `prefix`.
    pub fn with_prefix<'a>(&'a self, prefix: &'a str) -> impl Iterator<Item = &'a CheckRecord> + 'a {
        self.checks.iter().filter(move |c| c.name.starts_with(prefix))
    }

    /// The report with every `runtime_ms` set to zero, for comparisons.
    pub fn without_timings(&self) -> Self {
        let mut r = self.clone();
        for c in &mut r.checks {
            c.runtime_ms = 0;
        }
        r
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

/// Runs a check and times it.  `Ok(None)` is a pass, `Ok(Some(w))` a
/// failure with witness `w`; an engine error is a failure whose witness is
/// the error message.
pub fn check(name: impl Into<String>, anchor: &str, f: impl FnOnce() -> cqg_core::Result<Option<String>>) -> CheckRecord {
    let start = Instant::now();
    let result = f();
    let runtime_ms = start.elapsed().as_millis() as u64;
    let (status, witness) = match result {
        Ok(None) => (Status::Pass, None),
        Ok(Some(w)) => (Status::Fail, Some(w)),
        Err(e) => (Status::Fail, Some(format!("error: {e}"))),
    };
    CheckRecord { name: name.into(), anchor: anchor.into(), status, witness, runtime_ms }
}

/// A check that was not run, with the reason.
pub fn skipped(name: impl Into<String>, anchor: &str, reason: impl Into<String>) -> CheckRecord {
    CheckRecord { name: name.into(), anchor: anchor.into(), status: Status::Skipped, witness: Some(reason.into()), runtime_ms: 0 }
}

/// `None` when the list of defects is empty, else a witness naming the first
/// one and the count.
pub fn first_defect(defects: &[String]) -> Option<String> {
    match defects {
        [] => None,
        [one] => Some(one.clone()),
        [first, ..] => Some(format!("{first} (and {} more)", defects.len() - 1)),
    }
}
