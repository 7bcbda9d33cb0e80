//! The verification suites: one check per acceptance criterion, shared by the command-line
//! `verify` command and the `acceptance` test target.

mod arith_props;
mod criteria;

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

pub use arith_props::{exact_div_suite, normalize_suite, ring_axiom_suite, PropertyOutcome};
pub use criteria::h_hprime_observed;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub id: String,
    pub title: String,
    pub status: Status,
    #[serde(serialize_with = "secs")]
    pub wall_time: Duration,
    pub detail: Vec<String>,
}

fn secs<S: serde::Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format!("{:.3}", d.as_secs_f64()))
}

impl CheckResult {
    pub fn skipped(id: &str, title: &str, why: &str) -> Self {
        CheckResult { id: id.into(), title: title.into(), status: Status::Skipped, wall_time: Duration::ZERO, detail: vec![why.into()] }
    }

    /// One line: `PASS  3  substack identity (0.41s)`.
    pub fn line(&self) -> String {
        format!("{} {:>3}  {} ({:.2}s)", self.status, self.id, self.title, self.wall_time.as_secs_f64())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failed_ids(&self) -> Vec<&str> {
        self.checks.iter().filter(|c| c.status == Status::Fail).map(|c| c.id.as_str()).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&c.line());
            out.push('\n');
            for d in &c.detail {
                out.push_str("       ");
                out.push_str(d);
                out.push('\n');
            }
        }
        let fails = self.failed_ids();
        if fails.is_empty() {
            out.push_str("all checks passed\n");
        } else {
            out.push_str(&format!("failed: {}\n", fails.join(", ")));
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Arith,
    Shuffle,
    Symfunc,
    Affine,
    Solomon,
    Pbw,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 7] = ["arith", "shuffle", "symfunc", "affine", "solomon", "pbw", "all"];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Arith => "arith",
            Suite::Shuffle => "shuffle",
            Suite::Symfunc => "symfunc",
            Suite::Affine => "affine",
            Suite::Solomon => "solomon",
            Suite::Pbw => "pbw",
            Suite::All => "all",
        }
    }

    /// Criterion numbers run by this suite.
    pub fn criteria(self) -> Vec<u8> {
        match self {
            Suite::Arith => vec![11],
            Suite::Shuffle => vec![1, 2, 3, 4, 5],
            Suite::Symfunc => vec![6, 7],
            Suite::Solomon => vec![8],
            Suite::Affine => vec![9],
            Suite::Pbw => vec![10],
            Suite::All => (1..=11).collect(),
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "arith" => Suite::Arith,
            "shuffle" => Suite::Shuffle,
            "symfunc" => Suite::Symfunc,
            "affine" => Suite::Affine,
            "solomon" => Suite::Solomon,
            "pbw" => Suite::Pbw,
            "all" => Suite::All,
            _ => return Err(format!("unknown suite {s:?}; expected one of {}", Suite::NAMES.join(", "))),
        })
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct VerifyOptions {
    /// Include the expensive cases (Solomon at n = 5).
    pub long: bool,
    /// Seed for random points and random cases.
    pub seed: u64,
}

/// Collects sub-check outcomes for one criterion.
pub(crate) struct Tally {
    lines: Vec<String>,
    failed: bool,
}

impl Tally {
    pub(crate) fn new() -> Self {
        Tally { lines: Vec::new(), failed: false }
    }

    pub(crate) fn check(&mut self, ok: bool, what: impl Into<String>) {
        let what = what.into();
        if !ok {
            self.failed = true;
            self.lines.push(format!("FAILED: {what}"));
        } else {
            self.lines.push(format!("ok: {what}"));
        }
    }

    pub(crate) fn note(&mut self, what: impl Into<String>) {
        self.lines.push(what.into());
    }

    pub(crate) fn error(&mut self, what: impl Into<String>, err: impl fmt::Display) {
        self.failed = true;
        self.lines.push(format!("ERROR: {}: {err}", what.into()));
    }

    /// Runs `f`, recording an error instead of propagating it.
    pub(crate) fn guard<T, E: fmt::Display>(&mut self, what: &str, r: Result<T, E>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.error(what, e);
                None
            }
        }
    }
}

/// Title of criterion `k`.
pub fn criterion_title(k: u8) -> &'static str {
    match k {
        1 => "H = q2^(n-1) H' for coprime (m,n)",
        2 => "eccentric pushforward equals H'",
        3 => "Sbar(0,n) = q1^(n(n-1)/2) [Mat_n substack]",
        4 => "Sbar presentations A and B agree",
        5 => "slope subalgebras commute",
        6 => "phi is the slope homomorphism",
        7 => "ribbon calculus",
        8 => "Solomon decomposition and ideal characters",
        9 => "affine symmetric group",
        10 => "PBW expansion",
        11 => "arithmetic properties and evaluation oracle",
        _ => "unknown",
    }
}

/// Runs criterion `k` (1..=11).
pub fn run_criterion(k: u8, opts: &VerifyOptions) -> CheckResult {
    let start = Instant::now();
    let mut t = Tally::new();
    match k {
        1 => criteria::c1(&mut t),
        2 => criteria::c2(&mut t),
        3 => criteria::c3(&mut t),
        4 => criteria::c4(&mut t),
        5 => criteria::c5(&mut t),
        6 => criteria::c6(&mut t),
        7 => criteria::c7(&mut t),
        8 => criteria::c8(&mut t, opts),
        9 => criteria::c9(&mut t),
        10 => criteria::c10(&mut t),
        11 => criteria::c11(&mut t, opts),
        _ => t.error("criterion", format!("no criterion {k}")),
    }
    CheckResult {
        id: k.to_string(),
        title: criterion_title(k).into(),
        status: if t.failed { Status::Fail } else { Status::Pass },
        wall_time: start.elapsed(),
        detail: t.lines,
    }
}

/// Runs every criterion of `suite`, concurrently, reporting in criterion order.
pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> VerifyReport {
    let mut checks: Vec<CheckResult> = suite.criteria().into_par_iter().map(|k| run_criterion(k, opts)).collect();
    if let Some(pos) = checks.iter().position(|c| c.id == "1") {
        checks.insert(pos + 1, h_hprime_observed());
    }
    VerifyReport { suite: suite.name().into(), checks }
}
