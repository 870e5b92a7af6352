//! Exhaustive sweeps, the forbidden-subgraph conjecture check, and figure
//! fixtures, all reporting through [`SweepReport`].
//!
//! Workers are stateless functions of one graph; their outcomes come back
//! in input order and are folded by a single reducer, so serial and
//! parallel runs of the same sweep produce the same report.

mod conjecture;
mod fixtures;
mod suite;

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::par::Exec;

pub use conjecture::conjecture_check;
pub use fixtures::{check_fixture, fixture_report, fixtures, Fixture, FixtureObject};
pub use suite::{check_graph, run_suite, theorem_suite, Check, SuiteOptions};

/// Result of one check on one subject.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(String),
    /// A bounded search stopped early; never counted as a pass.
    Incomplete(String),
    /// The check's hypothesis does not apply.
    Skip,
}

impl Outcome {
    fn from_bool(ok: bool, detail: impl FnOnce() -> String) -> Outcome {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Fail(detail())
        }
    }
}

/// Everything a worker reports about one subject.
#[derive(Clone, Debug, Default)]
pub struct SubjectOutcome {
    pub subject: String,
    /// Class memberships to be counted.
    pub classes: Vec<&'static str>,
    pub results: Vec<(&'static str, Outcome)>,
}

impl SubjectOutcome {
    pub fn new(subject: impl Into<String>) -> Self {
        SubjectOutcome {
            subject: subject.into(),
            ..Default::default()
        }
    }

    fn push(&mut self, check: &'static str, outcome: Outcome) {
        self.results.push((check, outcome));
    }

    fn class_if(&mut self, class: &'static str, member: bool) {
        if member {
            self.classes.push(class);
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub passed: u64,
    pub failed: u64,
    pub incomplete: u64,
}

/// One failed or incomplete check.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Finding {
    /// graph6 string, or a fixture name.
    pub subject: String,
    pub check: String,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct SweepReport {
    pub name: String,
    pub n: Option<usize>,
    pub subjects: u64,
    pub counts: BTreeMap<String, u64>,
    pub checks: BTreeMap<String, Tally>,
    /// Sorted.
    pub discrepancies: Vec<Finding>,
    /// Sorted.
    pub incomplete: Vec<Finding>,
    #[serde(skip)]
    pub duration: Duration,
}

#[derive(Serialize)]
#[serde(tag = "record", rename_all = "snake_case")]
enum Record<'a> {
    Summary {
        name: &'a str,
        n: Option<usize>,
        subjects: u64,
        status: &'static str,
        counts: &'a BTreeMap<String, u64>,
        checks: &'a BTreeMap<String, Tally>,
        #[serde(skip_serializing_if = "Option::is_none")]
        duration_ms: Option<u128>,
    },
    Discrepancy(&'a Finding),
    Incomplete(&'a Finding),
}

pub const EXIT_PASS: i32 = 0;
pub const EXIT_DISCREPANCY: i32 = 2;
pub const EXIT_INCOMPLETE: i32 = 3;

impl SweepReport {
    pub fn new(name: impl Into<String>, n: Option<usize>) -> Self {
        SweepReport {
            name: name.into(),
            n,
            ..Default::default()
        }
    }

    pub fn absorb(&mut self, o: SubjectOutcome) {
        self.subjects += 1;
        for c in o.classes {
            *self.counts.entry(c.to_string()).or_default() += 1;
        }
        for (check, outcome) in o.results {
            let tally = self.checks.entry(check.to_string()).or_default();
            let finding = |detail: String| Finding {
                subject: o.subject.clone(),
                check: check.to_string(),
                detail,
            };
            match outcome {
                Outcome::Pass => tally.passed += 1,
                Outcome::Fail(d) => {
                    tally.failed += 1;
                    self.discrepancies.push(finding(d));
                }
                Outcome::Incomplete(d) => {
                    tally.incomplete += 1;
                    self.incomplete.push(finding(d));
                }
                Outcome::Skip => {}
            }
        }
    }

    fn finish(mut self, started: Instant) -> Self {
        self.discrepancies.sort();
        self.incomplete.sort();
        self.duration = started.elapsed();
        self
    }

    pub fn all_passed(&self) -> bool {
        self.discrepancies.is_empty() && self.incomplete.is_empty()
    }

    pub fn truncated(&self) -> bool {
        !self.incomplete.is_empty()
    }

    pub fn count(&self, class: &str) -> u64 {
        self.counts.get(class).copied().unwrap_or(0)
    }

    pub fn tally(&self, check: &str) -> Tally {
        self.checks.get(check).copied().unwrap_or_default()
    }

    /// Discrepancies dominate incompleteness.
    pub fn exit_code(&self) -> i32 {
        if !self.discrepancies.is_empty() {
            EXIT_DISCREPANCY
        } else if !self.incomplete.is_empty() {
            EXIT_INCOMPLETE
        } else {
            EXIT_PASS
        }
    }

    fn status(&self) -> &'static str {
        match self.exit_code() {
            EXIT_PASS => "pass",
            EXIT_DISCREPANCY => "discrepancy",
            _ => "incomplete",
        }
    }

    /// Line-delimited JSON: a summary record, then one record per finding.
    pub fn to_json_lines(&self, deterministic: bool) -> String {
        let mut out = String::new();
        let mut line = |r: Record| {
            out.push_str(&serde_json::to_string(&r).expect("plain data serializes"));
            out.push('\n');
        };
        line(Record::Summary {
            name: &self.name,
            n: self.n,
            subjects: self.subjects,
            status: self.status(),
            counts: &self.counts,
            checks: &self.checks,
            duration_ms: (!deterministic).then_some(self.duration.as_millis()),
        });
        for d in &self.discrepancies {
            line(Record::Discrepancy(d));
        }
        for d in &self.incomplete {
            line(Record::Incomplete(d));
        }
        out
    }

    pub fn to_text(&self, deterministic: bool) -> String {
        use std::fmt::Write;
        let mut s = String::new();
        let size = self.n.map(|n| format!(" n={n}")).unwrap_or_default();
        let _ = writeln!(s, "{}{size}: {} subjects, {}", self.name, self.subjects, self.status());
        if !deterministic {
            let _ = writeln!(s, "  time {:.3}s", self.duration.as_secs_f64());
        }
        for (class, c) in &self.counts {
            let _ = writeln!(s, "  count {class:<28} {c}");
        }
        for (check, t) in &self.checks {
            let _ = writeln!(
                s,
                "  check {check:<28} passed {} failed {} incomplete {}",
                t.passed, t.failed, t.incomplete
            );
        }
        for d in &self.discrepancies {
            let _ = writeln!(s, "  DISCREPANCY {} [{}] {}", d.subject, d.check, d.detail);
        }
        for d in &self.incomplete {
            let _ = writeln!(s, "  INCOMPLETE {} [{}] {}", d.subject, d.check, d.detail);
        }
        s
    }
}

/// Runs `work` on every item under `exec` and folds the outcomes in input
/// order.
pub fn sweep<T, F>(name: &str, n: Option<usize>, items: &[T], exec: Exec, work: F) -> SweepReport
where
    T: Sync,
    F: Fn(&T) -> SubjectOutcome + Sync + Send,
{
    let started = Instant::now();
    let mut report = SweepReport::new(name, n);
    for o in exec.map(items, work) {
        report.absorb(o);
    }
    report.finish(started)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn outcome(subject: &str, r: Outcome) -> SubjectOutcome {
        let mut o = SubjectOutcome::new(subject);
        o.classes.push("seen");
        o.push("check", r);
        o
    }

    #[test]
    fn reduction_sorts_and_codes() {
        let items = vec![
            outcome("b", Outcome::Fail("x".into())),
            outcome("a", Outcome::Fail("y".into())),
            outcome("c", Outcome::Incomplete("z".into())),
            outcome("d", Outcome::Pass),
            outcome("e", Outcome::Skip),
        ];
        let r = sweep("t", None, &items, Exec::serial(), |o| o.clone());
        assert_eq!(r.subjects, 5);
        assert_eq!(r.count("seen"), 5);
        assert_eq!(
            r.tally("check"),
            Tally {
                passed: 1,
                failed: 2,
                incomplete: 1
            }
        );
        assert_eq!(r.discrepancies[0].subject, "a");
        assert_eq!(r.exit_code(), EXIT_DISCREPANCY);
        let lines = r.to_json_lines(true);
        assert_eq!(lines.lines().count(), 4);
        assert!(!lines.contains("duration"));
        assert!(r.to_json_lines(false).contains("duration_ms"));

        let only_incomplete = sweep("t", None, &items[2..], Exec::serial(), |o| o.clone());
        assert_eq!(only_incomplete.exit_code(), EXIT_INCOMPLETE);
        let clean = sweep("t", None, &items[3..], Exec::serial(), |o| o.clone());
        assert_eq!(clean.exit_code(), EXIT_PASS);
        assert!(clean.all_passed());
    }

    #[test]
    fn serial_and_parallel_agree() {
        let items: Vec<u32> = (0..200).collect();
        let work = |&i: &u32| {
            let r = if i % 7 == 0 { Outcome::Fail(format!("{i}")) } else { Outcome::Pass };
            outcome(&format!("{i:03}"), r)
        };
        let a = sweep("t", Some(3), &items, Exec::serial(), work);
        let b = sweep("t", Some(3), &items, Exec::parallel(8), work);
        assert_eq!(a.to_json_lines(true), b.to_json_lines(true));
        assert_eq!(a.to_text(true), b.to_text(true));
    }
}
