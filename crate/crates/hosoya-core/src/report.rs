//! Structured pass/fail records for theorem verifiers.
//!
//! Every verifier in this crate sweeps some parameter grid and returns one
//! [`VerificationReport`]: which check ran, with what parameters, how many
//! instances were checked or skipped (hypothesis not met), and a witness for
//! every failure. Reports serialize to stable JSON for CI use.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

/// Result of a verification sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    /// Every checked instance held.
    Pass,
    /// At least one instance failed; see the witnesses.
    Fail,
    /// No instance satisfied the hypotheses, so nothing was checked.
    Vacuous,
}

/// A failing instance: where it failed and what was observed.
#[derive(Debug, Clone, Serialize)]
pub struct Witness {
    pub location: String,
    pub detail: String,
}

/// Pass/fail record for one theorem check over a parameter sweep.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    /// Identifier of the check, e.g. `"star-gcd"` or `"cassini"`.
    pub check: String,
    /// Sweep parameters (family, bounds, seeds, ...).
    pub params: BTreeMap<String, String>,
    pub outcome: Outcome,
    pub cases_checked: usize,
    pub cases_skipped: usize,
    /// Witnesses for failures; empty on pass.
    pub failures: Vec<Witness>,
    /// Empirical findings that are not failures (e.g. which reading of an
    /// ambiguous statement holds).
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn new(check: impl Into<String>) -> Self {
        VerificationReport {
            check: check.into(),
            params: BTreeMap::new(),
            outcome: Outcome::Vacuous,
            cases_checked: 0,
            cases_skipped: 0,
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn set_param(&mut self, key: &str, value: impl fmt::Display) {
        self.params.insert(key.to_string(), value.to_string());
    }

    pub fn with_param(mut self, key: &str, value: impl fmt::Display) -> Self {
        self.set_param(key, value);
        self
    }

    /// Records one checked instance that held.
    pub fn pass_case(&mut self) {
        self.cases_checked += 1;
        if self.outcome == Outcome::Vacuous {
            self.outcome = Outcome::Pass;
        }
    }

    /// Records one checked instance that failed, with its witness.
    pub fn fail_case(&mut self, location: impl Into<String>, detail: impl Into<String>) {
        self.cases_checked += 1;
        self.outcome = Outcome::Fail;
        self.failures.push(Witness {
            location: location.into(),
            detail: detail.into(),
        });
    }

    /// Records an instance whose hypotheses were not met.
    pub fn skip_case(&mut self) {
        self.cases_skipped += 1;
    }

    /// Checks a condition, lazily building the witness on failure.
    pub fn check<F>(&mut self, ok: bool, witness: F)
    where
        F: FnOnce() -> (String, String),
    {
        if ok {
            self.pass_case();
        } else {
            let (location, detail) = witness();
            self.fail_case(location, detail);
        }
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn passed(&self) -> bool {
        self.outcome != Outcome::Fail
    }

    /// Folds another report into this one (used by multi-part verifiers).
    pub fn absorb(&mut self, other: VerificationReport) {
        self.cases_checked += other.cases_checked;
        self.cases_skipped += other.cases_skipped;
        if other.outcome == Outcome::Fail {
            self.outcome = Outcome::Fail;
        } else if self.outcome == Outcome::Vacuous && other.outcome == Outcome::Pass {
            self.outcome = Outcome::Pass;
        }
        self.failures.extend(other.failures);
        self.notes.extend(other.notes);
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let outcome = match self.outcome {
            Outcome::Pass => "PASS",
            Outcome::Fail => "FAIL",
            Outcome::Vacuous => "VACUOUS",
        };
        write!(
            f,
            "{}: {} ({} checked, {} skipped",
            self.check, outcome, self.cases_checked, self.cases_skipped
        )?;
        if !self.failures.is_empty() {
            write!(f, ", {} failures", self.failures.len())?;
        }
        write!(f, ")")?;
        for p in &self.params {
            write!(f, " {}={}", p.0, p.1)?;
        }
        if let Some(w) = self.failures.first() {
            write!(f, " | first failure at {}: {}", w.location, w.detail)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn outcome_transitions() {
        let mut r = VerificationReport::new("t");
        assert_eq!(r.outcome, Outcome::Vacuous);
        assert!(r.passed());
        r.pass_case();
        assert_eq!(r.outcome, Outcome::Pass);
        r.skip_case();
        assert_eq!(r.outcome, Outcome::Pass);
        r.fail_case("here", "because");
        assert_eq!(r.outcome, Outcome::Fail);
        assert!(!r.passed());
        r.pass_case();
        assert_eq!(r.outcome, Outcome::Fail);
    }

    #[test]
    fn absorb_merges_counts_and_outcome() {
        let mut a = VerificationReport::new("a");
        a.pass_case();
        let mut b = VerificationReport::new("b");
        b.fail_case("x", "y");
        b.skip_case();
        a.absorb(b);
        assert_eq!(a.outcome, Outcome::Fail);
        assert_eq!(a.cases_checked, 2);
        assert_eq!(a.cases_skipped, 1);
        assert_eq!(a.failures.len(), 1);
    }
}
