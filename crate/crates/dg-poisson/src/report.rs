//! Verification reports: counted checks plus a list of violations with
//! re-evaluable witnesses.

use std::fmt;

/// One failed law instance. `witness` and both sides are printed in the
/// expression syntax so a reader can reproduce the defect with `eval`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub law: String,
    pub witness: String,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of one verification suite. Violations beyond the storage cap are
/// still counted so pass/fail stays exact.
#[derive(Clone, Debug)]
pub struct Report {
    pub suite: String,
    pub checks: u64,
    pub violations: Vec<Violation>,
    pub violations_total: u64,
}

/// Stored-violation cap; reports stay readable even for badly broken inputs.
const MAX_STORED_VIOLATIONS: usize = 25;

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Report { suite: suite.into(), checks: 0, violations: Vec::new(), violations_total: 0 }
    }

    pub fn passed(&self) -> bool {
        self.violations_total == 0
    }

    pub fn record_check(&mut self) {
        self.checks += 1;
    }

    pub fn record_violation(
        &mut self,
        law: impl Into<String>,
        witness: impl fmt::Display,
        lhs: impl fmt::Display,
        rhs: impl fmt::Display,
    ) {
        self.violations_total += 1;
        if self.violations.len() < MAX_STORED_VIOLATIONS {
            self.violations.push(Violation {
                law: law.into(),
                witness: witness.to_string(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
    }

    /// Records one comparison: counts it, and files a violation when the two
    /// printed sides differ.
    pub fn check_eq<T: PartialEq + fmt::Display>(
        &mut self,
        law: &str,
        witness: impl fmt::Display,
        lhs: &T,
        rhs: &T,
    ) {
        self.record_check();
        if lhs != rhs {
            self.record_violation(law, witness, lhs, rhs);
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "suite {}: {} checks, pass", self.suite, self.checks)?;
        } else {
            write!(
                f,
                "suite {}: {} checks, FAIL ({} violations)",
                self.suite, self.checks, self.violations_total
            )?;
            for v in &self.violations {
                write!(
                    f,
                    "\n  law: {}; witness: {}; lhs: {}; rhs: {}",
                    v.law, v.witness, v.lhs, v.rhs
                )?;
            }
            if self.violations_total > self.violations.len() as u64 {
                write!(
                    f,
                    "\n  ... {} further violations not shown",
                    self.violations_total - self.violations.len() as u64
                )?;
            }
        }
        Ok(())
    }
}
