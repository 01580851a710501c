use std::fmt;
use std::time::Instant;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

/// Outcome of one check at one parameter value. Failures carry a witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub claim: String,
    pub n: usize,
    pub status: Status,
    pub witness: Option<String>,
    pub millis: u64,
}

impl VerificationReport {
    pub fn pass(claim: &str, n: usize, witness: Option<String>) -> Self {
        Self::with(claim, n, Status::Pass, witness)
    }

    pub fn fail(claim: &str, n: usize, witness: impl Into<String>) -> Self {
        Self::with(claim, n, Status::Fail, Some(witness.into()))
    }

    pub fn skipped(claim: &str, n: usize, reason: impl Into<String>) -> Self {
        Self::with(claim, n, Status::Skipped, Some(reason.into()))
    }

    fn with(claim: &str, n: usize, status: Status, witness: Option<String>) -> Self {
        VerificationReport { claim: claim.to_string(), n, status, witness, millis: 0 }
    }

    pub fn timed(mut self, start: Instant) -> Self {
        self.millis = start.elapsed().as_millis() as u64;
        self
    }

    pub fn is_pass(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:<22} n={:<2} {:<7}", self.claim, self.n, self.status)?;
        if let Some(w) = &self.witness {
            write!(f, " {w}")?;
        }
        Ok(())
    }
}
