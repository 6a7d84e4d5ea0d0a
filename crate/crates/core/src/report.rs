//! Structured check records: every verifier identity produces one named
//! record with its measured defect, the tolerance it was judged against,
//! and a human-readable anchor stating the identity being checked.

use serde::{Deserialize, Serialize};

/// One verified identity.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckRecord {
    /// Stable machine-readable name (snake_case).
    pub name: String,
    /// The identity being verified, written out.
    pub anchor: String,
    /// Measured max-abs defect.
    pub defect: f64,
    /// Tolerance the defect was judged against.
    pub tol: f64,
    pub pass: bool,
}

impl CheckRecord {
    pub fn new(name: &str, anchor: &str, defect: f64, tol: f64) -> Self {
        CheckRecord {
            name: name.to_string(),
            anchor: anchor.to_string(),
            defect,
            tol,
            pass: defect <= tol,
        }
    }
}

/// A full run report: inputs (with digests filled in by the caller),
/// parameters, and the ordered list of checks. Field order and check order
/// are deterministic so serialized reports are byte-stable.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    /// (path or logical name, sha256 hex digest) of each input, in argument
    /// order.
    pub inputs: Vec<(String, String)>,
    pub tol: f64,
    pub seed: u64,
    pub checks: Vec<CheckRecord>,
    pub pass: bool,
}

impl Report {
    pub fn new(command: &str, tol: f64, seed: u64) -> Self {
        Report {
            command: command.to_string(),
            inputs: Vec::new(),
            tol,
            seed,
            checks: Vec::new(),
            pass: true,
        }
    }

    pub fn add_input(&mut self, name: &str, digest: &str) {
        self.inputs.push((name.to_string(), digest.to_string()));
    }

    pub fn push(&mut self, rec: CheckRecord) {
        self.pass &= rec.pass;
        self.checks.push(rec);
    }

    pub fn check(&mut self, name: &str, anchor: &str, defect: f64) {
        self.push(CheckRecord::new(name, anchor, defect, self.tol));
    }

    /// Record a boolean property as a 0/1 defect.
    pub fn check_bool(&mut self, name: &str, anchor: &str, ok: bool) {
        self.push(CheckRecord::new(
            name,
            anchor,
            if ok { 0.0 } else { 1.0 },
            self.tol,
        ));
    }

    pub fn max_defect(&self) -> f64 {
        self.checks.iter().map(|c| c.defect).fold(0.0, f64::max)
    }
}
