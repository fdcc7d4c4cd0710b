//! Certificates: a header naming the claim, a body of counts and witnesses,
//! and a footer with completeness and wall time.

use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub claim: String,
    pub statement: String,
    pub version: String,
    pub seed: Option<u64>,
    /// Ordered `key: value` lines.
    pub body: Vec<(String, String)>,
    /// Instances in the text instance format.
    pub witnesses: Vec<String>,
    /// Every instance the claim covers was decided.
    pub complete: bool,
    /// The computation agrees with the claim.
    pub holds: bool,
    pub wall_time_ms: u64,
}

impl Certificate {
    pub fn new(claim: &str, statement: &str, seed: Option<u64>) -> Certificate {
        Certificate {
            claim: claim.to_string(),
            statement: statement.to_string(),
            version: concat!("gridlink ", env!("CARGO_PKG_VERSION")).to_string(),
            seed,
            body: Vec::new(),
            witnesses: Vec::new(),
            complete: true,
            holds: true,
            wall_time_ms: 0,
        }
    }

    pub fn line(&mut self, key: &str, value: impl ToString) {
        self.body.push((key.to_string(), value.to_string()));
    }

    /// Text form. Only the last line carries timing.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "claim: {}", self.claim);
        let _ = writeln!(out, "statement: {}", self.statement);
        let _ = writeln!(out, "version: {}", self.version);
        let _ = writeln!(out, "seed: {}", self.seed.map_or("none".to_string(), |s| s.to_string()));
        out.push_str("---\n");
        for (k, v) in &self.body {
            let _ = writeln!(out, "{k}: {v}");
        }
        for (i, w) in self.witnesses.iter().enumerate() {
            let _ = writeln!(out, "witness {}:", i + 1);
            for l in w.lines() {
                let _ = writeln!(out, "  {l}");
            }
        }
        out.push_str("---\n");
        let _ = writeln!(out, "complete: {}", self.complete);
        let _ = writeln!(out, "holds: {}", self.holds);
        let _ = writeln!(out, "wall_time_ms: {}", self.wall_time_ms);
        out
    }
}
