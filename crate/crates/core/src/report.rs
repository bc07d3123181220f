use std::fmt;

use serde::{Deserialize, Serialize};

/// Outcome of one axiom or law check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomCheck {
    pub axiom: String,
    pub passed: bool,
}

/// Pass/fail list produced by the Hopf axiom and comodule law verifiers.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn push(&mut self, axiom: &str, passed: bool) {
        self.checks.push(AxiomCheck { axiom: axiom.to_string(), passed });
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn passed(&self, axiom: &str) -> Option<bool> {
        self.checks.iter().find(|c| c.axiom == axiom).map(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &str> {
        self.checks.iter().filter(|c| !c.passed).map(|c| c.axiom.as_str())
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for c in &self.checks {
            if !first {
                f.write_str(", ")?;
            }
            first = false;
            write!(f, "{}: {}", c.axiom, if c.passed { "pass" } else { "FAIL" })?;
        }
        Ok(())
    }
}
