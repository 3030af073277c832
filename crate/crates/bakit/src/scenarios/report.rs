//! Structured scenario reports with enough evidence to re-verify each
//! assertion independently.

use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct AssertionReport {
    pub description: String,
    /// Why the expected value is what it is.
    pub note: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
    /// True when the verdict was undecided where a decided one was
    /// expected; drives the distinct exit code.
    pub undecided: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub evidence: Option<serde_json::Value>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ScenarioReport {
    pub name: String,
    pub pass: bool,
    pub assertions: Vec<AssertionReport>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScenarioOutcome {
    Pass,
    Fail,
    Undecided,
}

impl ScenarioReport {
    pub fn new(name: &str) -> ScenarioReport {
        ScenarioReport {
            name: name.to_string(),
            pass: true,
            assertions: Vec::new(),
        }
    }

    pub fn push(&mut self, a: AssertionReport) {
        self.pass &= a.pass;
        self.assertions.push(a);
    }

    pub fn outcome(&self) -> ScenarioOutcome {
        if self.pass {
            ScenarioOutcome::Pass
        } else if self.assertions.iter().any(|a| a.undecided) {
            ScenarioOutcome::Undecided
        } else {
            ScenarioOutcome::Fail
        }
    }

    /// One line per assertion plus a header, for terminal output.
    pub fn render_text(&self) -> String {
        let mut out = format!(
            "scenario {}: {}\n",
            self.name,
            if self.pass { "PASS" } else { "FAIL" }
        );
        for a in &self.assertions {
            out.push_str(&format!(
                "  [{}] {} (expected {}, got {}) — {}\n",
                if a.pass { "ok" } else { "FAIL" },
                a.description,
                a.expected,
                a.actual,
                a.note
            ));
            if let Some(e) = &a.evidence {
                out.push_str(&format!("        evidence: {e}\n"));
            }
        }
        out
    }
}
