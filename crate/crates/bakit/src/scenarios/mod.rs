//! Scenario registry: scripted countermodels and constructions with
//! machine-verified assertions and machine-readable evidence.

pub mod fixtures;
mod registry;
mod report;

pub use registry::{run_all, run_scenario, scenario_names, ScenarioError};
pub use report::{AssertionReport, ScenarioOutcome, ScenarioReport};
