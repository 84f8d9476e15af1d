//! Per-check tallies and the serialized suite report.

use serde::{Deserialize, Serialize};

/// Upper bound on counterexamples kept in memory per check; the CLI trims
/// further to its configured limit.
pub const COUNTEREXAMPLE_CAP: usize = 1000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub operation: String,
    pub inputs: String,
    pub expected: String,
    pub actual: String,
}

impl Counterexample {
    pub fn new(
        operation: impl Into<String>,
        inputs: impl Into<String>,
        expected: impl ToString,
        actual: impl ToString,
    ) -> Self {
        Counterexample {
            operation: operation.into(),
            inputs: inputs.into(),
            expected: expected.to_string(),
            actual: actual.to_string(),
        }
    }
}

/// Outcome of one named, exhaustively checked property.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub instances: u64,
    pub passed: u64,
    pub failed: u64,
    pub counterexamples: Vec<Counterexample>,
}

impl CheckReport {
    pub fn new(name: impl Into<String>) -> Self {
        CheckReport {
            name: name.into(),
            instances: 0,
            passed: 0,
            failed: 0,
            counterexamples: Vec::new(),
        }
    }

    /// Tallies one instance. The counterexample is only built on failure.
    pub fn record(&mut self, ok: bool, counterexample: impl FnOnce() -> Counterexample) {
        self.instances += 1;
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            if self.counterexamples.len() < COUNTEREXAMPLE_CAP {
                self.counterexamples.push(counterexample());
            }
        }
    }

    /// Tallies a precomputed outcome (`None` means pass).
    pub fn record_outcome(&mut self, outcome: Option<Counterexample>) {
        match outcome {
            None => self.record(true, || unreachable!()),
            Some(cx) => self.record(false, || cx),
        }
    }

    pub fn is_pass(&self) -> bool {
        self.failed == 0
    }

    pub fn absorb(&mut self, other: CheckReport) {
        self.instances += other.instances;
        self.passed += other.passed;
        self.failed += other.failed;
        let room = COUNTEREXAMPLE_CAP.saturating_sub(self.counterexamples.len());
        self.counterexamples
            .extend(other.counterexamples.into_iter().take(room));
    }
}

/// Verification configuration as recorded in every report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub suite: String,
    pub max_dim: usize,
    pub grid_denominator: usize,
    pub deep: bool,
    pub sample_seed: u64,
    /// Number of random instances for relation-style checks; `None` keeps
    /// them exhaustive.
    pub sample: Option<usize>,
    pub counterexample_limit: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            suite: "all".to_string(),
            max_dim: 3,
            grid_denominator: 4,
            deep: false,
            sample_seed: 0,
            sample: None,
            counterexample_limit: 10,
        }
    }
}

/// One JSON record per check: `{suite, config, instances, passed, failed,
/// counterexamples}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub config: SuiteConfig,
    pub instances: u64,
    pub passed: u64,
    pub failed: u64,
    pub counterexamples: Vec<Counterexample>,
}

impl SuiteReport {
    pub fn from_check(group: &str, check: CheckReport, config: &SuiteConfig) -> Self {
        let mut counterexamples = check.counterexamples;
        counterexamples.truncate(config.counterexample_limit);
        SuiteReport {
            suite: format!("{group}.{}", check.name),
            config: config.clone(),
            instances: check.instances,
            passed: check.passed,
            failed: check.failed,
            counterexamples,
        }
    }

    pub fn is_pass(&self) -> bool {
        self.failed == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tallies_add_up() {
        let mut r = CheckReport::new("x");
        r.record(true, || unreachable!());
        r.record(false, || Counterexample::new("op", "in", 1, 2));
        r.record_outcome(None);
        assert_eq!((r.instances, r.passed, r.failed), (3, 2, 1));
        assert!(!r.is_pass());
        assert_eq!(r.counterexamples[0].actual, "2");
    }

    #[test]
    fn counterexamples_are_trimmed_to_the_limit() {
        let mut r = CheckReport::new("x");
        for i in 0..5 {
            r.record(false, || Counterexample::new("op", i.to_string(), 0, 1));
        }
        let config = SuiteConfig {
            counterexample_limit: 2,
            ..SuiteConfig::default()
        };
        let s = SuiteReport::from_check("core", r, &config);
        assert_eq!(s.suite, "core.x");
        assert_eq!(s.failed, 5);
        assert_eq!(s.counterexamples.len(), 2);
    }

    #[test]
    fn json_schema_and_round_trip() {
        let mut r = CheckReport::new("x");
        r.record(false, || Counterexample::new("op", "0,1:[1]->[1]", "0,1", "1,1"));
        let s = SuiteReport::from_check("core", r, &SuiteConfig::default());
        let text = serde_json::to_string(&s).unwrap();
        let value: serde_json::Value = serde_json::from_str(&text).unwrap();
        for key in ["suite", "config", "instances", "passed", "failed", "counterexamples"] {
            assert!(value.get(key).is_some(), "missing {key}");
        }
        assert_eq!(value["counterexamples"][0]["inputs"], "0,1:[1]->[1]");
        assert_eq!(serde_json::from_str::<SuiteReport>(&text).unwrap(), s);
    }
}
