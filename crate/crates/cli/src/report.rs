use std::collections::BTreeMap;
use std::time::Duration;

use serde::Serialize;
use serde_json::Value;

/// How a command ended; decides the process exit code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ok,
    Certificate,
    Failed,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Certificate => 2,
            Status::Failed => 1,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Verdicts {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub circuit: Option<bool>,
    /// Size of the odd cut returned or found.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub odd_cut: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_feasible: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub jaeger_extendable: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verified: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub label: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub verdicts: Verdicts,
    pub timings_ms: BTreeMap<String, f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<Value>,
    /// Human-readable summary, one entry per line.
    #[serde(skip)]
    pub lines: Vec<String>,
}

impl RunReport {
    pub fn new(command: &str, label: &str) -> Self {
        RunReport {
            command: command.to_string(),
            label: label.to_string(),
            status: Status::Ok,
            seed: None,
            verdicts: Verdicts::default(),
            timings_ms: BTreeMap::new(),
            result: None,
            oracle: None,
            lines: Vec::new(),
        }
    }

    pub fn time(&mut self, what: &str, d: Duration) {
        self.timings_ms.insert(what.to_string(), d.as_secs_f64() * 1e3);
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
