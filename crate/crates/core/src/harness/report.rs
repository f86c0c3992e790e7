use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Assertion {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
}

/// Result of one CLI command or reproduction bundle.
///
/// Ordinals appear in `results` as notation strings. `wall_time_ms` is the
/// only field that varies between identical runs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub graph: Option<String>,
    pub results: Map<String, Value>,
    pub assertions: Vec<Assertion>,
    pub passed: bool,
    pub wall_time_ms: u64,
}

impl RunReport {
    pub fn new(command: impl Into<String>, graph: Option<String>) -> Self {
        RunReport {
            command: command.into(),
            graph,
            results: Map::new(),
            assertions: Vec::new(),
            passed: true,
            wall_time_ms: 0,
        }
    }

    pub fn result(&mut self, key: &str, value: impl Serialize) {
        let value = serde_json::to_value(value).expect("results serialize");
        self.results.insert(key.to_string(), value);
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool, detail: Option<String>) {
        self.passed &= passed;
        self.assertions.push(Assertion {
            name: name.into(),
            passed,
            detail,
        });
    }

    pub fn finish(mut self, started: Instant) -> Self {
        self.wall_time_ms = started.elapsed().as_millis() as u64;
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One line per assertion, then a summary line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.results {
            out.push_str(&format!("{k}: {}\n", render(v)));
        }
        for a in &self.assertions {
            let mark = if a.passed { "PASS" } else { "FAIL" };
            match &a.detail {
                Some(d) => out.push_str(&format!("[{mark}] {} ({d})\n", a.name)),
                None => out.push_str(&format!("[{mark}] {}\n", a.name)),
            }
        }
        out.push_str(if self.passed { "ok\n" } else { "FAILED\n" });
        out
    }
}

fn render(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
