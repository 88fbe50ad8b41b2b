use serde::Serialize;
use serde_json::Value;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Undetermined,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub version: u32,
    pub command: String,
    pub status: Status,
    pub payload: Value,
    pub diagnostics: Vec<String>,
}

impl Report {
    pub fn new(command: &str, payload: Value, diagnostics: Vec<String>) -> Report {
        let status = if diagnostics.is_empty() { Status::Pass } else { Status::Fail };
        Report { version: SCHEMA_VERSION, command: command.to_string(), status, payload, diagnostics }
    }

    pub fn undetermined(command: &str, payload: Value, reason: String) -> Report {
        Report {
            version: SCHEMA_VERSION,
            command: command.to_string(),
            status: Status::Undetermined,
            payload,
            diagnostics: vec![reason],
        }
    }

    pub fn error(command: &str, message: String) -> Report {
        Report::new(command, Value::Null, vec![message])
    }

    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Pass => 0,
            Status::Fail | Status::Undetermined => 1,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

/// Collects failed checks as diagnostics.
#[derive(Default)]
pub struct Checks(pub Vec<String>);

impl Checks {
    pub fn require(&mut self, ok: bool, what: impl Into<String>) -> bool {
        if !ok {
            self.0.push(what.into());
        }
        ok
    }
}
