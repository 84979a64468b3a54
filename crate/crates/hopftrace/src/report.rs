//! Machine-readable command reports with a stable exit-code contract:
//! 0 pass, 1 fail-with-witness, 2 usage/parse error, 3 integrity error.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    pub result: Value,
    pub status: Status,
    pub exit_code: i32,
}

impl Report {
    pub fn pass(command: &str, inputs: BTreeMap<String, String>, result: Value) -> Self {
        Report {
            command: command.into(),
            inputs,
            result,
            status: Status::Pass,
            exit_code: 0,
        }
    }

    /// A failed verification; `result` must carry the witness.
    pub fn fail(command: &str, inputs: BTreeMap<String, String>, result: Value) -> Self {
        Report {
            command: command.into(),
            inputs,
            result,
            status: Status::Fail,
            exit_code: 1,
        }
    }

    pub fn error(command: &str, inputs: BTreeMap<String, String>, err: &Error) -> Self {
        let exit_code = exit_code_for(err);
        Report {
            command: command.into(),
            inputs,
            result: serde_json::json!({ "error": err.to_string() }),
            status: Status::Error,
            exit_code,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    /// Terse non-JSON rendering.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}: {:?}\n", self.command, self.status);
        match &self.result {
            Value::Object(map) => {
                for (k, v) in map {
                    out.push_str(&format!("  {k}: {v}\n"));
                }
            }
            other => out.push_str(&format!("  {other}\n")),
        }
        out
    }
}

pub fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::Integrity(_) | Error::Overflow(_) => 3,
        Error::Domain(_) | Error::Parse(_) | Error::Io(_) | Error::CollapseFailed(_) => 2,
    }
}
