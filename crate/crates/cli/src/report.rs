//! JSON and text reports.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    CheckFailed,
    InvalidInput,
    ResourceExceeded,
}

impl Status {
    pub const ALL: [Status; 4] = [Status::Ok, Status::CheckFailed, Status::InvalidInput, Status::ResourceExceeded];

    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::CheckFailed => 1,
            Status::InvalidInput => 2,
            Status::ResourceExceeded => 3,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ErrorInfo {
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub line: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub column: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub source: Option<String>,
    pub inputs_echo: BTreeMap<String, String>,
    pub result: Value,
    pub warnings: Vec<String>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub error: Option<ErrorInfo>,
    pub timing_ms: f64,
}

impl Report {
    pub fn new(command: &str, source: Option<String>) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            command: command.into(),
            source,
            inputs_echo: BTreeMap::new(),
            result: Value::Null,
            warnings: Vec::new(),
            status: Status::Ok,
            error: None,
            timing_ms: 0.0,
        }
    }

    pub fn exit_code(&self) -> i32 {
        self.status.exit_code()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let src = self.source.as_deref().map(|s| format!(" {s}")).unwrap_or_default();
        let _ = writeln!(out, "{}{src}: {}", self.command, status_word(self.status));
        if let Some(e) = &self.error {
            let _ = match (e.line, e.column) {
                (Some(l), Some(c)) => writeln!(out, "  error: line {l}, column {c}: {}", e.message),
                _ => writeln!(out, "  error: {}", e.message),
            };
        }
        render_value(&mut out, &self.result, 1, None);
        for w in &self.warnings {
            let _ = writeln!(out, "  warning: {w}");
        }
        out
    }
}

fn status_word(s: Status) -> &'static str {
    match s {
        Status::Ok => "ok",
        Status::CheckFailed => "check failed",
        Status::InvalidInput => "invalid input",
        Status::ResourceExceeded => "resource bound exceeded",
    }
}

fn scalar_text(v: &Value) -> Option<String> {
    Some(match v {
        Value::Null => "-".into(),
        Value::Bool(b) => b.to_string(),
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.clone(),
        _ => return None,
    })
}

fn render_value(out: &mut String, v: &Value, depth: usize, key: Option<&str>) {
    let pad = "  ".repeat(depth);
    let label = key.map(|k| format!("{k}: ")).unwrap_or_default();
    if let Some(s) = scalar_text(v) {
        if key.is_some() || !v.is_null() {
            let _ = writeln!(out, "{pad}{label}{s}");
        }
        return;
    }
    match v {
        Value::Array(xs) if xs.iter().all(|x| scalar_text(x).is_some()) => {
            let items: Vec<String> = xs.iter().filter_map(scalar_text).collect();
            let _ = writeln!(out, "{pad}{label}[{}]", items.join(", "));
        }
        Value::Array(xs) => {
            let _ = writeln!(out, "{pad}{label}");
            for (k, x) in xs.iter().enumerate() {
                render_value(out, x, depth + 1, Some(&format!("[{k}]")));
            }
        }
        Value::Object(map) => {
            let inner = if key.is_some() {
                let _ = writeln!(out, "{pad}{label}");
                depth + 1
            } else {
                depth
            };
            for (k, x) in map {
                render_value(out, x, inner, Some(k));
            }
        }
        _ => unreachable!("scalars handled above"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn json_round_trip() {
        let mut r = Report::new("classify", Some("a.fol".into()));
        r.result = json!({"count": 1, "points": [{"x": "0", "y": "0"}]});
        r.warnings.push("note".into());
        r.timing_ms = 0.125;
        let back: Report = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
        assert!(r.render_text().starts_with("classify a.fol: ok"));
    }

    #[test]
    fn exit_codes() {
        let codes: Vec<i32> = Status::ALL.iter().map(|s| s.exit_code()).collect();
        assert_eq!(codes, vec![0, 1, 2, 3]);
    }
}
