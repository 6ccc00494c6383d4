//! Run reports: a `key: value` text block on the terminal and an optional
//! JSON tree written with `--report-out`.

use std::fmt::Write as _;
use std::time::Duration;

use serde_json::{Map, Value};

pub struct Report {
    fields: Map<String, Value>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        let mut fields = Map::new();
        fields.insert("command".into(), Value::String(command.into()));
        Report { fields }
    }

    pub fn set(&mut self, key: &str, value: impl Into<Value>) {
        self.fields.insert(key.into(), value.into());
    }

    /// Inserts anything serializable, e.g. a verifier report.
    pub fn set_serialized<T: serde::Serialize + ?Sized>(&mut self, key: &str, value: &T) {
        let v = serde_json::to_value(value).expect("report values serialize");
        self.fields.insert(key.into(), v);
    }

    /// Text block; nested objects are flattened one level with dotted keys.
    pub fn to_text(&self, elapsed: Duration) -> String {
        let mut out = String::new();
        for (key, value) in &self.fields {
            match value {
                Value::Object(inner) => {
                    for (k, v) in inner {
                        writeln!(out, "{key}.{k}: {}", scalar(v)).expect("String write");
                    }
                }
                v => writeln!(out, "{key}: {}", scalar(v)).expect("String write"),
            }
        }
        writeln!(out, "elapsed_ms: {}", elapsed.as_millis()).expect("String write");
        out
    }

    /// Stable JSON: no timing information.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&Value::Object(self.fields.clone())).expect("JSON") + "\n"
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "none".into(),
        other => other.to_string(),
    }
}
