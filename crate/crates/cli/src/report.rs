//! Verification reports, rendered as text or as versioned JSON.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{Map, Value};

/// Bumped whenever a field of the structured report changes meaning.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Verdict {
    pub name: String,
    pub ok: bool,
    /// For a failure, the failing identity and the substitution that breaks it.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

/// Command echo, verdicts in evaluation order and computed objects keyed by
/// name. Objects are a sorted map, so serialization is deterministic.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: Map<String, Value>,
    pub verdicts: Vec<Verdict>,
    pub objects: Map<String, Value>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        let mut echo = Map::new();
        echo.insert("name".into(), command.into());
        Report {
            schema_version: SCHEMA_VERSION,
            command: echo,
            verdicts: Vec::new(),
            objects: Map::new(),
        }
    }

    pub fn echo(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.command.insert(key.into(), value.into());
        self
    }

    pub fn verdict(&mut self, name: &str, witness: Option<String>) -> &mut Self {
        self.verdicts.push(Verdict {
            name: name.into(),
            ok: witness.is_none(),
            witness,
        });
        self
    }

    pub fn object(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.objects.insert(key.into(), value.into());
        self
    }

    pub fn all_ok(&self) -> bool {
        self.verdicts.iter().all(|v| v.ok)
    }

    /// 0 when every verdict holds, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.all_ok() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports are plain JSON values")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let echo: Vec<String> = self
            .command
            .iter()
            .map(|(k, v)| format!("{k}={}", scalar_text(v)))
            .collect();
        writeln!(out, "command: {}", echo.join(" ")).unwrap();
        for v in &self.verdicts {
            match &v.witness {
                None => writeln!(out, "ok    {}", v.name).unwrap(),
                Some(w) => writeln!(out, "FAIL  {}: {w}", v.name).unwrap(),
            }
        }
        for (k, v) in &self.objects {
            write_object(&mut out, k, v, 0);
        }
        out
    }
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn write_object(out: &mut String, key: &str, v: &Value, indent: usize) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(m) if !m.is_empty() => {
            writeln!(out, "{pad}{key}:").unwrap();
            for (k, x) in m {
                write_object(out, k, x, indent + 1);
            }
        }
        Value::Array(items) if items.iter().any(|x| x.is_object()) => {
            writeln!(out, "{pad}{key}:").unwrap();
            for (i, x) in items.iter().enumerate() {
                write_object(out, &i.to_string(), x, indent + 1);
            }
        }
        other => writeln!(out, "{pad}{key}: {}", scalar_text(other)).unwrap(),
    }
}
