//! Key/value run reports, rendered as aligned text or as JSON.

use serde_json::{Map, Value};

/// Ordered fields. Text output keeps insertion order; JSON output is an object.
#[derive(Debug, Default)]
pub struct RunReport {
    fields: Vec<(String, Value)>,
}

impl RunReport {
    pub fn new(command: &str) -> Self {
        let mut r = RunReport::default();
        r.push("command", command);
        r
    }

    pub fn push(&mut self, key: &str, value: impl Into<Value>) {
        self.fields.push((key.to_string(), value.into()));
    }

    pub fn to_text(&self) -> String {
        let width = self.fields.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        let mut out = String::new();
        for (k, v) in &self.fields {
            out.push_str(&format!("{k:<width$}  {}\n", render(v)));
        }
        out
    }

    pub fn to_json(&self) -> String {
        let map: Map<String, Value> = self.fields.iter().cloned().collect();
        serde_json::to_string_pretty(&Value::Object(map)).expect("plain values serialize") + "\n"
    }
}

fn render(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".to_string(),
        Value::Array(items) => items.iter().map(render).collect::<Vec<_>>().join(" "),
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_and_json() {
        let mut r = RunReport::new("solve");
        r.push("lp_value", "3/2");
        r.push("weak_count", 2);
        r.push("assignment", vec![1, -1]);
        r.push("seed", Value::Null);
        assert_eq!(
            r.to_text(),
            "command     solve\nlp_value    3/2\nweak_count  2\nassignment  1 -1\nseed        -\n"
        );
        let v: Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["weak_count"], 2);
        assert_eq!(v["lp_value"], "3/2");
    }
}
