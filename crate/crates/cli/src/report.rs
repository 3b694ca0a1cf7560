//! Report assembly and rendering. Every command builds one [`Report`]; the
//! renderers turn it into JSON, CSV or plain text.

use serde_json::{Map, Number, Value};

/// Reals carry 17 significant digits so that every double round-trips.
pub fn real(x: f64) -> Value {
    if !x.is_finite() {
        return Value::Null;
    }
    let text = format!("{x:.16e}");
    Value::Number(
        text.parse::<Number>()
            .expect("formatted float is valid JSON"),
    )
}

pub fn int(n: u64) -> Value {
    Value::Number(Number::from(n))
}

pub fn reals(xs: &[f64]) -> Value {
    Value::Array(xs.iter().map(|&x| real(x)).collect())
}

/// Top-level fields in their fixed order. Unset fields are left out.
#[derive(Debug, Clone, Default)]
pub struct Report {
    pub command: &'static str,
    pub inputs: Map<String, Value>,
    pub value: Option<f64>,
    pub error_estimate: Option<f64>,
    pub threshold: Option<f64>,
    pub margin: Option<f64>,
    pub pass: Option<bool>,
    pub seed: Option<u64>,
    pub samples: Option<u64>,
    pub stderr: Option<f64>,
    /// Command-specific output, kept under one key.
    pub details: Map<String, Value>,
}

impl Report {
    pub fn new(command: &'static str) -> Self {
        Self {
            command,
            ..Self::default()
        }
    }

    pub fn input(&mut self, key: &str, value: Value) -> &mut Self {
        self.inputs.insert(key.to_owned(), value);
        self
    }

    pub fn detail(&mut self, key: &str, value: Value) -> &mut Self {
        self.details.insert(key.to_owned(), value);
        self
    }

    pub fn to_value(&self) -> Value {
        let mut m = Map::new();
        m.insert("command".into(), Value::String(self.command.into()));
        m.insert("inputs".into(), Value::Object(self.inputs.clone()));
        let reals = [
            ("value", self.value),
            ("error_estimate", self.error_estimate),
            ("threshold", self.threshold),
            ("margin", self.margin),
        ];
        for (key, v) in reals {
            if let Some(x) = v.filter(|x| x.is_finite()) {
                m.insert(key.into(), real(x));
            }
        }
        if let Some(p) = self.pass {
            m.insert("pass".into(), Value::Bool(p));
        }
        if let Some(s) = self.seed {
            m.insert("seed".into(), int(s));
        }
        if let Some(n) = self.samples {
            m.insert("samples".into(), int(n));
        }
        if let Some(x) = self.stderr.filter(|x| x.is_finite()) {
            m.insert("stderr".into(), real(x));
        }
        m.insert(
            "version".into(),
            Value::String(env!("CARGO_PKG_VERSION").into()),
        );
        if !self.details.is_empty() {
            let details = self
                .details
                .iter()
                .filter(|(_, v)| !v.is_null())
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect();
            m.insert("details".into(), Value::Object(details));
        }
        Value::Object(m)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_value()).expect("report serializes");
        s.push('\n');
        s
    }

    /// One `key: value` line per scalar, nested keys joined with dots.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        flatten("", &self.to_value(), &mut out);
        out
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut String) {
    let join = |k: &str| {
        if prefix.is_empty() {
            k.to_owned()
        } else {
            format!("{prefix}.{k}")
        }
    };
    match v {
        Value::Object(m) => {
            for (k, v) in m {
                flatten(&join(k), v, out);
            }
        }
        Value::Array(items) if items.iter().all(|i| !i.is_object() && !i.is_array()) => {
            let joined: Vec<String> = items.iter().map(scalar).collect();
            out.push_str(&format!("{prefix}: {}\n", joined.join(", ")));
        }
        Value::Array(items) => {
            for (i, item) in items.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), item, out);
            }
        }
        other => out.push_str(&format!("{prefix}: {}\n", scalar(other))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reals_keep_seventeen_digits() {
        assert_eq!(real(0.1).to_string(), "1.0000000000000001e-1");
        assert_eq!(real(-2.5).to_string(), "-2.5000000000000000e+0");
        let x = 0.561_614_475_916_681_f64;
        assert_eq!(real(x).to_string().parse::<f64>().unwrap(), x);
        assert!(real(f64::NAN).is_null());
    }

    #[test]
    fn absent_fields_are_omitted() {
        let mut r = Report::new("verify");
        r.value = Some(1.0);
        r.input("eta", real(0.0));
        let v = r.to_value();
        let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(keys, ["command", "inputs", "value", "version"]);
        assert!(r.to_json().ends_with("}\n"));
    }

    #[test]
    fn text_flattens_nested_fields() {
        let mut r = Report::new("sweep");
        r.detail("xs", reals(&[1.0, 2.0]));
        r.detail("rows", Value::Array(vec![serde_json::json!({"a": 1})]));
        let t = r.to_text();
        assert!(t.contains("command: sweep\n"));
        assert!(t.contains("details.xs: 1.0000000000000000e+0, 2.0000000000000000e+0\n"));
        assert!(t.contains("details.rows[0].a: 1\n"));
    }
}
