//! The run report written by every command.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// Verdict is `pass` iff every residual is within its tolerance and the
/// command's own property holds.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    pub seed: u64,
    pub results: Value,
    pub residuals: BTreeMap<String, f64>,
    pub tolerances: BTreeMap<String, f64>,
    pub verdict: Verdict,
}

impl RunReport {
    pub fn new(command: &str, seed: u64) -> Self {
        Self {
            command: command.to_string(),
            inputs: BTreeMap::new(),
            seed,
            results: Value::Null,
            residuals: BTreeMap::new(),
            tolerances: BTreeMap::new(),
            verdict: Verdict::Pass,
        }
    }

    pub fn residual(&mut self, name: &str, value: f64, tolerance: f64) {
        let e = self.residuals.entry(name.to_string()).or_insert(0.0);
        *e = e.max(if value.is_nan() { f64::INFINITY } else { value });
        self.tolerances.insert(name.to_string(), tolerance);
    }

    /// Fold the command's own property into the verdict.
    pub fn settle(&mut self, property_holds: bool) {
        let within = self
            .residuals
            .iter()
            .all(|(k, v)| *v <= self.tolerances.get(k).copied().unwrap_or(0.0));
        self.verdict = if property_holds && within {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
    }

    pub fn to_json(&self) -> String {
        let mut v = serde_json::to_value(self).expect("report serializes");
        clamp(&mut v);
        serde_json::to_string_pretty(&v).expect("report serializes")
    }
}

/// Zero every float below 1e-14 in magnitude, so reports diff cleanly.
pub fn clamp(v: &mut Value) {
    match v {
        Value::Number(n) => {
            if let Some(x) = n.as_f64() {
                if n.is_f64() && x.abs() < 1e-14 {
                    *v = serde_json::json!(0.0);
                }
            }
        }
        Value::Array(items) => items.iter_mut().for_each(clamp),
        Value::Object(map) => map.values_mut().for_each(clamp),
        _ => {}
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn clamps_noise() {
        let mut v = json!({"a": [1e-16, -3e-15, 0.5], "b": 7});
        clamp(&mut v);
        assert_eq!(v, json!({"a": [0.0, 0.0, 0.5], "b": 7}));
    }

    #[test]
    fn verdict_follows_residuals() {
        let mut r = RunReport::new("x", 0);
        r.residual("a", 1e-3, 1e-8);
        r.settle(true);
        assert_eq!(r.verdict, Verdict::Fail);
        let mut r = RunReport::new("x", 0);
        r.residual("a", 1e-12, 1e-8);
        r.settle(true);
        assert_eq!(r.verdict, Verdict::Pass);
        r.settle(false);
        assert_eq!(r.verdict, Verdict::Fail);
    }
}
