//! Run reports: machine-readable JSON with stable keys alongside human text.

use serde::Serialize;

#[derive(Serialize)]
pub struct ValueEntry {
    pub name: String,
    /// canonical exact rendering (rational / √π-Laurent / `Q(m)[β]` string)
    pub exact: String,
    /// float projection of the exact value (NaN when symbolic)
    pub float: f64,
}

#[derive(Serialize)]
pub struct Verdict {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Serialize)]
pub struct Timings {
    pub total_ms: u128,
}

#[derive(Serialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: serde_json::Value,
    pub values: Vec<ValueEntry>,
    pub verdicts: Vec<Verdict>,
    pub timings: Timings,
}

impl RunReport {
    pub fn new(command: &str, inputs: serde_json::Value) -> Self {
        RunReport {
            command: command.to_owned(),
            inputs,
            values: Vec::new(),
            verdicts: Vec::new(),
            timings: Timings { total_ms: 0 },
        }
    }

    pub fn value(&mut self, name: impl Into<String>, exact: String, float: f64) {
        self.values.push(ValueEntry {
            name: name.into(),
            exact,
            float,
        });
    }

    pub fn verdict(&mut self, name: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.verdicts.push(Verdict {
            name: name.into(),
            pass,
            detail: detail.into(),
        });
    }

    pub fn all_pass(&self) -> bool {
        self.verdicts.iter().all(|v| v.pass)
    }

    pub fn render_human(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("== {} ==\n", self.command));
        if !self.values.is_empty() {
            out.push_str("values:\n");
            for v in &self.values {
                if v.float.is_nan() {
                    out.push_str(&format!("  {:<26} {}\n", v.name, v.exact));
                } else {
                    out.push_str(&format!(
                        "  {:<26} {}  (≈ {:.12e})\n",
                        v.name, v.exact, v.float
                    ));
                }
            }
        }
        if !self.verdicts.is_empty() {
            out.push_str("verdicts:\n");
            for v in &self.verdicts {
                out.push_str(&format!(
                    "  [{}] {:<30} {}\n",
                    if v.pass { "pass" } else { "FAIL" },
                    v.name,
                    v.detail
                ));
            }
        }
        out.push_str(&format!(
            "overall: {} ({} ms)\n",
            if self.all_pass() { "PASS" } else { "FAIL" },
            self.timings.total_ms
        ));
        out
    }
}
