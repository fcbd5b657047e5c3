//! Report serialization: a fixed, versioned JSON schema and a line-oriented
//! text rendering. Both are deterministic for a fixed (file, bounds, seed).

use dg_poisson::Report;
use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize)]
struct JsonReport<'a> {
    schema: u32,
    status: &'a str,
    suites: Vec<JsonSuite<'a>>,
    parameters: serde_json::Map<String, serde_json::Value>,
}

#[derive(Serialize)]
struct JsonSuite<'a> {
    name: &'a str,
    checks: u64,
    violations: Vec<JsonViolation<'a>>,
}

#[derive(Serialize)]
struct JsonViolation<'a> {
    law: &'a str,
    witness: &'a str,
    lhs: &'a str,
    rhs: &'a str,
}

/// Run parameters echoed into every report, in insertion order.
#[derive(Clone, Debug, Default)]
pub struct Parameters {
    entries: Vec<(String, serde_json::Value)>,
}

impl Parameters {
    pub fn new() -> Self {
        Parameters::default()
    }

    pub fn set_str(&mut self, key: &str, value: &str) {
        self.entries.push((key.to_string(), serde_json::Value::String(value.to_string())));
    }

    pub fn set_int(&mut self, key: &str, value: u64) {
        self.entries.push((key.to_string(), serde_json::Value::Number(value.into())));
    }
}

pub fn all_passed(reports: &[Report]) -> bool {
    reports.iter().all(|r| r.passed())
}

pub fn render_json(reports: &[Report], params: &Parameters) -> String {
    let doc = JsonReport {
        schema: SCHEMA_VERSION,
        status: if all_passed(reports) { "pass" } else { "fail" },
        suites: reports
            .iter()
            .map(|r| JsonSuite {
                name: &r.suite,
                checks: r.checks,
                violations: r
                    .violations
                    .iter()
                    .map(|v| JsonViolation {
                        law: &v.law,
                        witness: &v.witness,
                        lhs: &v.lhs,
                        rhs: &v.rhs,
                    })
                    .collect(),
            })
            .collect(),
        parameters: params.entries.iter().cloned().collect(),
    };
    let mut text = serde_json::to_string_pretty(&doc).expect("report serializes");
    text.push('\n');
    text
}

pub fn render_text(reports: &[Report], params: &Parameters) -> String {
    let mut out = String::new();
    for r in reports {
        out.push_str(&r.to_string());
        out.push('\n');
    }
    let rendered: Vec<String> = params
        .entries
        .iter()
        .map(|(k, v)| match v {
            serde_json::Value::String(s) => format!("{k}={s}"),
            other => format!("{k}={other}"),
        })
        .collect();
    out.push_str(&format!("parameters: {}\n", rendered.join(" ")));
    out.push_str(&format!(
        "status: {}\n",
        if all_passed(reports) { "pass" } else { "fail" }
    ));
    out
}
