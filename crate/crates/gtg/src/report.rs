//! The report object every subcommand produces.

use std::fmt::Write as _;
use std::sync::OnceLock;

use serde::Serialize;
use serde_json::Value;

pub const SCHEMA: &str = include_str!("../schema/run_report.schema.json");
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Info,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Item {
    pub section: String,
    pub label: String,
    pub status: Status,
    pub data: Value,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub items: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: Value,
    pub results: Vec<Item>,
    pub summary: Summary,
    /// `section: label` of every failed item.
    pub failures: Vec<String>,
    pub notes: Vec<String>,
    pub version: String,
    pub wall_time_ms: u64,
}

impl RunReport {
    pub fn new(command: &str, inputs: Value) -> Self {
        RunReport {
            command: command.into(),
            inputs,
            results: Vec::new(),
            summary: Summary::default(),
            failures: Vec::new(),
            notes: Vec::new(),
            version: VERSION.into(),
            wall_time_ms: 0,
        }
    }

    pub fn push(&mut self, section: &str, label: impl Into<String>, status: Status, data: Value) {
        let label = label.into();
        self.summary.items += 1;
        match status {
            Status::Pass => self.summary.passed += 1,
            Status::Fail => {
                self.summary.failed += 1;
                self.failures.push(format!("{}: {}", section, label));
            }
            Status::Info => {}
        }
        self.results.push(Item { section: section.into(), label, status, data });
    }

    pub fn check(&mut self, section: &str, label: impl Into<String>, passed: bool, data: Value) {
        self.push(section, label, if passed { Status::Pass } else { Status::Fail }, data);
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn to_value(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }

    /// Pretty JSON, validated against the published schema.
    pub fn to_json(&self) -> Result<String, String> {
        let v = self.to_value();
        validate(&v)?;
        Ok(serde_json::to_string_pretty(&v).expect("value serializes"))
    }

    /// JSON with the timing field zeroed, for comparing runs.
    pub fn to_json_without_timing(&self) -> Result<String, String> {
        RunReport { wall_time_ms: 0, ..self.clone() }.to_json()
    }

    /// One line per item followed by the summary.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut section = "";
        for it in &self.results {
            if it.section != section {
                section = &it.section;
                let _ = writeln!(out, "[{}]", section);
            }
            let tag = match it.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Info => "    ",
            };
            let _ = writeln!(out, "  {} {}", tag, it.label);
        }
        for n in &self.notes {
            let _ = writeln!(out, "note: {}", n);
        }
        let _ = writeln!(
            out,
            "{}: {} items, {} passed, {} failed",
            self.command, self.summary.items, self.summary.passed, self.summary.failed
        );
        for f in &self.failures {
            let _ = writeln!(out, "failed: {}", f);
        }
        out
    }
}

pub fn validate(v: &Value) -> Result<(), String> {
    static VALIDATOR: OnceLock<jsonschema::Validator> = OnceLock::new();
    let validator = VALIDATOR.get_or_init(|| {
        let schema: Value = serde_json::from_str(SCHEMA).expect("schema is valid JSON");
        jsonschema::validator_for(&schema).expect("schema compiles")
    });
    let errors: Vec<String> = validator.iter_errors(v).map(|e| e.to_string()).collect();
    if errors.is_empty() {
        Ok(())
    } else {
        Err(format!("report violates schema: {}", errors.join("; ")))
    }
}
