//! Run reports shared by every subcommand, and their two renderings.

use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// An inconsistency in the printed source, reported but not fatal.
    Finding,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Finding => "FINDING",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, status: Status, detail: impl Into<String>) -> Self {
        Self { name: name.into(), status, detail: detail.into() }
    }

    pub fn assert(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        Self::new(name, if ok { Status::Pass } else { Status::Fail }, detail)
    }
}

/// Varying run metadata; excluded from report equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Header {
    pub command: Vec<String>,
    pub timestamp: String,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OutputFormat {
    #[default]
    Json,
    Text,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RunReport {
    pub header: Header,
    pub checks: Vec<Check>,
    pub artifacts: Vec<String>,
    pub data: Value,
    /// Human rendering of `data`.
    #[serde(skip)]
    pub body: String,
}

impl PartialEq for RunReport {
    fn eq(&self, other: &Self) -> bool {
        self.checks == other.checks && self.artifacts == other.artifacts && self.data == other.data
    }
}

impl RunReport {
    pub fn new(data: Value, body: String) -> Self {
        Self { header: Header::default(), checks: Vec::new(), artifacts: Vec::new(), data, body }
    }

    pub fn with_checks(mut self, checks: Vec<Check>) -> Self {
        self.checks.extend(checks);
        self
    }

    pub fn stamp(&mut self, command: Vec<String>) {
        self.header.command = command;
        self.header.timestamp = chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true);
    }

    pub fn pass_vector(&self) -> Vec<Status> {
        self.checks.iter().map(|c| c.status).collect()
    }

    pub fn has_failures(&self) -> bool {
        self.checks.iter().any(|c| c.status == Status::Fail)
    }

    /// 0 when nothing failed (findings included), 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        i32::from(self.has_failures())
    }

    pub fn render(&self, format: OutputFormat) -> Result<String> {
        match format {
            OutputFormat::Json => to_json(self),
            OutputFormat::Text => Ok(self.render_text()),
        }
    }

    fn render_text(&self) -> String {
        let mut out = String::new();
        if !self.header.command.is_empty() {
            let _ = writeln!(out, "# command: {}", self.header.command.join(" "));
        }
        if !self.header.timestamp.is_empty() {
            let _ = writeln!(out, "# timestamp: {}", self.header.timestamp);
        }
        out.push_str(&self.body);
        if !self.body.is_empty() && !self.body.ends_with('\n') {
            out.push('\n');
        }
        for c in &self.checks {
            let _ = writeln!(out, "{:<7} {}: {}", c.status.label(), c.name, c.detail);
        }
        for a in &self.artifacts {
            let _ = writeln!(out, "wrote {a}");
        }
        out
    }
}

/// Two-space indented JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    std::fs::write(path, to_json(value)?)?;
    Ok(())
}
