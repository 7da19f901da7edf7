//! The machine-readable outcome of one command.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use xmodkit_core::report::{Check, CheckReport};
use xmodkit_core::Error;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INPUT_ERROR: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    InputError,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Section {
    pub name: String,
    pub checks: Vec<Check>,
}

impl Section {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorInfo {
    pub kind: String,
    pub message: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub path: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl ErrorInfo {
    /// Errors carrying a violated law and its witness are check failures; everything else
    /// is an input error.
    pub fn from_core(e: &Error) -> (Self, i32) {
        let (kind, path, witness, code) = match e {
            Error::InvalidStructure { witness, .. } => (
                "invalid_structure",
                None,
                Some(witness.clone()),
                EXIT_CHECK_FAILED,
            ),
            Error::AxiomFailure { witness, .. } => (
                "axiom_failure",
                None,
                Some(witness.clone()),
                EXIT_CHECK_FAILED,
            ),
            Error::NotADerivation { witness, .. } => (
                "not_a_derivation",
                None,
                Some(witness.clone()),
                EXIT_CHECK_FAILED,
            ),
            Error::NotARepresentation { witness } => (
                "not_a_representation",
                None,
                Some(witness.clone()),
                EXIT_CHECK_FAILED,
            ),
            Error::NotClosed { witness } => {
                ("not_closed", None, Some(witness.clone()), EXIT_CHECK_FAILED)
            }
            Error::Inconsistent(w) => ("inconsistent", None, Some(w.clone()), EXIT_CHECK_FAILED),
            Error::Schema { path, .. } => ("schema", Some(path.clone()), None, EXIT_INPUT_ERROR),
            Error::DimensionMismatch { .. } => ("dimension_mismatch", None, None, EXIT_INPUT_ERROR),
            Error::ShapeMismatch { .. } => ("shape_mismatch", None, None, EXIT_INPUT_ERROR),
            Error::AlgebraMismatch => ("algebra_mismatch", None, None, EXIT_INPUT_ERROR),
            Error::NotSplit(_) => ("not_split", None, None, EXIT_INPUT_ERROR),
            Error::DegreeOverflow(_) => ("degree_overflow", None, None, EXIT_INPUT_ERROR),
            Error::NonComposable(_) => ("non_composable", None, None, EXIT_INPUT_ERROR),
            Error::NonEnveloping(_) => ("non_enveloping", None, None, EXIT_INPUT_ERROR),
        };
        let info = ErrorInfo {
            kind: kind.into(),
            message: e.to_string(),
            path,
            witness,
        };
        (info, code)
    }

    pub fn input(kind: &str, message: impl Into<String>) -> Self {
        ErrorInfo {
            kind: kind.into(),
            message: message.into(),
            path: None,
            witness: None,
        }
    }
}

/// Command echo, per-check verdicts with witnesses, artifacts, timing and exit status.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: Vec<String>,
    pub status: Status,
    pub exit_code: i32,
    pub sections: Vec<Section>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub artifacts: BTreeMap<String, Value>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorInfo>,
    pub elapsed_ms: u64,
}

impl Report {
    pub fn new(command: Vec<String>) -> Self {
        Self {
            command,
            status: Status::Pass,
            exit_code: EXIT_PASS,
            sections: Vec::new(),
            artifacts: BTreeMap::new(),
            notes: Vec::new(),
            error: None,
            elapsed_ms: 0,
        }
    }

    pub fn section(&mut self, name: impl Into<String>, checks: CheckReport) {
        self.sections.push(Section {
            name: name.into(),
            checks: checks.checks,
        });
    }

    pub fn artifact(&mut self, name: &str, value: impl Serialize) {
        let value = serde_json::to_value(value).expect("artifacts serialize");
        self.artifacts.insert(name.to_string(), value);
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn all_passed(&self) -> bool {
        self.sections.iter().all(Section::passed)
    }

    pub fn first_failure(&self) -> Option<(&str, &Check)> {
        self.sections.iter().find_map(|s| {
            s.checks
                .iter()
                .find(|c| !c.passed)
                .map(|c| (s.name.as_str(), c))
        })
    }

    /// Sets status and exit code from the sections, unless an error already set them.
    pub fn finish(&mut self) {
        if self.error.is_some() {
            return;
        }
        if self.all_passed() {
            self.status = Status::Pass;
            self.exit_code = EXIT_PASS;
        } else {
            self.status = Status::Fail;
            self.exit_code = EXIT_CHECK_FAILED;
        }
    }

    pub fn fail_with(&mut self, info: ErrorInfo, code: i32) {
        self.status = if code == EXIT_CHECK_FAILED {
            Status::Fail
        } else {
            Status::InputError
        };
        self.exit_code = code;
        self.error = Some(info);
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "$ {}", self.command.join(" "));
        for section in &self.sections {
            let _ = writeln!(out, "[{}]", section.name);
            for c in &section.checks {
                match (&c.witness, c.passed) {
                    (_, true) => {
                        let _ = writeln!(out, "  pass  {}", c.name);
                    }
                    (Some(w), false) => {
                        let _ = writeln!(out, "  FAIL  {}  (witness: {w})", c.name);
                    }
                    (None, false) => {
                        let _ = writeln!(out, "  FAIL  {}", c.name);
                    }
                }
            }
        }
        for (name, value) in &self.artifacts {
            let _ = writeln!(out, "{name}: {value}");
        }
        for note in &self.notes {
            let _ = writeln!(out, "note: {note}");
        }
        if let Some(e) = &self.error {
            let _ = writeln!(out, "error ({}): {}", e.kind, e.message);
        }
        let status = match self.status {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::InputError => "input error",
        };
        let _ = writeln!(
            out,
            "result: {status} (exit {}) in {} ms",
            self.exit_code, self.elapsed_ms
        );
        out
    }
}
