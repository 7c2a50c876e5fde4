//! What a subcommand hands back, and how it is printed.

use std::fmt;
use std::process::ExitCode;

use qsl2::Error;
use serde_json::{json, Value};

/// Result of one subcommand: the text printed by default and the JSON
/// document printed under `--json`.
pub struct Report {
    pub command: &'static str,
    pub inputs: Value,
    pub value: Value,
    pub routes: Vec<String>,
    pub text: String,
    /// Set when a cross-check ran and failed; the output is still printed.
    pub disagreement: bool,
}

impl Report {
    pub fn new(command: &'static str, inputs: Value, value: Value, text: impl Into<String>) -> Self {
        Report {
            command,
            inputs,
            value,
            routes: Vec::new(),
            text: text.into(),
            disagreement: false,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "inputs": self.inputs,
            "value": self.value,
            "routes": self.routes,
        })
    }
}

/// Failures a subcommand can end with.
#[derive(Debug)]
pub enum Failure {
    /// Malformed input: bad index tuples, unreadable files, parse errors.
    Usage(String),
    /// Well-formed input that is mathematically out of range.
    Admissibility(String),
    Internal(String),
}

impl Failure {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            Failure::Usage(_) => ExitCode::from(2),
            Failure::Admissibility(_) => ExitCode::from(3),
            Failure::Internal(_) => ExitCode::from(1),
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) => write!(f, "usage error: {m}"),
            Failure::Admissibility(m) => write!(f, "inadmissible input: {m}"),
            Failure::Internal(m) => write!(f, "internal error: {m}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        match e {
            Error::Inadmissible { .. } | Error::OutOfRange { .. } | Error::ShapeMismatch(_) | Error::NetworkWidth { .. } => {
                Failure::Admissibility(msg)
            }
            Error::NetworkParse { .. } | Error::PolyParse { .. } => Failure::Usage(msg),
            _ => Failure::Internal(msg),
        }
    }
}
