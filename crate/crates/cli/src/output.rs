use std::io::Write;
use std::path::Path;

use clap::ValueEnum;
use serde_json::{json, Value};

use crate::commands::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// A finished command: the configuration it ran with and its renderings.
pub struct Report {
    pub command: &'static str,
    pub config: Value,
    pub result: Value,
    pub text: String,
    pub csv: Option<String>,
}

impl Report {
    /// JSON envelope. Keys come out sorted, so equal runs give equal bytes.
    pub fn envelope(&self) -> Value {
        let mut config = self.config.clone();
        config["command"] = json!(self.command);
        json!({
            "tool": "wpn-lab",
            "version": env!("CARGO_PKG_VERSION"),
            "command": self.command,
            "config": config,
            "config_hash": wpn_core::census::config_hash(&config),
            "result": self.result,
        })
    }

    pub fn render(&self, format: Format) -> Result<String, CliError> {
        match format {
            Format::Json => Ok(serde_json::to_string_pretty(&self.envelope()).expect("json renders") + "\n"),
            Format::Text => Ok(self.text.clone()),
            Format::Csv => self.csv.clone().ok_or_else(|| {
                CliError::Precondition(format!("`{}` has no CSV output; use json or text", self.command))
            }),
        }
    }
}

pub fn write_out(path: Option<&Path>, body: &str) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, body).map_err(|e| CliError::Io(format!("{}: {e}", p.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(body.as_bytes())
                .and_then(|()| out.flush())
                .map_err(|e| CliError::Io(e.to_string()))
        }
    }
}
