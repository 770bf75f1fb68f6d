//! Output rendering: JSON records, CSV tables, and plain text.

use std::fs;
use std::io::Write;

use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Plain,
}

/// Result of one subcommand, ready for rendering in any format.
pub struct CommandOutput {
    pub command: String,
    pub input: Value,
    pub result: Value,
    pub status: &'static str,
    /// Tabular view for CSV: header plus rows.
    pub table: Option<(Vec<&'static str>, Vec<Vec<String>>)>,
    pub exit_code: i32,
}

impl CommandOutput {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let v = json!({
                    "command": self.command,
                    "input": self.input,
                    "result": self.result,
                    "status": self.status,
                });
                let mut s = serde_json::to_string_pretty(&v).expect("serializable");
                s.push('\n');
                s
            }
            Format::Csv => self.render_csv(),
            Format::Plain => self.render_plain(),
        }
    }

    fn render_csv(&self) -> String {
        let mut out = String::new();
        match &self.table {
            Some((header, rows)) => {
                out.push_str(&header.join(","));
                out.push('\n');
                for row in rows {
                    out.push_str(&row.join(","));
                    out.push('\n');
                }
            }
            None => {
                // scalar record: one header row, one value row
                let obj = self.result.as_object().cloned().unwrap_or_default();
                let keys: Vec<String> = obj.keys().cloned().collect();
                out.push_str(&keys.join(","));
                out.push('\n');
                let vals: Vec<String> = keys
                    .iter()
                    .map(|k| csv_scalar(&obj[k]))
                    .collect();
                out.push_str(&vals.join(","));
                out.push('\n');
            }
        }
        out
    }

    fn render_plain(&self) -> String {
        let mut out = format!("{}: {}\n", self.command, self.status);
        render_value(&mut out, &self.result, 0);
        out
    }
}

fn csv_scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.replace(',', ";"),
        other => other.to_string().replace(',', ";"),
    }
}

fn render_value(out: &mut String, v: &Value, indent: usize) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                match val {
                    Value::Object(_) | Value::Array(_) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_value(out, val, indent + 1);
                    }
                    _ => out.push_str(&format!("{pad}{k}: {}\n", plain_scalar(val))),
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                match item {
                    Value::Object(_) | Value::Array(_) => {
                        out.push_str(&format!("{pad}-\n"));
                        render_value(out, item, indent + 1);
                    }
                    _ => out.push_str(&format!("{pad}- {}\n", plain_scalar(item))),
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", plain_scalar(other))),
    }
}

fn plain_scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Print to stdout or the requested file.
pub fn emit(text: &str, out_file: Option<&std::path::Path>) -> std::io::Result<()> {
    match out_file {
        Some(path) => fs::write(path, text),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())
        }
    }
}
