//! Output assembly: JSON or RFC-4180 CSV, to stdout or a file, with the
//! schema marker on every JSON document.

use crate::config::OutputFormat;
use charlevel_core::Rat;
use std::io::Write;
use std::path::PathBuf;

pub const SCHEMA: &str = "charlevel/1";

pub struct Sink {
    target: Option<PathBuf>,
    buffer: String,
}

impl Sink {
    pub fn new(target: Option<PathBuf>) -> Sink {
        Sink {
            target,
            buffer: String::new(),
        }
    }

    pub fn line(&mut self, s: &str) {
        self.buffer.push_str(s);
        self.buffer.push('\n');
    }

    pub fn finish(self) -> Result<(), String> {
        match self.target {
            Some(path) => std::fs::write(&path, self.buffer.as_bytes())
                .map_err(|e| format!("cannot write {}: {}", path.display(), e)),
            None => {
                let mut out = std::io::stdout().lock();
                out.write_all(self.buffer.as_bytes())
                    .and_then(|_| out.flush())
                    .map_err(|e| format!("cannot write output: {}", e))
            }
        }
    }
}

/// RFC-4180 field quoting: quote when the field contains a comma, a quote or
/// a line break; double the quotes inside.
pub fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') || s.contains('\r') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn csv_row(fields: &[String]) -> String {
    fields
        .iter()
        .map(|f| csv_field(f))
        .collect::<Vec<_>>()
        .join(",")
}

/// Exact rational as `p/q` (or plain integer when the denominator is one).
pub fn rat_exact(r: &Rat) -> String {
    if r.denom() == &charlevel_core::Int::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn emit(format: OutputFormat, json: String, csv: Vec<String>, sink: &mut Sink) {
    match format {
        OutputFormat::Json => sink.line(&json),
        OutputFormat::Csv => {
            for row in csv {
                sink.line(&row);
            }
        }
    }
}
