//! Report files: one header line, then CSV or JSON-lines rows.
//!
//! The header carries the tool version, a hash of the effective config and a
//! hash of the rows, so identical experiments produce identical files.

use std::io::Write;
use std::path::Path;

use anyhow::Context;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::config::Format;

pub const TOOL: &str = "palinkit";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub fn sha256_hex(bytes: &[u8]) -> String {
    format!("{:x}", Sha256::digest(bytes))
}

pub struct Report {
    command: &'static str,
    config_hash: String,
    format: Format,
    caveats: Vec<String>,
    body: Vec<u8>,
    csv_header_written: bool,
}

#[derive(Serialize)]
struct JsonHeader<'a> {
    tool: &'a str,
    version: &'a str,
    command: &'a str,
    config_sha256: &'a str,
    content_sha256: &'a str,
    caveats: &'a [String],
}

impl Report {
    /// `config` is serialized to JSON and hashed; it should hold every
    /// setting that affects the rows and nothing else.
    pub fn new<C: Serialize>(
        command: &'static str,
        config: &C,
        format: Format,
    ) -> anyhow::Result<Self> {
        let config_json = serde_json::to_vec(config)?;
        Ok(Report {
            command,
            config_hash: sha256_hex(&config_json),
            format,
            caveats: Vec::new(),
            body: Vec::new(),
            csv_header_written: false,
        })
    }

    pub fn caveat(&mut self, note: impl Into<String>) {
        self.caveats.push(note.into());
    }

    pub fn row<R: Serialize>(&mut self, row: &R) -> anyhow::Result<()> {
        match self.format {
            Format::Jsonl => {
                serde_json::to_writer(&mut self.body, row)?;
                self.body.push(b'\n');
            }
            Format::Csv => {
                let mut w = csv::WriterBuilder::new()
                    .has_headers(!self.csv_header_written)
                    .from_writer(&mut self.body);
                w.serialize(row)?;
                w.flush()?;
                self.csv_header_written = true;
            }
        }
        Ok(())
    }

    fn header(&self) -> anyhow::Result<String> {
        let content = sha256_hex(&self.body);
        Ok(match self.format {
            Format::Csv => {
                let mut line = format!(
                    "# {TOOL} {VERSION} command={} config_sha256={} content_sha256={content}",
                    self.command, self.config_hash
                );
                for c in &self.caveats {
                    line.push_str(&format!(" caveat=\"{c}\""));
                }
                line
            }
            Format::Jsonl => serde_json::to_string(&JsonHeader {
                tool: TOOL,
                version: VERSION,
                command: self.command,
                config_sha256: &self.config_hash,
                content_sha256: &content,
                caveats: &self.caveats,
            })?,
        })
    }

    /// Writes to `path`, or to stdout when there is none.
    pub fn finish(self, path: Option<&Path>) -> anyhow::Result<()> {
        let header = self.header()?;
        let mut out: Box<dyn Write> = match path {
            Some(p) => Box::new(std::io::BufWriter::new(
                std::fs::File::create(p).with_context(|| format!("creating {}", p.display()))?,
            )),
            None => Box::new(std::io::stdout().lock()),
        };
        writeln!(out, "{header}")?;
        out.write_all(&self.body)?;
        out.flush()?;
        Ok(())
    }
}
