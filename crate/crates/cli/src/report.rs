use std::fmt::Write as _;

use anyhow::Result;
use clap::ValueEnum;
use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Markdown,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Markdown => "md",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

/// Output of every command. All three formats render this.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    pub title: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Value>>,
    pub certificates: Vec<Certificate>,
    pub notes: Vec<String>,
    pub pass: bool,
}

impl Report {
    pub fn new(command: &str, title: impl Into<String>, columns: &[&str]) -> Report {
        Report {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            title: title.into(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
            certificates: Vec::new(),
            notes: Vec::new(),
            pass: true,
        }
    }

    pub fn row(&mut self, cells: Vec<Value>) {
        debug_assert_eq!(cells.len(), self.columns.len());
        self.rows.push(cells);
    }

    pub fn certify(&mut self, name: &str, pass: bool, detail: impl Into<String>) {
        self.pass &= pass;
        self.certificates.push(Certificate {
            name: name.to_string(),
            pass,
            detail: detail.into(),
        });
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Json => Ok(serde_json::to_string_pretty(self)? + "\n"),
            Format::Csv => self.to_csv(),
            Format::Markdown => Ok(self.to_markdown()),
        }
    }

    fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.columns)?;
        for row in &self.rows {
            w.write_record(row.iter().map(cell_text))?;
        }
        Ok(String::from_utf8(w.into_inner()?)?)
    }

    fn to_markdown(&self) -> String {
        let mut out = format!("# {}\n\n", self.title);
        if !self.columns.is_empty() {
            let _ = writeln!(out, "| {} |", self.columns.join(" | "));
            let _ = writeln!(out, "|{}", "---|".repeat(self.columns.len()));
            for row in &self.rows {
                let cells: Vec<String> = row.iter().map(|c| cell_text(c).replace('|', "\\|")).collect();
                let _ = writeln!(out, "| {} |", cells.join(" | "));
            }
            out.push('\n');
        }
        for note in &self.notes {
            let _ = writeln!(out, "{note}\n");
        }
        if !self.certificates.is_empty() {
            out.push_str("## Certificates\n\n");
            for c in &self.certificates {
                let verdict = if c.pass { "PASS" } else { "FAIL" };
                let _ = writeln!(out, "- {}: {verdict} ({})", c.name, c.detail);
            }
            out.push('\n');
        }
        let _ = writeln!(out, "Result: {}", if self.pass { "PASS" } else { "FAIL" });
        out
    }
}

pub fn cell_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn sample() -> Report {
        let mut r = Report::new("demo", "Demo", &["a", "b"]);
        r.row(vec![json!(1), json!("x, y")]);
        r.row(vec![json!(-2), json!("m_{0,1}")]);
        r.certify("check", true, "ok");
        r
    }

    #[test]
    fn json_round_trip() {
        let r = sample();
        let back: Report = serde_json::from_str(&r.render(Format::Json).unwrap()).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn csv_round_trip() {
        let r = sample();
        let text = r.render(Format::Csv).unwrap();
        let mut reader = csv::Reader::from_reader(text.as_bytes());
        let header: Vec<String> = reader.headers().unwrap().iter().map(String::from).collect();
        assert_eq!(header, r.columns);
        let rows: Vec<Vec<String>> = reader
            .records()
            .map(|rec| rec.unwrap().iter().map(String::from).collect())
            .collect();
        let expected: Vec<Vec<String>> = r.rows.iter().map(|row| row.iter().map(cell_text).collect()).collect();
        assert_eq!(rows, expected);
    }

    #[test]
    fn markdown_has_verdict() {
        let mut r = sample();
        r.certify("bad", false, "det 0");
        let md = r.render(Format::Markdown).unwrap();
        assert!(md.contains("| 1 | x, y |"));
        assert!(md.contains("- bad: FAIL (det 0)"));
        assert!(md.ends_with("Result: FAIL\n"));
    }
}
