//! Line-oriented verdict records, rendered as aligned text or TSV.

use std::fmt;
use std::str::FromStr;

use crate::error::TokenError;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Plain,
    Tsv,
}

impl FromStr for Format {
    type Err = TokenError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "plain" => Ok(Format::Plain),
            "tsv" => Ok(Format::Tsv),
            other => Err(TokenError::Unknown(other.to_string())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Record {
    pub subject: String,
    pub check: String,
    pub verdict: String,
    pub witness: String,
}

impl Record {
    pub fn new(
        subject: impl Into<String>,
        check: impl Into<String>,
        verdict: impl Into<String>,
        witness: impl Into<String>,
    ) -> Self {
        Record {
            subject: subject.into(),
            check: check.into(),
            verdict: verdict.into(),
            witness: witness.into(),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub records: Vec<Record>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn push(&mut self, r: Record) {
        self.records.push(r);
    }

    pub fn extend(&mut self, other: Report) {
        self.records.extend(other.records);
    }

    pub fn render(&self, format: Format) -> String {
        let mut out = String::new();
        match format {
            Format::Tsv => {
                for r in &self.records {
                    let line = [&r.subject, &r.check, &r.verdict, &r.witness].map(|f| tsv_field(f));
                    out.push_str(&line.join("\t"));
                    out.push('\n');
                }
            }
            Format::Plain => {
                let w0 = self
                    .records
                    .iter()
                    .map(|r| r.subject.chars().count())
                    .max()
                    .unwrap_or(0);
                let w1 = self
                    .records
                    .iter()
                    .map(|r| r.check.chars().count())
                    .max()
                    .unwrap_or(0);
                for r in &self.records {
                    let mut line = format!(
                        "{:w0$}  {:w1$}  {}",
                        r.subject,
                        r.check,
                        r.verdict,
                        w0 = w0,
                        w1 = w1
                    );
                    if !r.witness.is_empty() {
                        line.push_str("  ");
                        line.push_str(&r.witness);
                    }
                    out.push_str(line.trim_end());
                    out.push('\n');
                }
            }
        }
        out
    }
}

fn tsv_field(s: &str) -> String {
    s.replace(['\t', '\n'], " ")
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(Format::Plain))
    }
}
