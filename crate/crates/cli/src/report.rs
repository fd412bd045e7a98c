use std::io::Write;

use dix::Rational;
use serde::Serialize;

/// One evaluated bound.
#[derive(Clone, Debug, Serialize)]
pub struct Record {
    pub problem: String,
    pub bound: String,
    pub detail: String,
    pub value: String,
    pub decimal: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matches: Option<bool>,
    pub ms: u128,
}

impl Record {
    pub fn new(problem: &str, bound: &str, detail: String, value: &Rational, ms: u128) -> Self {
        Record {
            problem: problem.to_string(),
            bound: bound.to_string(),
            detail,
            value: value.to_string(),
            decimal: value.to_decimal(4),
            expected: None,
            matches: None,
            ms,
        }
    }

    pub fn expect(mut self, expected: Option<&Rational>) -> Self {
        if let Some(e) = expected {
            self.matches = Some(self.value == e.to_string());
            self.expected = Some(e.to_string());
        }
        self
    }
}

/// `70/3 ≈ 23.3333`.
pub fn render(value: &Rational) -> String {
    format!("{value} ≈ {}", value.to_decimal(4))
}

/// One catalog row.
#[derive(Clone, Debug, Serialize)]
pub struct CatalogRow {
    pub problem_no: Option<u16>,
    pub sequence: String,
    pub inner: String,
    pub outer: String,
    pub expected: Option<String>,
    pub established: bool,
    pub grouping_used: String,
    pub ms_inner: u128,
    pub ms_outer: u128,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

pub fn write_records(out: &mut dyn Write, records: &[Record], format: Format) -> std::io::Result<()> {
    match format {
        Format::Text => {
            for r in records {
                let value = format!("{} ≈ {}", r.value, r.decimal);
                write!(out, "{} {} [{}]: {value}", r.problem, r.bound, r.detail)?;
                if let (Some(e), Some(m)) = (&r.expected, r.matches) {
                    write!(out, " (expected {e}, {})", if m { "match" } else { "MISMATCH" })?;
                }
                writeln!(out)?;
            }
            Ok(())
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for r in records {
                w.serialize(r).map_err(std::io::Error::other)?;
            }
            w.flush()
        }
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, records).map_err(std::io::Error::other)?;
            writeln!(out)
        }
    }
}

pub fn write_catalog(out: &mut dyn Write, rows: &[CatalogRow], format: Format) -> std::io::Result<()> {
    match format {
        Format::Text => {
            for r in rows {
                let verdict = if r.established { "ESTABLISHED" } else { "UNRESOLVED" };
                let no = r.problem_no.map(|k| format!("{k:>3} ")).unwrap_or_default();
                let expected = r.expected.as_deref().map(|e| format!(" expected {e}")).unwrap_or_default();
                writeln!(
                    out,
                    "{no}{} inner {} outer {}{expected} {verdict} via {}",
                    r.sequence, r.inner, r.outer, r.grouping_used
                )?;
            }
            Ok(())
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for r in rows {
                w.serialize(r).map_err(std::io::Error::other)?;
            }
            w.flush()
        }
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, rows).map_err(std::io::Error::other)?;
            writeln!(out)
        }
    }
}
