//! CSV and JSON serialization of grid records.

use std::io::Write;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::verify::VerifyRecord;

pub const CSV_HEADER: [&str; 14] = [
    "variant",
    "m",
    "p",
    "nu",
    "f",
    "x",
    "dispatch",
    "closed",
    "lemma",
    "oracle",
    "rel_err_closed",
    "rel_err_lemma",
    "terms_oracle",
    "status",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(Error::Config(format!("unknown format '{other}'"))),
        }
    }
}

/// Shortest representation that round-trips to the same `f64`.
pub fn fmt_f64(v: f64) -> String {
    format!("{v:?}")
}

fn opt(v: Option<f64>) -> String {
    v.map(fmt_f64).unwrap_or_default()
}

#[derive(Serialize)]
struct Row<'a> {
    variant: &'a str,
    m: u32,
    p: u32,
    nu: f64,
    f: f64,
    x: f64,
    dispatch: Option<&'a str>,
    closed: Option<f64>,
    lemma: Option<f64>,
    oracle: Option<f64>,
    rel_err_closed: Option<f64>,
    rel_err_lemma: Option<f64>,
    terms_oracle: Option<usize>,
    status: String,
}

impl<'a> From<&'a VerifyRecord> for Row<'a> {
    fn from(r: &'a VerifyRecord) -> Self {
        Row {
            variant: r.spec.variant().label(),
            m: r.spec.m,
            p: r.spec.p,
            nu: r.spec.nu,
            f: r.spec.f,
            x: r.spec.x,
            dispatch: r.dispatch.map(|d| d.as_str()),
            closed: r.closed,
            lemma: r.lemma,
            oracle: r.oracle,
            rel_err_closed: r.rel_err_closed,
            rel_err_lemma: r.rel_err_lemma,
            terms_oracle: r.terms_oracle,
            status: r.status.to_string(),
        }
    }
}

pub fn write_csv<W: Write>(records: &[VerifyRecord], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in records {
        let s = &r.spec;
        w.write_record([
            s.variant().label().to_string(),
            s.m.to_string(),
            s.p.to_string(),
            fmt_f64(s.nu),
            fmt_f64(s.f),
            fmt_f64(s.x),
            r.dispatch.map(|d| d.to_string()).unwrap_or_default(),
            opt(r.closed),
            opt(r.lemma),
            opt(r.oracle),
            opt(r.rel_err_closed),
            opt(r.rel_err_lemma),
            r.terms_oracle.map(|t| t.to_string()).unwrap_or_default(),
            r.status.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_json<W: Write>(records: &[VerifyRecord], mut out: W) -> Result<()> {
    let rows: Vec<Row> = records.iter().map(Row::from).collect();
    serde_json::to_writer_pretty(&mut out, &rows)?;
    out.write_all(b"\n")?;
    Ok(())
}

pub fn write_records<W: Write>(records: &[VerifyRecord], format: Format, out: W) -> Result<()> {
    match format {
        Format::Csv => write_csv(records, out),
        Format::Json => write_json(records, out),
    }
}
