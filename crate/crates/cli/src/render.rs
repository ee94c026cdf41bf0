//! Text, JSON-lines and CSV rendering through one sink.
//!
//! JSON objects keep field order. Integers beyond 2^53 in magnitude and
//! non-integral rationals are emitted as strings so that no consumer has to
//! parse them into a float.

use std::fmt::Write as _;
use std::io::{self, IsTerminal, Write};

use num_traits::ToPrimitive;
use serde_json::Value;
use sextic_thue::{Int, Rat};

use crate::args::Format;

const SAFE_INT: i64 = 1 << 53;

#[derive(Clone, Debug)]
pub enum Cell {
    Int(Int),
    Rat(Rat),
    Str(String),
    Bool(bool),
    List(Vec<Cell>),
    Null,
}

impl Cell {
    pub fn int(v: impl Into<Int>) -> Cell {
        Cell::Int(v.into())
    }

    pub fn str(s: impl Into<String>) -> Cell {
        Cell::Str(s.into())
    }

    fn json(&self) -> Value {
        match self {
            Cell::Int(v) => match v.to_i64() {
                Some(i) if i.abs() <= SAFE_INT => Value::from(i),
                _ => Value::from(v.to_string()),
            },
            Cell::Rat(q) if q.is_integer() => Cell::Int(q.to_integer()).json(),
            Cell::Rat(q) => Value::from(q.to_string()),
            Cell::Str(s) => Value::from(s.as_str()),
            Cell::Bool(b) => Value::from(*b),
            Cell::List(items) => Value::Array(items.iter().map(Cell::json).collect()),
            Cell::Null => Value::Null,
        }
    }

    fn plain(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Rat(q) => q.to_string(),
            Cell::Str(s) => s.clone(),
            Cell::Bool(b) => b.to_string(),
            Cell::List(items) => items.iter().map(Cell::plain).collect::<Vec<_>>().join(" "),
            Cell::Null => String::new(),
        }
    }
}

pub type Record = Vec<(&'static str, Cell)>;

pub fn json_line(rec: &Record) -> String {
    let mut s = String::from("{");
    for (i, (k, v)) in rec.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        let _ = write!(s, "{}:{}", Value::from(*k), v.json());
    }
    s.push('}');
    s
}

/// Whether PASS/FAIL markers may be colored.
pub fn use_color(to_file: bool) -> bool {
    !to_file && std::env::var_os("NO_COLOR").is_none() && io::stdout().is_terminal()
}

pub fn status(passed: bool, color: bool) -> String {
    match (passed, color) {
        (true, true) => "\x1b[32mPASS\x1b[0m".into(),
        (false, true) => "\x1b[31mFAIL\x1b[0m".into(),
        (true, false) => "PASS".into(),
        (false, false) => "FAIL".into(),
    }
}

fn csv_line<T: AsRef<[u8]>>(fields: &[T]) -> io::Result<Vec<u8>> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(fields)?;
    w.into_inner().map_err(|e| io::Error::other(e.to_string()))
}

pub struct Sink<'w> {
    format: Format,
    out: Box<dyn Write + 'w>,
    columns: &'static [&'static str],
    header_written: bool,
    pub color: bool,
}

impl<'w> Sink<'w> {
    /// `columns` fixes the CSV header; rows are written in that order.
    pub fn new(format: Format, out: Box<dyn Write + 'w>, columns: &'static [&'static str], color: bool) -> Self {
        Sink { format, out, columns, header_written: false, color }
    }

    /// A table row.
    pub fn row(&mut self, rec: &Record, text: &str) -> io::Result<()> {
        match self.format {
            Format::Text => writeln!(self.out, "{text}"),
            Format::Json => writeln!(self.out, "{}", json_line(rec)),
            Format::Csv => {
                self.ensure_header()?;
                let values: Vec<String> = self
                    .columns
                    .iter()
                    .map(|c| rec.iter().find(|(k, _)| k == c).map(|(_, v)| v.plain()).unwrap_or_default())
                    .collect();
                let line = csv_line(&values)?;
                self.out.write_all(&line)
            }
        }
    }

    /// A table row with no text-mode line.
    pub fn row_silent(&mut self, rec: &Record) -> io::Result<()> {
        if self.format == Format::Text {
            return Ok(());
        }
        self.row(rec, "")
    }

    /// A record outside the table: printed in text and JSON, sent to stderr
    /// in CSV mode so the table stays rectangular.
    pub fn summary(&mut self, rec: &Record, text: &str) -> io::Result<()> {
        match self.format {
            Format::Text => writeln!(self.out, "{text}"),
            Format::Json => writeln!(self.out, "{}", json_line(rec)),
            Format::Csv => {
                self.ensure_header()?;
                eprintln!("{text}");
                Ok(())
            }
        }
    }

    /// Emit the CSV header even when no row follows.
    fn ensure_header(&mut self) -> io::Result<()> {
        if self.format == Format::Csv && !self.header_written {
            self.header_written = true;
            let line = csv_line(self.columns)?;
            self.out.write_all(&line)?;
        }
        Ok(())
    }

    pub fn finish(mut self) -> io::Result<()> {
        self.ensure_header()?;
        self.out.flush()
    }
}
