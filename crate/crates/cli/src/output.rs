//! Deterministic output: C-style `%.17g` float formatting, self-describing
//! CSV documents, and atomic file writes.

use std::fs;
use std::io::{self, Write};
use std::path::Path;

/// Format like C's `printf("%.17g", v)`: 17 significant digits, fixed
/// notation for decimal exponents in [-4, 17), trailing fractional zeros
/// trimmed, two-digit-minimum exponent field otherwise.
pub fn g17(v: f64) -> String {
    if v.is_nan() {
        return "nan".into();
    }
    if v.is_infinite() {
        return if v < 0.0 { "-inf".into() } else { "inf".into() };
    }
    if v == 0.0 {
        return if v.is_sign_negative() {
            "-0".into()
        } else {
            "0".into()
        };
    }
    let neg = v < 0.0;
    let s = format!("{:.16e}", v.abs());
    let (mant, exp) = s.split_once('e').expect("exponential form");
    let exp: i32 = exp.parse().expect("exponent parses");
    let digits: String = mant.chars().filter(|c| c.is_ascii_digit()).collect();
    debug_assert_eq!(digits.len(), 17);

    let body = if (-4..17).contains(&exp) {
        if exp >= 0 {
            let split = (exp + 1) as usize;
            let int_part = &digits[..split];
            let frac = digits[split..].trim_end_matches('0');
            if frac.is_empty() {
                int_part.to_string()
            } else {
                format!("{int_part}.{frac}")
            }
        } else {
            let frac = digits.trim_end_matches('0');
            format!("0.{}{}", "0".repeat((-exp - 1) as usize), frac)
        }
    } else {
        let head = &digits[..1];
        let tail = digits[1..].trim_end_matches('0');
        let mant = if tail.is_empty() {
            head.to_string()
        } else {
            format!("{head}.{tail}")
        };
        format!("{mant}e{}{:02}", if exp < 0 { '-' } else { '+' }, exp.abs())
    };
    if neg {
        format!("-{body}")
    } else {
        body
    }
}

/// A CSV file with `#`-prefixed metadata lines, a header row, and
/// `%.17g`-formatted data rows (LF newlines, UTF-8).
pub struct CsvDoc {
    meta: Vec<(String, String)>,
    columns: Vec<String>,
    rows: Vec<Vec<f64>>,
}

impl CsvDoc {
    pub fn new(command: &str) -> Self {
        let mut doc = CsvDoc {
            meta: Vec::new(),
            columns: Vec::new(),
            rows: Vec::new(),
        };
        doc.meta(
            "generator",
            format!("partnerpot {}", env!("CARGO_PKG_VERSION")),
        );
        doc.meta("command", command);
        doc
    }

    pub fn meta(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.meta.push((key.to_string(), value.to_string()));
        self
    }

    pub fn meta_f64(&mut self, key: &str, value: f64) -> &mut Self {
        self.meta(key, g17(value))
    }

    pub fn columns<I: IntoIterator<Item = S>, S: ToString>(&mut self, cols: I) -> &mut Self {
        self.columns = cols.into_iter().map(|c| c.to_string()).collect();
        self
    }

    pub fn row(&mut self, row: Vec<f64>) -> &mut Self {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
        self
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.meta {
            out.push_str(&format!("# {k} = {v}\n"));
        }
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(|&v| g17(v)).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }
}

/// Write via a temp file in the same directory plus rename.
pub fn write_atomic(path: &Path, content: &str) -> io::Result<()> {
    let tmp = path.with_extension("tmp-partial");
    {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(content.as_bytes())?;
        f.sync_all()?;
    }
    fs::rename(&tmp, path)
}

/// Write to the given path atomically, or to stdout when no path is given.
pub fn emit(out: Option<&Path>, content: &str) -> io::Result<()> {
    match out {
        Some(path) => write_atomic(path, content),
        None => io::stdout().write_all(content.as_bytes()),
    }
}
