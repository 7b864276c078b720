//! Fixed, locale-free number formatting and document writers.

use crate::error::CliError;
use std::io::Write;
use std::path::Path;

/// Nine significant digits in scientific notation, '.' decimal separator.
pub fn sig9(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        // normalise −0 so repeated runs never differ by a sign
        return "0.00000000e0".into();
    }
    format!("{x:.8e}")
}

/// Value rounded to nine significant digits, for JSON documents.
pub fn round9(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return if x == 0.0 { 0.0 } else { x };
    }
    sig9(x).parse().expect("formatted float parses")
}

/// CSV document builder with a mandatory header and '\n' line endings.
pub struct CsvDoc {
    writer: csv::Writer<Vec<u8>>,
}

impl CsvDoc {
    pub fn new(header: &[&str]) -> Self {
        let mut writer = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
        writer.write_record(header).expect("in-memory write");
        Self { writer }
    }

    pub fn row<I, S>(&mut self, fields: I)
    where
        I: IntoIterator<Item = S>,
        S: AsRef<[u8]>,
    {
        self.writer.write_record(fields).expect("in-memory write");
    }

    pub fn numbers(&mut self, values: &[f64]) {
        self.row(values.iter().map(|&v| sig9(v)));
    }

    pub fn into_bytes(self) -> Vec<u8> {
        self.writer.into_inner().expect("in-memory flush")
    }
}

pub fn json_bytes(value: &serde_json::Value) -> Vec<u8> {
    let mut out = serde_json::to_vec_pretty(value).expect("JSON serialisation");
    out.push(b'\n');
    out
}

/// Write a finished document to `path`, or to stdout when no path is given.
pub fn emit(bytes: &[u8], path: Option<&Path>) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, bytes).map_err(|source| CliError::Io { path: p.to_path_buf(), source }),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(bytes)
                .and_then(|_| out.flush())
                .map_err(|source| CliError::Io { path: "<stdout>".into(), source })
        }
    }
}

/// Companion gnuplot script for a CSV file: line plots of `columns` against
/// column 1, or a surface of column `columns[0]` over columns 1 and 2.
pub fn gnuplot_script(csv_path: &Path, title: &str, columns: &[(usize, &str)], surface: bool) -> String {
    let data = csv_path.display();
    let mut s = String::new();
    s.push_str("set datafile separator ','\n");
    s.push_str(&format!("set title '{title} (a.u.)*'\n"));
    if surface {
        let (c, name) = columns[0];
        s.push_str("set pm3d map\n");
        s.push_str(&format!("splot '{data}' every ::1 using 1:2:{c} with pm3d title '{name}'\n"));
    } else {
        let plots: Vec<String> = columns
            .iter()
            .map(|(c, name)| format!("'{data}' every ::1 using 1:{c} with lines title '{name}'"))
            .collect();
        s.push_str(&format!("plot {}\n", plots.join(", \\\n     ")));
    }
    s
}
