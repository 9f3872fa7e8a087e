//! CSV tables with `#` comment lines ahead of the column header.

use std::io::Write;

/// Rows of one experiment plus a count of rows that broke an invariant.
#[derive(Debug, Clone)]
pub struct Table {
    title: String,
    notes: Vec<String>,
    header: Vec<&'static str>,
    rows: Vec<Vec<String>>,
    violations: usize,
}

impl Table {
    pub fn new(title: impl Into<String>, header: &[&'static str]) -> Self {
        Table {
            title: title.into(),
            notes: Vec::new(),
            header: header.to_vec(),
            rows: Vec::new(),
            violations: 0,
        }
    }

    /// Extra `# key=value` style line below the title.
    pub fn note(&mut self, line: impl Into<String>) {
        self.notes.push(line.into());
    }

    pub fn row(&mut self, cells: Vec<String>) {
        debug_assert_eq!(cells.len(), self.header.len());
        self.rows.push(cells);
    }

    /// Records a row and marks it as an invariant violation when `ok` is false.
    pub fn checked_row(&mut self, ok: bool, cells: Vec<String>) {
        if !ok {
            self.violations += 1;
        }
        self.row(cells);
    }

    pub fn violations(&self) -> usize {
        self.violations
    }

    pub fn rows(&self) -> &[Vec<String>] {
        &self.rows
    }

    pub fn to_bytes(&self) -> anyhow::Result<Vec<u8>> {
        let mut out = Vec::new();
        writeln!(out, "# {}", self.title)?;
        for n in &self.notes {
            writeln!(out, "# {n}")?;
        }
        let mut w = csv::Writer::from_writer(out);
        w.write_record(&self.header)?;
        for r in &self.rows {
            w.write_record(r)?;
        }
        Ok(w.into_inner()?)
    }
}

/// Fixed six-decimal rendering so output is byte-stable.
pub fn real(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.6}")
    } else {
        x.to_string()
    }
}

pub fn flag(b: bool) -> String {
    b.to_string()
}

/// `a;b;c`.
pub fn joined<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(";")
}
