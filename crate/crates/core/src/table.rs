//! CSV and `key = value` emission with a fixed, locale-independent number
//! format (scientific notation, 9 significant digits).

use std::fmt::Write as _;

use crate::ensemble::Depletion;

pub const NO_DEPLETION: &str = "no_depletion";

pub fn fmt_num(v: f64) -> String {
    format!("{v:.8e}")
}

pub fn fmt_depletion(d: Depletion) -> String {
    match d {
        Depletion::After(t) => fmt_num(t),
        Depletion::Never => NO_DEPLETION.to_string(),
    }
}

/// A CSV table whose header names each column with its unit.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<S: Into<String>>(header: impl IntoIterator<Item = S>) -> Self {
        Table {
            header: header.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.header.join(","));
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }

    /// Drops the named column; used to compare tables up to metadata.
    pub fn without_column(&self, name: &str) -> Table {
        let Some(idx) = self.header.iter().position(|h| h == name) else {
            return self.clone();
        };
        let strip = |row: &Vec<String>| {
            row.iter()
                .enumerate()
                .filter(|(i, _)| *i != idx)
                .map(|(_, v)| v.clone())
                .collect::<Vec<_>>()
        };
        Table {
            header: strip(&self.header),
            rows: self.rows.iter().map(strip).collect(),
        }
    }

    pub fn column(&self, name: &str) -> Option<Vec<&str>> {
        let idx = self.header.iter().position(|h| h == name)?;
        Some(self.rows.iter().map(|r| r[idx].as_str()).collect())
    }
}

/// Ordered `key = value` record.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Record(pub Vec<(String, String)>);

impl Record {
    pub fn push(&mut self, key: &str, value: impl Into<String>) {
        self.0.push((key.to_string(), value.into()));
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.0
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.0 {
            let _ = writeln!(out, "{k} = {v}");
        }
        out
    }
}
