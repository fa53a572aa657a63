//! The emitted document: named summary values and named tables, every
//! cell an exact string.

use std::fmt::Write;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

#[derive(Clone, Debug, Default)]
pub struct Fields(pub Vec<(String, String)>);

impl Serialize for Fields {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Table {
    pub name: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(name: &str, columns: &[&str]) -> Self {
        Table { name: name.into(), columns: columns.iter().map(|c| c.to_string()).collect(), rows: Vec::new() }
    }

    pub fn row<I, T>(&mut self, cells: I)
    where
        I: IntoIterator<Item = T>,
        T: ToString,
    {
        let row: Vec<String> = cells.into_iter().map(|c| c.to_string()).collect();
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Document {
    pub command: String,
    pub parameters: Fields,
    pub status: Status,
    pub summary: Fields,
    pub tables: Vec<Table>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Failed,
}

impl Document {
    pub fn new(command: &str) -> Self {
        Document { command: command.into(), parameters: Fields::default(), status: Status::Ok, summary: Fields::default(), tables: Vec::new() }
    }

    pub fn param(&mut self, key: &str, value: impl ToString) {
        self.parameters.0.push((key.into(), value.to_string()));
    }

    pub fn summary(&mut self, key: &str, value: impl ToString) {
        self.summary.0.push((key.into(), value.to_string()));
    }

    /// Summary lines first as `key: value`, then each table as a header
    /// row and tab-separated rows, tables separated by a `# name` line.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.summary.0 {
            let _ = writeln!(out, "{k}: {v}");
        }
        for t in &self.tables {
            let _ = writeln!(out, "# {}", t.name);
            let _ = writeln!(out, "{}", t.columns.join("\t"));
            for r in &t.rows {
                let _ = writeln!(out, "{}", r.join("\t"));
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }
}
