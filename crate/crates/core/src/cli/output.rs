use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};

use crate::curve::PhaseCurve;

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    /// Exact integer, possibly wider than 64 bits.
    Int(String),
    Text(String),
    Empty,
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Num(v)
    }
}

impl From<u64> for Cell {
    fn from(v: u64) -> Self {
        Cell::Int(v.to_string())
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v.to_string())
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Text(v.to_string())
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_string())
    }
}

impl From<String> for Cell {
    fn from(v: String) -> Self {
        Cell::Text(v)
    }
}

/// Shortest round-trip form, scientific with 17 significant digits outside [1e-5, 1e6).
pub fn format_number(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return if x.is_nan() { "nan".into() } else if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let a = x.abs();
    if a >= 1e6 || a < 1e-5 {
        format!("{x:.16e}")
    } else {
        format!("{x}")
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub name: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
    pub meta: BTreeMap<String, String>,
}

impl Table {
    pub fn new(name: &str, columns: &[&str]) -> Self {
        Table {
            name: name.to_string(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
            meta: BTreeMap::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn meta(&mut self, key: &str, value: impl ToString) {
        self.meta.insert(key.to_string(), value.to_string());
    }

    pub fn from_curve(curve: &PhaseCurve) -> Self {
        let mut cols = vec![curve.x_label.as_str()];
        cols.extend(curve.columns.iter().map(|c| c.as_str()));
        let mut t = Table::new(&curve.name, &cols);
        for p in &curve.points {
            let mut row = vec![Cell::Num(p.x)];
            row.extend(p.values.iter().map(|&v| Cell::Num(v)));
            t.push(row);
        }
        t.meta = curve.metadata.clone();
        if !curve.failures.is_empty() {
            t.meta("failures", curve.failures.len());
            for (i, f) in curve.failures.iter().enumerate() {
                t.meta(&format!("failure_{i}"), format!("{}: {}", format_number(f.x), f.reason));
            }
        }
        t
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        let header: Vec<String> = self.columns.iter().map(|c| csv_field(c)).collect();
        out.push_str(&header.join(","));
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row
                .iter()
                .map(|c| match c {
                    Cell::Num(v) => format_number(*v),
                    Cell::Int(s) => s.clone(),
                    Cell::Text(s) => csv_field(s),
                    Cell::Empty => String::new(),
                })
                .collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json_value(&self) -> Value {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let mut obj = serde_json::Map::new();
                for (c, cell) in self.columns.iter().zip(row) {
                    let v = match cell {
                        Cell::Num(x) if x.is_finite() => json!(x),
                        Cell::Num(x) => json!(format_number(*x)),
                        Cell::Int(s) => s.parse::<u64>().map(|n| json!(n)).unwrap_or_else(|_| json!(s)),
                        Cell::Text(s) => json!(s),
                        Cell::Empty => Value::Null,
                    };
                    obj.insert(c.clone(), v);
                }
                Value::Object(obj)
            })
            .collect();
        json!({ "name": self.name, "columns": self.columns, "rows": rows, "meta": self.meta })
    }

    /// gnuplot script plotting every numeric column against the first.
    pub fn gnuplot_script(&self, data_file: &str) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "set datafile separator ','");
        let _ = writeln!(s, "set key autotitle columnhead");
        let _ = writeln!(s, "set xlabel '{}'", self.columns.first().map(String::as_str).unwrap_or("x"));
        let numeric: Vec<usize> = (1..self.columns.len())
            .filter(|&j| self.rows.iter().all(|r| matches!(r[j], Cell::Num(_) | Cell::Int(_) | Cell::Empty)))
            .collect();
        let parts: Vec<String> = numeric
            .iter()
            .map(|j| format!("'{data_file}' using 1:{} with linespoints", j + 1))
            .collect();
        if !parts.is_empty() {
            let _ = writeln!(s, "plot {}", parts.join(", \\\n     "));
        }
        s
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Manifest {
    pub program: &'static str,
    pub version: &'static str,
    pub command: String,
    pub config_sha256: String,
    pub anchors: Vec<String>,
}

impl Manifest {
    pub fn line(&self) -> String {
        serde_json::to_string(self).expect("manifest serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numbers_round_trip() {
        for x in [0.1, 1.0 / 3.0, 2.5e-7, 12345678.9, -0.0, 1e300, 5e-324, 0.29, 999999.99999] {
            let s = format_number(x);
            assert_eq!(s.parse::<f64>().unwrap(), x, "{s}");
        }
        assert_eq!(format_number(2.0e6), "2.0000000000000000e6");
        assert_eq!(format_number(0.5), "0.5");
    }

    #[test]
    fn csv_layout() {
        let mut t = Table::new("t", &["a", "b,c"]);
        t.push(vec![Cell::Num(1.5), Cell::Text("x,y".into())]);
        t.push(vec![Cell::Int("123456789012345678901234567890".into()), Cell::Empty]);
        assert_eq!(t.to_csv(), "a,\"b,c\"\n1.5,\"x,y\"\n123456789012345678901234567890,\n");
        let j = t.to_json_value();
        assert_eq!(j["rows"][0]["a"], json!(1.5));
    }
}
