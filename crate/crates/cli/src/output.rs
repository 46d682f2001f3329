use serde_json::{json, Value};

use circtrans::IntMatrix;

use crate::config::{Format, RunConfig, SCHEMA_VERSION};

/// One command's result in all three renderings.
#[derive(Debug, Default)]
pub struct Doc {
    pub result: Value,
    pub summary: Vec<(String, String)>,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Doc {
    pub fn new(result: Value) -> Self {
        Doc { result, ..Default::default() }
    }

    pub fn line(mut self, key: &str, value: impl ToString) -> Self {
        self.summary.push((key.to_string(), value.to_string()));
        self
    }

    pub fn table(mut self, header: &[&str], rows: Vec<Vec<String>>) -> Self {
        self.header = header.iter().map(|s| s.to_string()).collect();
        self.rows = rows;
        self
    }

    pub fn render(&self, cfg: &RunConfig) -> String {
        match cfg.format {
            Format::Json => {
                let doc = json!({ "schema": SCHEMA_VERSION, "config": cfg, "result": self.result });
                let mut s = serde_json::to_string_pretty(&doc).expect("values serialize");
                s.push('\n');
                s
            }
            Format::Tsv => {
                let mut out = String::new();
                if self.header.is_empty() {
                    for (k, v) in &self.summary {
                        out.push_str(&format!("{k}\t{v}\n"));
                    }
                } else {
                    out.push_str(&self.header.join("\t"));
                    out.push('\n');
                    for r in &self.rows {
                        out.push_str(&r.join("\t"));
                        out.push('\n');
                    }
                }
                out
            }
            Format::Text => {
                let mut out = String::new();
                let width = self.summary.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
                for (k, v) in &self.summary {
                    out.push_str(&format!("{k:<width$}  {v}\n"));
                }
                if !self.header.is_empty() {
                    if !out.is_empty() {
                        out.push('\n');
                    }
                    let cols = self.header.len();
                    let widths: Vec<usize> = (0..cols)
                        .map(|c| {
                            std::iter::once(&self.header[c])
                                .chain(self.rows.iter().filter_map(|r| r.get(c)))
                                .map(|s| s.chars().count())
                                .max()
                                .unwrap_or(0)
                        })
                        .collect();
                    let fmt_row = |r: &[String]| {
                        let cells: Vec<String> = r.iter().zip(&widths).map(|(s, w)| format!("{s:<w$}")).collect();
                        cells.join("  ").trim_end().to_string()
                    };
                    out.push_str(&fmt_row(&self.header));
                    out.push('\n');
                    for r in &self.rows {
                        out.push_str(&fmt_row(r));
                        out.push('\n');
                    }
                }
                out
            }
        }
    }
}

pub fn matrix_rows(m: &IntMatrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(|e| e.to_string()).collect()).collect()
}

pub fn residues_of(mask: u64) -> Vec<usize> {
    circtrans::circulant::residues(mask).collect()
}

pub fn set_string(mask: u64) -> String {
    let r: Vec<String> = residues_of(mask).iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", r.join(","))
}
