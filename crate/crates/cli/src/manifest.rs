//! Run manifests: the machine-readable envelope around a batch of claim
//! reports (or computed values), with table / JSON / CSV rendering.
//!
//! JSON layout is schema-stable. Each verification instance serializes as
//! `{claim, params, modulus?, lhs, rhs, pass}`; the envelope adds `command`,
//! `parameters`, `version`, `summary`, and `wall_ms`. Identical invocations
//! produce byte-identical JSON except for `wall_ms`, which consumers must
//! exclude from golden comparisons.

use clap::ValueEnum;
use serde::Serialize;
use serde_json::{Map, Value};
use usequence_core::ClaimReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Serialize)]
pub struct ReportRow {
    pub claim: String,
    pub params: Map<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub modulus: Option<String>,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
}

impl From<ClaimReport> for ReportRow {
    fn from(r: ClaimReport) -> Self {
        let mut params = Map::new();
        for (key, value) in r.params {
            params.insert(key, Value::String(value));
        }
        ReportRow { claim: r.claim_id, params, modulus: r.modulus, lhs: r.lhs, rhs: r.rhs, pass: r.pass }
    }
}

#[derive(Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
}

#[derive(Serialize)]
pub struct RunManifest {
    pub command: String,
    pub parameters: Map<String, Value>,
    pub version: String,
    pub reports: Vec<ReportRow>,
    pub summary: Summary,
    pub wall_ms: u128,
}

impl RunManifest {
    pub fn new(
        command: &str,
        parameters: Vec<(String, String)>,
        reports: Vec<ClaimReport>,
        wall_ms: u128,
    ) -> Self {
        let mut pmap = Map::new();
        for (key, value) in parameters {
            pmap.insert(key, Value::String(value));
        }
        let rows: Vec<ReportRow> = reports.into_iter().map(ReportRow::from).collect();
        let pass = rows.iter().filter(|r| r.pass).count();
        let fail = rows.len() - pass;
        RunManifest {
            command: command.to_string(),
            parameters: pmap,
            version: env!("CARGO_PKG_VERSION").to_string(),
            reports: rows,
            summary: Summary { pass, fail },
            wall_ms,
        }
    }

    pub fn all_pass(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut text = serde_json::to_string_pretty(self).expect("manifest serializes");
                text.push('\n');
                text
            }
            Format::Csv => self.render_csv(),
            Format::Table => self.render_table(),
        }
    }

    fn render_csv(&self) -> String {
        let mut out = String::from("claim,params,lhs,rhs,pass\n");
        for row in &self.reports {
            let mut flat = flatten_params(&row.params);
            if let Some(m) = &row.modulus {
                if !flat.is_empty() {
                    flat.push(' ');
                }
                flat.push_str(&format!("mod={m}"));
            }
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                csv_field(&row.claim),
                csv_field(&flat),
                csv_field(&row.lhs),
                csv_field(&row.rhs),
                row.pass
            ));
        }
        out
    }

    fn render_table(&self) -> String {
        let header = ["claim", "params", "modulus", "lhs", "rhs", "pass"];
        let rows: Vec<[String; 6]> = self
            .reports
            .iter()
            .map(|r| {
                [
                    r.claim.clone(),
                    flatten_params(&r.params),
                    r.modulus.clone().unwrap_or_else(|| "-".to_string()),
                    r.lhs.clone(),
                    r.rhs.clone(),
                    if r.pass { "pass".to_string() } else { "FAIL".to_string() },
                ]
            })
            .collect();
        let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
        for row in &rows {
            for (w, cell) in widths.iter_mut().zip(row.iter()) {
                *w = (*w).max(cell.len());
            }
        }
        let mut out = String::new();
        let fmt_row = |cells: &[&str], widths: &[usize]| -> String {
            let mut line = String::new();
            for (i, (cell, w)) in cells.iter().zip(widths).enumerate() {
                if i > 0 {
                    line.push_str("  ");
                }
                line.push_str(&format!("{cell:<w$}"));
            }
            line.trim_end().to_string()
        };
        out.push_str(&fmt_row(&header, &widths));
        out.push('\n');
        for row in &rows {
            let cells: Vec<&str> = row.iter().map(String::as_str).collect();
            out.push_str(&fmt_row(&cells, &widths));
            out.push('\n');
        }
        out.push_str(&format!(
            "summary: {} pass, {} fail ({} ms)\n",
            self.summary.pass, self.summary.fail, self.wall_ms
        ));
        out
    }
}

/// Computed sequence values share the manifest envelope but carry an
/// index/value table instead of claim reports.
#[derive(Serialize)]
pub struct ComputeManifest {
    pub command: String,
    pub parameters: Map<String, Value>,
    pub version: String,
    pub values: Vec<ValueRow>,
    pub wall_ms: u128,
}

#[derive(Serialize)]
pub struct ValueRow {
    pub index: u64,
    pub value: String,
}

impl ComputeManifest {
    pub fn new(parameters: Vec<(String, String)>, values: Vec<(u64, String)>, wall_ms: u128) -> Self {
        let mut pmap = Map::new();
        for (key, value) in parameters {
            pmap.insert(key, Value::String(value));
        }
        ComputeManifest {
            command: "compute".to_string(),
            parameters: pmap,
            version: env!("CARGO_PKG_VERSION").to_string(),
            values: values.into_iter().map(|(index, value)| ValueRow { index, value }).collect(),
            wall_ms,
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut text = serde_json::to_string_pretty(self).expect("manifest serializes");
                text.push('\n');
                text
            }
            Format::Csv => {
                let mut out = String::from("index,value\n");
                for row in &self.values {
                    out.push_str(&format!("{},{}\n", row.index, csv_field(&row.value)));
                }
                out
            }
            Format::Table => {
                let idx_w = self
                    .values
                    .iter()
                    .map(|r| r.index.to_string().len())
                    .max()
                    .unwrap_or(5)
                    .max("index".len());
                let mut out = format!("{:>idx_w$}  value\n", "index");
                for row in &self.values {
                    out.push_str(&format!("{:>idx_w$}  {}\n", row.index, row.value));
                }
                out
            }
        }
    }
}

fn flatten_params(params: &Map<String, Value>) -> String {
    params
        .iter()
        .map(|(k, v)| match v {
            Value::String(s) => format!("{k}={s}"),
            other => format!("{k}={other}"),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use usequence_core::report::params;

    fn sample() -> RunManifest {
        let r1 = ClaimReport::new(
            "thm0.0",
            params([("p", "7".to_string()), ("k", "2".to_string())]),
            Some("7^2".to_string()),
            "1;2".to_string(),
            "1;2".to_string(),
            true,
        );
        let r2 = ClaimReport::new(
            "thm0.0",
            params([("p", "11".to_string())]),
            None,
            "3,4".to_string(),
            "5".to_string(),
            false,
        );
        RunManifest::new(
            "verify",
            vec![("claim".to_string(), "thm0.0".to_string())],
            vec![r1, r2],
            12,
        )
    }

    #[test]
    fn summary_counts_match_rows() {
        let m = sample();
        assert_eq!((m.summary.pass, m.summary.fail), (1, 1));
        assert!(!m.all_pass());
    }

    #[test]
    fn json_is_schema_stable() {
        let m = sample();
        let v: Value = serde_json::from_str(&m.render(Format::Json)).unwrap();
        let rows = v["reports"].as_array().unwrap();
        assert_eq!(rows[0]["claim"], "thm0.0");
        assert_eq!(rows[0]["params"]["p"], "7");
        assert_eq!(rows[0]["modulus"], "7^2");
        assert!(rows[1].get("modulus").is_none(), "absent modulus key omitted");
        assert_eq!(rows[1]["pass"], false);
        assert_eq!(v["summary"]["pass"], 1);
        let keys: Vec<&str> = v["reports"][0]
            .as_object()
            .unwrap()
            .keys()
            .map(String::as_str)
            .collect();
        assert_eq!(keys, ["claim", "params", "modulus", "lhs", "rhs", "pass"]);
    }

    #[test]
    fn csv_quotes_fields_with_commas() {
        let m = sample();
        let csv = m.render(Format::Csv);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "claim,params,lhs,rhs,pass");
        assert_eq!(lines[1], "thm0.0,p=7 k=2 mod=7^2,1;2,1;2,true");
        assert_eq!(lines[2], "thm0.0,p=11,\"3,4\",5,false");
    }

    #[test]
    fn table_lists_every_instance() {
        let m = sample();
        let table = m.render(Format::Table);
        assert!(table.contains("FAIL"));
        assert!(table.contains("summary: 1 pass, 1 fail"));
    }
}
