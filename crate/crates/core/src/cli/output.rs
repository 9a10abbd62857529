//! Rendering of command reports. Every report is built once as a JSON
//! object; the table form is derived from it, so both always carry the
//! same values.
//!
//! Table form: the scalar fields of the report become one `key=value` line;
//! each field holding a list of records becomes an aligned table under a
//! `key:` heading.

use serde_json::{Map, Value};

use crate::exactmath::{format_rational, Rational, RationalPolynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Table,
}

pub fn rational(r: &Rational) -> Value {
    Value::String(format_rational(r))
}

pub fn coefficients(p: &RationalPolynomial) -> Value {
    Value::Array(p.coeffs().iter().map(rational).collect())
}

pub fn render(report: &Map<String, Value>, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string(report).expect("reports contain only JSON values");
            s.push('\n');
            s
        }
        Format::Table => table(report),
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::String(s) if s.is_empty() || s.contains(char::is_whitespace) => {
            serde_json::to_string(s).expect("string")
        }
        Value::String(s) => s.clone(),
        Value::Array(items) if items.is_empty() => "-".into(),
        Value::Array(items) => items.iter().map(cell).collect::<Vec<_>>().join(","),
        other => other.to_string(),
    }
}

fn is_record_list(v: &Value) -> bool {
    matches!(v, Value::Array(items) if !items.is_empty() && items.iter().all(Value::is_object))
}

fn table(report: &Map<String, Value>) -> String {
    let mut out = String::new();
    let line: Vec<String> = report
        .iter()
        .filter(|(_, v)| !is_record_list(v))
        .map(|(k, v)| format!("{k}={}", cell(v)))
        .collect();
    out.push_str(&line.join(" "));
    out.push('\n');
    for (key, value) in report.iter().filter(|(_, v)| is_record_list(v)) {
        let records: Vec<&Map<String, Value>> = value
            .as_array()
            .expect("record list")
            .iter()
            .filter_map(Value::as_object)
            .collect();
        let mut headers: Vec<&str> = Vec::new();
        for r in &records {
            for k in r.keys() {
                if !headers.contains(&k.as_str()) {
                    headers.push(k);
                }
            }
        }
        let rows: Vec<Vec<String>> = records
            .iter()
            .map(|r| headers.iter().map(|h| r.get(*h).map_or_else(|| "-".into(), cell)).collect())
            .collect();
        let widths: Vec<usize> = headers
            .iter()
            .enumerate()
            .map(|(c, h)| rows.iter().map(|r| r[c].chars().count()).chain([h.len()]).max().unwrap_or(0))
            .collect();
        let fmt_row = |cells: Vec<&str>| {
            let padded: Vec<String> = cells
                .iter()
                .zip(&widths)
                .map(|(c, w)| format!("{c:<w$}"))
                .collect();
            padded.join("  ").trim_end().to_string()
        };
        out.push('\n');
        out.push_str(key);
        out.push_str(":\n");
        out.push_str(&fmt_row(headers.clone()));
        out.push('\n');
        for r in &rows {
            out.push_str(&fmt_row(r.iter().map(String::as_str).collect()));
            out.push('\n');
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn table_layout() {
        let report = json!({
            "class": "L",
            "i": 0,
            "q": ["0", "1", "1"],
            "low": [],
            "note": "two words",
            "rows": [{"m": -1, "holds": false}, {"m": 10, "holds": true}]
        });
        let text = render(report.as_object().unwrap(), Format::Table);
        assert_eq!(
            text,
            "class=L i=0 q=0,1,1 low=- note=\"two words\"\n\nrows:\nm   holds\n-1  false\n10  true\n"
        );
    }

    #[test]
    fn json_is_compact_and_ordered() {
        let report = json!({"m": 1, "g": 2, "chi": "1/2"});
        assert_eq!(render(report.as_object().unwrap(), Format::Json), "{\"m\":1,\"g\":2,\"chi\":\"1/2\"}\n");
    }
}
