use std::io::{self, Write};

use clap::ValueEnum;
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

/// Flattens nested objects into dotted keys; arrays become JSON text.
fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    match v {
        Value::Object(m) => {
            for (k, v) in m {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&key, v, out);
            }
        }
        Value::String(s) => out.push((prefix.to_string(), s.clone())),
        Value::Null => out.push((prefix.to_string(), String::new())),
        other => out.push((prefix.to_string(), other.to_string())),
    }
}

fn rows(records: &[Value]) -> (Vec<String>, Vec<Vec<String>>) {
    let mut header: Vec<String> = Vec::new();
    let flat: Vec<Vec<(String, String)>> = records
        .iter()
        .map(|r| {
            let mut cells = Vec::new();
            flatten("", r, &mut cells);
            for (k, _) in &cells {
                if !header.contains(k) {
                    header.push(k.clone());
                }
            }
            cells
        })
        .collect();
    let body = flat
        .into_iter()
        .map(|cells| {
            header
                .iter()
                .map(|h| cells.iter().find(|(k, _)| k == h).map(|(_, v)| v.clone()).unwrap_or_default())
                .collect()
        })
        .collect();
    (header, body)
}

pub fn write_records(out: &mut impl Write, format: Format, meta: Option<&Value>, records: &[Value]) -> io::Result<()> {
    match format {
        Format::Json => {
            if let Some(m) = meta {
                writeln!(out, "{}", m)?;
            }
            for r in records {
                writeln!(out, "{}", r)?;
            }
        }
        Format::Csv => {
            if let Some(m) = meta {
                writeln!(out, "# {}", m)?;
            }
            let (header, body) = rows(records);
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(&header)?;
            for row in body {
                w.write_record(&row)?;
            }
            w.flush()?;
        }
        Format::Table => {
            if let Some(m) = meta {
                writeln!(out, "# {}", m)?;
            }
            let (header, body) = rows(records);
            let mut widths: Vec<usize> = header.iter().map(String::len).collect();
            for row in &body {
                for (w, c) in widths.iter_mut().zip(row) {
                    *w = (*w).max(c.len());
                }
            }
            let line = |cells: &[String]| {
                cells
                    .iter()
                    .zip(&widths)
                    .map(|(c, w)| format!("{c:<w$}"))
                    .collect::<Vec<_>>()
                    .join("  ")
                    .trim_end()
                    .to_string()
            };
            writeln!(out, "{}", line(&header))?;
            for row in &body {
                writeln!(out, "{}", line(row))?;
            }
        }
    }
    Ok(())
}

/// Single-line error record for stderr.
pub fn error_record(kind: &str, reason: &str) -> Value {
    let mut m = Map::new();
    m.insert("error".into(), Value::String(kind.into()));
    m.insert("reason".into(), Value::String(reason.replace('\n', " ").trim().to_string()));
    Value::Object(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn flattens_nested_records() {
        let (h, b) = rows(&[json!({"a": 1, "b": {"c": "x", "d": null}, "e": [1, 2]})]);
        assert_eq!(h, ["a", "b.c", "b.d", "e"]);
        assert_eq!(b[0], ["1", "x", "", "[1,2]"]);
    }

    #[test]
    fn csv_and_table_output() {
        let recs = [json!({"n": 1, "v": "1/1"}), json!({"n": 10, "v": "1225/768"})];
        let mut buf = Vec::new();
        write_records(&mut buf, Format::Csv, None, &recs).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "n,v\n1,1/1\n10,1225/768\n");
        let mut buf = Vec::new();
        write_records(&mut buf, Format::Table, None, &recs).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "n   v\n1   1/1\n10  1225/768\n");
    }

    #[test]
    fn error_records_are_single_line() {
        let e = error_record("usage", "bad\nflag ");
        assert_eq!(e.to_string(), r#"{"error":"usage","reason":"bad flag"}"#);
    }
}
