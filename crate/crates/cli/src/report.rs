//! JSON and CSV output of flat records.

use serde::Serialize;
use serde_json::{Map, Value};

use crate::error::{CliError, CliResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

pub type Row = Map<String, Value>;

pub fn row<T: Serialize>(value: &T) -> CliResult<Row> {
    match serde_json::to_value(value)? {
        Value::Object(m) => Ok(m),
        other => Err(CliError::Usage(format!("not a record: {other}"))),
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Renders rows; CSV columns follow the keys of the first row.
pub fn render(rows: &[Row], format: Format) -> CliResult<String> {
    match format {
        Format::Json => Ok(serde_json::to_string_pretty(rows)? + "\n"),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(vec![]);
            if let Some(first) = rows.first() {
                let keys: Vec<&String> = first.keys().collect();
                w.write_record(&keys)?;
                for r in rows {
                    w.write_record(keys.iter().map(|k| r.get(*k).map(cell).unwrap_or_default()))?;
                }
            }
            let bytes = w.into_inner().map_err(|e| CliError::Usage(e.to_string()))?;
            Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
        }
    }
}
