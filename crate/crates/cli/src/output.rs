//! Records and their human, JSON and CSV renderings.

use clap::ValueEnum;
use serde_json::{Map, Number};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Int(i64),
    Float(f64),
    Text(String),
    Bool(bool),
    Null,
}

impl From<i64> for Value {
    fn from(v: i64) -> Self {
        Value::Int(v)
    }
}

impl From<u32> for Value {
    fn from(v: u32) -> Self {
        Value::Int(v as i64)
    }
}

impl From<f64> for Value {
    fn from(v: f64) -> Self {
        Value::Float(v)
    }
}

impl From<bool> for Value {
    fn from(v: bool) -> Self {
        Value::Bool(v)
    }
}

impl From<&str> for Value {
    fn from(v: &str) -> Self {
        Value::Text(v.to_string())
    }
}

impl From<String> for Value {
    fn from(v: String) -> Self {
        Value::Text(v)
    }
}

impl<T: Into<Value>> From<Option<T>> for Value {
    fn from(v: Option<T>) -> Self {
        v.map_or(Value::Null, Into::into)
    }
}

/// Ordered field list.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Record {
    fields: Vec<(String, Value)>,
}

impl Record {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, key: impl Into<String>, value: impl Into<Value>) -> Self {
        self.push(key, value);
        self
    }

    pub fn push(&mut self, key: impl Into<String>, value: impl Into<Value>) {
        self.fields.push((key.into(), value.into()));
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.fields.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn keys(&self) -> impl Iterator<Item = &str> {
        self.fields.iter().map(|(k, _)| k.as_str())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Document {
    pub command: String,
    pub records: Vec<Record>,
}

impl Document {
    pub fn new(command: impl Into<String>, records: Vec<Record>) -> Self {
        Document {
            command: command.into(),
            records,
        }
    }
}

/// Fixed-point text with `digits` decimals, ties to even. A rounded zero
/// never carries a minus sign.
pub fn format_float(x: f64, digits: usize) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    let text = format!("{x:.digits$}");
    match text.strip_prefix('-') {
        Some(rest) if rest.chars().all(|c| c == '0' || c == '.') => rest.to_string(),
        _ => text,
    }
}

fn cell(value: &Value, digits: usize) -> String {
    match value {
        Value::Int(v) => v.to_string(),
        Value::Float(v) => format_float(*v, digits),
        Value::Text(s) => s.clone(),
        Value::Bool(b) => b.to_string(),
        Value::Null => String::new(),
    }
}

fn json_value(value: &Value, digits: usize) -> serde_json::Value {
    match value {
        Value::Int(v) => (*v).into(),
        Value::Float(v) => format_float(*v, digits)
            .parse::<f64>()
            .ok()
            .and_then(Number::from_f64)
            .map_or(serde_json::Value::Null, serde_json::Value::Number),
        Value::Text(s) => s.clone().into(),
        Value::Bool(b) => (*b).into(),
        Value::Null => serde_json::Value::Null,
    }
}

fn render_json(doc: &Document, digits: usize) -> String {
    let records: Vec<serde_json::Value> = doc
        .records
        .iter()
        .map(|r| {
            let map: Map<String, serde_json::Value> =
                r.fields.iter().map(|(k, v)| (k.clone(), json_value(v, digits))).collect();
            serde_json::Value::Object(map)
        })
        .collect();
    let mut top = Map::new();
    top.insert("command".into(), doc.command.clone().into());
    top.insert("records".into(), records.into());
    let mut text = serde_json::to_string_pretty(&serde_json::Value::Object(top)).expect("json values serialize");
    text.push('\n');
    text
}

fn render_csv(doc: &Document, digits: usize) -> Result<String, csv::Error> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    let header: Vec<&str> = doc.records.first().map(|r| r.keys().collect()).unwrap_or_default();
    writer.write_record(&header)?;
    for record in &doc.records {
        let row: Vec<String> = header
            .iter()
            .map(|k| record.get(k).map(|v| cell(v, digits)).unwrap_or_default())
            .collect();
        writer.write_record(&row)?;
    }
    let bytes = writer.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn render_human(doc: &Document, digits: usize) -> String {
    let mut out = String::new();
    if let [record] = doc.records.as_slice() {
        let width = record.keys().map(str::len).max().unwrap_or(0);
        for (k, v) in &record.fields {
            out.push_str(&format!("{k:<width$}  {}\n", cell(v, digits)));
        }
        return out;
    }
    let Some(first) = doc.records.first() else {
        return out;
    };
    let header: Vec<&str> = first.keys().collect();
    let rows: Vec<Vec<String>> = doc
        .records
        .iter()
        .map(|r| header.iter().map(|k| r.get(k).map(|v| cell(v, digits)).unwrap_or_default()).collect())
        .collect();
    let widths: Vec<usize> = header
        .iter()
        .enumerate()
        .map(|(i, h)| rows.iter().map(|r| r[i].len()).chain([h.len()]).max().unwrap_or(0))
        .collect();
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    out.push_str(&line(header.clone()));
    for row in &rows {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
    }
    out
}

pub fn render(doc: &Document, format: Format, digits: usize) -> Result<String, csv::Error> {
    match format {
        Format::Human => Ok(render_human(doc, digits)),
        Format::Json => Ok(render_json(doc, digits)),
        Format::Csv => render_csv(doc, digits),
    }
}
