use encone_core::{Bipartition, IntPoly, Partition};
use serde_json::{json, Value};

use crate::config::Format;
use crate::error::CliError;

/// A command result held in every form it can be written in.
#[derive(Clone, Debug)]
pub struct Output {
    pub json: Value,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub dot: Option<String>,
}

impl Output {
    pub fn render(&self, format: Format) -> Result<String, CliError> {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("values serialize");
                s.push('\n');
                Ok(s)
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&self.header)?;
                for r in &self.rows {
                    w.write_record(r)?;
                }
                let bytes = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
                Ok(String::from_utf8(bytes).expect("csv of utf-8 fields"))
            }
            Format::Dot => self
                .dot
                .clone()
                .ok_or_else(|| CliError::Usage("dot output is only available for hasse".into())),
        }
    }
}

/// Ascending coefficients; numbers when they fit in `i64`, decimal strings
/// otherwise.
pub fn poly_json(p: &IntPoly) -> Value {
    Value::Array(
        p.coeffs()
            .iter()
            .map(|c| i64::try_from(c).map_or_else(|_| Value::String(c.to_string()), Value::from))
            .collect(),
    )
}

pub fn poly_cell(p: &IntPoly) -> String {
    p.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

pub fn partition_json(p: &Partition) -> Value {
    json!(p.parts())
}

pub fn partition_cell(p: &Partition) -> String {
    p.parts().iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

pub fn bip_json(b: &Bipartition) -> Value {
    json!({ "mu": b.mu().parts(), "nu": b.nu().parts() })
}
