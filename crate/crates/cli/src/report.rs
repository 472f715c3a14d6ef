use std::io::Write;
use std::path::Path;

use anyhow::{Context, Result};
use qindset::QueryLedger;
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

/// One algorithm run. Serializes to one CSV row or one JSON object; every field
/// except `wall_time_ms` is a function of the inputs and seed.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub schema_version: u32,
    pub command: String,
    /// `gen:<spec>` or `file:<path>`.
    pub source: String,
    pub n: usize,
    pub m: usize,
    pub seed: u64,
    pub rep: usize,
    /// Seed of the algorithm's own random stream.
    pub run_seed: u64,
    pub model: String,
    /// `key=value` pairs separated by `;`.
    pub params: String,
    pub result_size: usize,
    pub result_set: String,
    pub matrix_queries: u64,
    pub list_queries: u64,
    pub degree_queries: u64,
    pub charged_cost: u64,
    pub trials: u64,
    pub notes: String,
    pub wall_time_ms: f64,
}

impl RunReport {
    pub fn set_ledger(&mut self, ledger: &QueryLedger) {
        self.matrix_queries = ledger.matrix_queries;
        self.list_queries = ledger.list_queries;
        self.degree_queries = ledger.degree_queries;
        self.charged_cost = ledger.charged_cost;
    }
}

pub fn write_csv<T: Serialize>(path: &Path, rows: &[T]) -> Result<()> {
    let mut w = csv::Writer::from_path(path).with_context(|| format!("cannot write {}", path.display()))?;
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

/// One JSON object per line.
pub fn write_json_lines<T: Serialize>(out: &mut dyn Write, rows: &[T]) -> Result<()> {
    for r in rows {
        serde_json::to_writer(&mut *out, r)?;
        writeln!(out)?;
    }
    Ok(())
}
