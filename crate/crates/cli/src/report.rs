//! Machine-readable output. All index values are decimal strings.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use anyhow::{Context, Result};
use serde::Serialize;

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct Discrepancy {
    pub formula: String,
    pub value: String,
    pub reference: String,
    pub delta: String,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ReportRow {
    pub k: usize,
    pub values: BTreeMap<String, String>,
    pub agree: bool,
    pub timings_us: BTreeMap<String, u128>,
    pub discrepancies: Vec<Discrepancy>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct RunReport {
    pub command: String,
    pub input: String,
    pub order: usize,
    pub size: usize,
    pub methods: Vec<String>,
    pub k_min: usize,
    pub k_max: usize,
    pub rows: Vec<ReportRow>,
    pub agreement: bool,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ScanSummary {
    pub orders: Vec<usize>,
    pub k: usize,
    pub order: usize,
    pub members: usize,
    pub min_value: String,
    pub min_graphs: Vec<String>,
    pub max_value: String,
    pub max_graphs: Vec<String>,
    pub lower_bound: String,
    pub min_at_star_like: bool,
    pub max_at_path_like: bool,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ScanCsvRow {
    pub canonical_id: String,
    pub sw_k: String,
    pub is_star_like: bool,
    pub is_path_like: bool,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ProblemSummary {
    pub degrees: Vec<usize>,
    pub k: usize,
    pub mode: String,
    pub trees: usize,
    pub min_value: String,
    pub max_value: String,
    pub greedy_value: String,
    pub greedy_is_min: bool,
    pub caterpillar_value: String,
    pub caterpillar_is_max: bool,
    pub min_counterexample: Option<Vec<[usize; 2]>>,
    pub max_counterexample: Option<Vec<[usize; 2]>>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ProblemCsvRow {
    pub canonical_id: String,
    pub sw_k: String,
    pub is_greedy: bool,
    pub is_caterpillar: bool,
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let text = serde_json::to_string_pretty(value)? + "\n";
    fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
}

pub fn write_csv<T: Serialize>(path: &Path, rows: &[T]) -> Result<()> {
    let mut w =
        csv::Writer::from_path(path).with_context(|| format!("cannot write {}", path.display()))?;
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}
