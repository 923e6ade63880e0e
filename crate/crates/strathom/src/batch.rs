//! Table runs: one certificate per knot, computed in parallel, then all
//! pairwise verdicts.

use std::path::Path;

use rayon::prelude::*;
use serde_json::json;
use strathom_core::certificate::{certificate, compare, CertificateConfig, ComparisonVerdict, KnotCertificate};

use crate::formats::table::{self, TableEntry};
use crate::{json, Error, Result, BUNDLED_TABLE};

pub const TABLE_ENV: &str = "STRATHOM_TABLE";

/// Table text from `path`, else `$STRATHOM_TABLE`, else the bundled table.
pub fn load_table(path: Option<&Path>) -> Result<Vec<TableEntry>> {
    let env = std::env::var_os(TABLE_ENV).filter(|v| !v.is_empty());
    let chosen = path.map(Path::to_path_buf).or(env.map(Into::into));
    match chosen {
        Some(p) => {
            let text = std::fs::read_to_string(&p).map_err(|source| Error::Io { path: p.clone(), source })?;
            table::parse(&text)
        }
        None => table::parse(BUNDLED_TABLE),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableReport {
    pub names: Vec<String>,
    pub certificates: Vec<KnotCertificate>,
    /// Verdict for each pair `i < j`, row-major.
    pub pairs: Vec<(usize, usize, ComparisonVerdict)>,
}

pub fn run(entries: &[TableEntry], cfg: &CertificateConfig) -> Result<TableReport> {
    let certificates = entries
        .par_iter()
        .map(|e| certificate(&e.diagram, cfg).map_err(Error::from))
        .collect::<Result<Vec<_>>>()?;
    let n = certificates.len();
    let pairs = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .map(|(i, j)| (i, j, compare(&certificates[i], &certificates[j])))
        .collect();
    Ok(TableReport { names: entries.iter().map(|e| e.name.clone()).collect(), certificates, pairs })
}

impl TableReport {
    pub fn verdict(&self, a: &str, b: &str) -> Option<&ComparisonVerdict> {
        let i = self.names.iter().position(|n| n == a)?;
        let j = self.names.iter().position(|n| n == b)?;
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        self.pairs.iter().find(|p| p.0 == i && p.1 == j).map(|p| &p.2)
    }

    /// One JSON object per line: `{"certificate": ..., "name": ...}`.
    pub fn certificates_jsonl(&self) -> Result<String> {
        let mut out = String::new();
        for (name, c) in self.names.iter().zip(&self.certificates) {
            out.push_str(&json!({ "name": name, "certificate": json::certificate_value(c)? }).to_string());
            out.push('\n');
        }
        Ok(out)
    }

    /// `a b verdict` per pair, then a count of pairs per separating field.
    pub fn matrix_text(&self) -> String {
        let mut out = String::new();
        let mut tally: Vec<(String, usize)> = Vec::new();
        for (i, j, v) in &self.pairs {
            out.push_str(&format!("{} {} {v}\n", self.names[*i], self.names[*j]));
            let key = match v {
                ComparisonVerdict::Distinct { witness } => witness.clone(),
                ComparisonVerdict::Indistinguishable { .. } => "indistinguishable".to_string(),
            };
            match tally.iter_mut().find(|t| t.0 == key) {
                Some(t) => t.1 += 1,
                None => tally.push((key, 1)),
            }
        }
        out.push_str(&format!("# {} knots, {} pairs\n", self.names.len(), self.pairs.len()));
        for (k, n) in tally {
            out.push_str(&format!("# {k}: {n}\n"));
        }
        out
    }
}
