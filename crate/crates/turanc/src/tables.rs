//! The small-tree value tables as data, plus the oracle-vs-formula
//! verification runner behind `verify-tables`.
//!
//! The manifest ships with the crate (`data/tables.json`) so the tree/formula
//! pairings live in one auditable place rather than in code.

use crate::enumerate::{exc_bruteforce, ExcOptions};
use crate::error::{Error, Result};
use crate::tree::{parse_tree, Tree};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RowKind {
    /// oracle must equal the formula
    Exact,
    /// oracle must be at least the formula; tightness is reported only
    Lower,
    /// oracle value printed, nothing asserted
    Report,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Formula {
    /// `[p, q, r]`: floor((p n + q) / r)
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lin: Option<[i64; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub choose2: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub point: Option<i64>,
}

impl Formula {
    pub fn eval(&self, n: usize) -> Option<usize> {
        if let Some([p, q, r]) = self.lin {
            let v = (p * n as i64 + q).div_euclid(r);
            return usize::try_from(v).ok();
        }
        if self.choose2 == Some(true) {
            return Some(n * (n - 1) / 2);
        }
        self.point.and_then(|v| usize::try_from(v).ok())
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TableRow {
    pub table: u8,
    pub tree: String,
    pub kind: RowKind,
    pub n_min: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n_max: Option<usize>,
    /// `[m, rem]`: row applies only when n % m == rem
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r#mod: Option<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<Formula>,
}

#[derive(Deserialize)]
struct Manifest {
    #[allow(dead_code)]
    comment: String,
    rows: Vec<TableRow>,
}

/// The rows shipped with the crate.
pub fn builtin_rows() -> Vec<TableRow> {
    let manifest: Manifest =
        serde_json::from_str(include_str!("../data/tables.json")).expect("valid manifest");
    manifest.rows
}

/// One oracle-vs-formula comparison.
#[derive(Clone, Debug, Serialize)]
pub struct RowCheck {
    pub table: u8,
    pub tree: String,
    pub kind: RowKind,
    pub n: usize,
    pub expected: Option<usize>,
    pub oracle: usize,
    pub pass: bool,
    /// for lower-bound rows: whether the bound is attained exactly
    pub tight: Option<bool>,
}

/// Runs every applicable row at every n up to `n_max` against the oracle.
pub fn verify_tables(n_max: usize, opts: ExcOptions) -> Result<Vec<RowCheck>> {
    verify_rows(&builtin_rows(), n_max, opts)
}

pub fn verify_rows(rows: &[TableRow], n_max: usize, opts: ExcOptions) -> Result<Vec<RowCheck>> {
    let mut out = Vec::new();
    for row in rows {
        let tree: Tree = parse_tree(&row.tree)?;
        let hi = row.n_max.unwrap_or(n_max).min(n_max);
        for n in row.n_min..=hi {
            if let Some([m, rem]) = row.r#mod {
                if n % m != rem {
                    continue;
                }
            }
            let oracle = exc_bruteforce(&tree, n, opts)?.max_edges;
            let expected = eval_formula(&row.value, n);
            let (pass, tight) = match row.kind {
                RowKind::Exact => (expected == Some(oracle), None),
                RowKind::Lower => {
                    let e = expected.ok_or_else(|| {
                        Error::invalid(format!("lower-bound row {} lacks a formula", row.tree))
                    })?;
                    (oracle >= e, Some(oracle == e))
                }
                RowKind::Report => (true, None),
            };
            out.push(RowCheck {
                table: row.table,
                tree: row.tree.clone(),
                kind: row.kind,
                n,
                expected,
                oracle,
                pass,
                tight,
            });
        }
    }
    Ok(out)
}

fn eval_formula(value: &Option<Formula>, n: usize) -> Option<usize> {
    value.as_ref().and_then(|f| f.eval(n))
}
