//! The JSON algebra file.
//!
//! ```text
//! {
//!   "dim": 2,
//!   "basis": ["x", "y"],
//!   "bracket": [
//!     [
//!       ["0", "0"],
//!       ["0", "1"]
//!     ],
//!     ...
//!   ],
//!   "alpha": [
//!     ["1", "0"],
//!     ["0", "1"]
//!   ],
//!   "beta": ...
//! }
//! ```
//!
//! `bracket[i][j][k]` is the `e_k` coefficient of `[e_i, e_j]`; matrices act
//! on columns. Rationals are strings so nothing is ever rounded.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use bihom_core::exactlin::parse_rational;
use bihom_core::{BiHomAlgebra, MatrixQ, Rational, StructureTensor};
use serde::Deserialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FileError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}{}: {field}: {message}", .line.map(|l| format!(":{l}")).unwrap_or_default())]
    Parse {
        path: String,
        line: Option<usize>,
        field: String,
        message: String,
    },
    #[error("{path}: {field}: expected {expected} entries, found {found}")]
    DimensionMismatch {
        path: String,
        field: String,
        expected: usize,
        found: usize,
    },
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAlgebra {
    dim: usize,
    basis: Vec<String>,
    bracket: Vec<Vec<Vec<String>>>,
    alpha: Vec<Vec<String>>,
    beta: Vec<Vec<String>>,
}

struct Ctx<'a> {
    path: &'a str,
    text: &'a str,
}

impl Ctx<'_> {
    fn json_error(&self, e: serde_json::Error) -> FileError {
        FileError::Parse {
            path: self.path.to_string(),
            line: (e.line() > 0).then_some(e.line()),
            field: String::from("document"),
            message: e.to_string(),
        }
    }

    fn expect_len(&self, field: &str, expected: usize, found: usize) -> Result<(), FileError> {
        if expected == found {
            Ok(())
        } else {
            Err(FileError::DimensionMismatch {
                path: self.path.to_string(),
                field: field.to_string(),
                expected,
                found,
            })
        }
    }

    /// Line of the first occurrence of the quoted token, which is where a bad
    /// rational almost always sits.
    fn line_of(&self, token: &str) -> Option<usize> {
        let quoted = serde_json::to_string(token).ok()?;
        let at = self.text.find(&quoted)?;
        Some(self.text[..at].matches('\n').count() + 1)
    }

    fn rational(&self, field: String, s: &str) -> Result<Rational, FileError> {
        parse_rational(s).map_err(|e| FileError::Parse {
            path: self.path.to_string(),
            line: self.line_of(s),
            field,
            message: e.to_string(),
        })
    }

    fn matrix(&self, name: &str, n: usize, rows: &[Vec<String>]) -> Result<MatrixQ, FileError> {
        self.expect_len(name, n, rows.len())?;
        let mut m = MatrixQ::zeros(n, n);
        for (i, row) in rows.iter().enumerate() {
            self.expect_len(&format!("{name}[{i}]"), n, row.len())?;
            for (j, s) in row.iter().enumerate() {
                m.set(i, j, self.rational(format!("{name}[{i}][{j}]"), s)?);
            }
        }
        Ok(m)
    }
}

/// Parses an algebra file held in memory; `path` is only used in messages.
pub fn parse_algebra(text: &str, path: &str) -> Result<BiHomAlgebra, FileError> {
    let ctx = Ctx { path, text };
    let raw: RawAlgebra = serde_json::from_str(text).map_err(|e| ctx.json_error(e))?;
    let n = raw.dim;
    ctx.expect_len("basis", n, raw.basis.len())?;
    ctx.expect_len("bracket", n, raw.bracket.len())?;
    let mut tensor = StructureTensor::zeros(n);
    for (i, plane) in raw.bracket.iter().enumerate() {
        ctx.expect_len(&format!("bracket[{i}]"), n, plane.len())?;
        for (j, row) in plane.iter().enumerate() {
            ctx.expect_len(&format!("bracket[{i}][{j}]"), n, row.len())?;
            for (k, s) in row.iter().enumerate() {
                tensor.set(i, j, k, ctx.rational(format!("bracket[{i}][{j}][{k}]"), s)?);
            }
        }
    }
    let alpha = ctx.matrix("alpha", n, &raw.alpha)?;
    let beta = ctx.matrix("beta", n, &raw.beta)?;
    let a = BiHomAlgebra::new(tensor, alpha, beta).expect("sizes checked");
    Ok(a.with_basis_names(raw.basis).expect("length checked"))
}

/// Parses a bare `n x n` grid of rational strings.
pub fn parse_matrix(text: &str, path: &str) -> Result<MatrixQ, FileError> {
    let ctx = Ctx { path, text };
    let rows: Vec<Vec<String>> = serde_json::from_str(text).map_err(|e| ctx.json_error(e))?;
    ctx.matrix("matrix", rows.len(), &rows)
}

fn read(path: &Path) -> Result<String, FileError> {
    fs::read_to_string(path).map_err(|source| FileError::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn load(path: &Path) -> Result<BiHomAlgebra, FileError> {
    parse_algebra(&read(path)?, &path.display().to_string())
}

pub fn load_matrix(path: &Path) -> Result<MatrixQ, FileError> {
    parse_matrix(&read(path)?, &path.display().to_string())
}

fn quoted(s: &str) -> String {
    serde_json::to_string(s).expect("strings serialize")
}

fn row_line(row: impl IntoIterator<Item = Rational>) -> String {
    let cells: Vec<String> = row.into_iter().map(|x| quoted(&x.to_string())).collect();
    format!("[{}]", cells.join(", "))
}

fn write_matrix(out: &mut String, name: &str, m: &MatrixQ, last: bool) {
    let n = m.rows();
    let _ = writeln!(out, "  {}: [", quoted(name));
    for i in 0..n {
        let sep = if i + 1 < n { "," } else { "" };
        let _ = writeln!(out, "    {}{sep}", row_line(m.row(i).iter().cloned()));
    }
    let _ = writeln!(out, "  ]{}", if last { "" } else { "," });
}

/// Canonical text: fixed key order, reduced rationals, one grid row per line.
pub fn to_canonical_string(a: &BiHomAlgebra) -> String {
    let n = a.dim();
    let t = a.tensor();
    let mut out = String::from("{\n");
    let _ = writeln!(out, "  \"dim\": {n},");
    let names: Vec<String> = a.basis_names().iter().map(|s| quoted(s)).collect();
    let _ = writeln!(out, "  \"basis\": [{}],", names.join(", "));
    out.push_str("  \"bracket\": [\n");
    for i in 0..n {
        out.push_str("    [\n");
        for j in 0..n {
            let sep = if j + 1 < n { "," } else { "" };
            let _ = writeln!(out, "      {}{sep}", row_line(t.product(i, j).iter().cloned()));
        }
        let _ = writeln!(out, "    ]{}", if i + 1 < n { "," } else { "" });
    }
    out.push_str("  ],\n");
    write_matrix(&mut out, "alpha", a.alpha(), false);
    write_matrix(&mut out, "beta", a.beta(), true);
    out.push_str("}\n");
    out
}

pub fn save(a: &BiHomAlgebra, path: &Path) -> Result<(), FileError> {
    fs::write(path, to_canonical_string(a)).map_err(|source| FileError::Io {
        path: path.display().to_string(),
        source,
    })
}
