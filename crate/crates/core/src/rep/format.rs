//! Text format for matrix representations.
//!
//! ```text
//! surface g=2 n=2
//! matrix X1
//! 1 1/2
//! 0 -3
//! ...
//! ```
//!
//! or, for the preprojective algebra of the quiver in `<file>`,
//!
//! ```text
//! quiver-rep <file> dim <label>=<n> ...
//! matrix a
//! ...
//! matrix a*
//! ...
//! ```
//!
//! A quiver-rep lives on the quiver in `<file>` when that is already a double
//! quiver and on its double otherwise. Every arrow or generator has exactly
//! one `matrix` block; a block has one line per row, none when the matrix
//! has no rows or no columns.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::format::{parse_dim_at, strip_comment, write_dim};
use crate::linalg::{Matrix, Scalar};
use crate::quiver::{double_quiver, star_pairs, Quiver};

use super::{generator_labels, QuiverRep, Rep, SurfaceRep};

fn parse_scalar(tok: &str, line: usize) -> Result<Scalar> {
    let bad = || Error::parse(line, format!("`{tok}` is not a rational number"));
    if let Some((n, d)) = tok.split_once('/') {
        let n: num_bigint::BigInt = n.parse().map_err(|_| bad())?;
        let d: num_bigint::BigInt = d.parse().map_err(|_| bad())?;
        if d == 0.into() {
            return Err(Error::parse(line, "zero denominator"));
        }
        Ok(Scalar::new(n, d))
    } else {
        Ok(Scalar::from_integer(tok.parse().map_err(|_| bad())?))
    }
}

fn parse_kv(tok: &str, key: &str, line: usize) -> Result<usize> {
    tok.strip_prefix(key)
        .and_then(|t| t.strip_prefix('='))
        .and_then(|v| v.parse().ok())
        .ok_or_else(|| Error::parse(line, format!("expected `{key}=<n>`, got `{tok}`")))
}

/// Parses a representation; `resolve` loads the quiver file named in a
/// `quiver-rep` header.
pub fn parse_rep(text: &str, resolve: &mut dyn FnMut(&str) -> Result<Quiver>) -> Result<Rep> {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, strip_comment(l)))
        .filter(|(_, l)| !l.is_empty())
        .collect();
    let Some(&(hline, header)) = lines.first() else {
        return Err(Error::parse(1, "empty representation file"));
    };
    let toks: Vec<&str> = header.split_whitespace().collect();
    // Expected (label, rows, cols) for each matrix block.
    let shapes: Vec<(String, usize, usize)>;
    let make: Box<dyn FnOnce(Vec<Matrix>) -> Result<Rep>>;
    match toks.first().copied() {
        Some("surface") => {
            if toks.len() != 3 {
                return Err(Error::parse(hline, "expected `surface g=<g> n=<n>`"));
            }
            let g = parse_kv(toks[1], "g", hline)?;
            let n = parse_kv(toks[2], "n", hline)?;
            shapes = generator_labels(g).into_iter().map(|l| (l, n, n)).collect();
            make = Box::new(move |ms| Ok(Rep::Surface(SurfaceRep::new(g, ms)?)));
        }
        Some("quiver-rep") => {
            if toks.len() < 3 || toks[2] != "dim" {
                return Err(Error::parse(hline, "expected `quiver-rep <file> dim <vector>`"));
            }
            let file_q = resolve(toks[1])?;
            let q = if star_pairs(&file_q).is_ok() && !file_q.arrows().is_empty() {
                file_q
            } else {
                double_quiver(&file_q)
            };
            let dim = parse_dim_at(&q, &toks[3..].join(" "), hline)?;
            shapes = q
                .arrows()
                .iter()
                .map(|a| {
                    (
                        a.label.clone(),
                        dim.get(a.head) as usize,
                        dim.get(a.tail) as usize,
                    )
                })
                .collect();
            make = Box::new(move |ms| Ok(Rep::Quiver(QuiverRep::new(q, dim, ms)?)));
        }
        _ => {
            return Err(Error::parse(hline, "expected a `surface` or `quiver-rep` header"));
        }
    }
    let index: HashMap<&str, usize> = shapes
        .iter()
        .enumerate()
        .map(|(i, (l, _, _))| (l.as_str(), i))
        .collect();
    let mut mats: Vec<Option<Matrix>> = vec![None; shapes.len()];
    let mut pos = 1;
    while pos < lines.len() {
        let (line, body) = lines[pos];
        let label = body
            .strip_prefix("matrix")
            .filter(|r| r.starts_with(char::is_whitespace))
            .map(str::trim)
            .ok_or_else(|| Error::parse(line, "expected `matrix <label>`"))?;
        let &k = index
            .get(label)
            .ok_or_else(|| Error::parse(line, format!("unknown matrix label `{label}`")))?;
        if mats[k].is_some() {
            return Err(Error::parse(line, format!("matrix `{label}` given twice")));
        }
        let (_, rows, cols) = shapes[k];
        let nrows = if cols == 0 { 0 } else { rows };
        let mut data = Vec::with_capacity(nrows);
        for r in 0..nrows {
            let Some(&(rl, row)) = lines.get(pos + 1 + r) else {
                return Err(Error::parse(line, format!("matrix `{label}` needs {rows} rows")));
            };
            let entries = row
                .split_whitespace()
                .map(|t| parse_scalar(t, rl))
                .collect::<Result<Vec<_>>>()?;
            if entries.len() != cols {
                return Err(Error::parse(
                    rl,
                    format!("row has {} entries, `{label}` needs {cols}", entries.len()),
                ));
            }
            data.push(entries);
        }
        mats[k] = Some(if nrows == 0 {
            Matrix::zeros(rows, cols)
        } else {
            Matrix::from_rows(data, cols)?
        });
        pos += 1 + nrows;
    }
    let mut out = Vec::with_capacity(mats.len());
    for (m, (label, _, _)) in mats.into_iter().zip(&shapes) {
        out.push(m.ok_or_else(|| {
            Error::parse(lines.last().map_or(hline, |l| l.0), format!("missing matrix `{label}`"))
        })?);
    }
    make(out)
}

fn write_matrix(out: &mut String, label: &str, m: &Matrix) {
    writeln!(out, "matrix {label}").unwrap();
    if m.cols() == 0 {
        return;
    }
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(ToString::to_string).collect();
        writeln!(out, "{}", row.join(" ")).unwrap();
    }
}

pub fn write_surface_rep(rep: &SurfaceRep) -> String {
    let mut out = format!("surface g={} n={}\n", rep.genus(), rep.size());
    for (label, m) in generator_labels(rep.genus()).iter().zip(rep.generators()) {
        write_matrix(&mut out, label, m);
    }
    out
}

/// `quiver_ref` is written into the header as the quiver file name.
pub fn write_quiver_rep(rep: &QuiverRep, quiver_ref: &str) -> String {
    let q = rep.quiver();
    let mut out = format!("quiver-rep {quiver_ref} dim {}\n", write_dim(q, rep.dim()));
    for (a, m) in q.arrows().iter().zip(rep.maps()) {
        write_matrix(&mut out, &a.label, m);
    }
    out
}

pub fn write_rep(rep: &Rep, quiver_ref: &str) -> String {
    match rep {
        Rep::Quiver(r) => write_quiver_rep(r, quiver_ref),
        Rep::Surface(r) => write_surface_rep(r),
    }
}
