//! Line-oriented text format for quivers.
//!
//! ```text
//! # comments run to the end of the line
//! vertex <label>
//! arrow <label> : <tail> -> <head>
//! dim <label>=<n> <label>=<n> ...
//! ```
//!
//! Labels are nonempty and contain no whitespace, `:`, `=` or `#`. Vertices
//! must be declared before arrows use them. At most one `dim` line may
//! appear; vertices it does not mention get dimension 0.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::quiver::{DimVector, Quiver};

/// A parsed quiver file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverFile {
    pub quiver: Quiver,
    pub dim: Option<DimVector>,
}

pub(crate) fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

fn check_label(label: &str, line: usize) -> Result<()> {
    if label.is_empty()
        || label
            .chars()
            .any(|c| c.is_whitespace() || matches!(c, ':' | '=' | '#'))
    {
        return Err(Error::parse(line, format!("invalid label `{label}`")));
    }
    Ok(())
}

pub fn parse_quiver(text: &str) -> Result<QuiverFile> {
    let mut vertices: Vec<String> = Vec::new();
    let mut vertex_set = HashSet::new();
    let mut arrows: Vec<(String, String, String)> = Vec::new();
    let mut arrow_set = HashSet::new();
    let mut dim_line: Option<(usize, String)> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = strip_comment(raw);
        if body.is_empty() {
            continue;
        }
        let (keyword, rest) = body.split_once(char::is_whitespace).unwrap_or((body, ""));
        let rest = rest.trim();
        match keyword {
            "vertex" => {
                check_label(rest, line)?;
                if !vertex_set.insert(rest.to_string()) {
                    return Err(Error::parse(line, format!("duplicate vertex `{rest}`")));
                }
                vertices.push(rest.to_string());
            }
            "arrow" => {
                let (label, ends) = rest
                    .split_once(':')
                    .ok_or_else(|| Error::parse(line, "expected `arrow <label> : <tail> -> <head>`"))?;
                let (tail, head) = ends
                    .split_once("->")
                    .ok_or_else(|| Error::parse(line, "expected `<tail> -> <head>`"))?;
                let (label, tail, head) = (label.trim(), tail.trim(), head.trim());
                for l in [label, tail, head] {
                    check_label(l, line)?;
                }
                for v in [tail, head] {
                    if !vertex_set.contains(v) {
                        return Err(Error::parse(line, format!("unknown vertex `{v}`")));
                    }
                }
                if !arrow_set.insert(label.to_string()) {
                    return Err(Error::parse(line, format!("duplicate arrow `{label}`")));
                }
                arrows.push((label.into(), tail.into(), head.into()));
            }
            "dim" => {
                if dim_line.is_some() {
                    return Err(Error::parse(line, "second `dim` line"));
                }
                dim_line = Some((line, rest.to_string()));
            }
            other => return Err(Error::parse(line, format!("unknown keyword `{other}`"))),
        }
    }
    let quiver = Quiver::new(vertices, arrows)?;
    let dim = match dim_line {
        Some((line, text)) => Some(parse_dim_at(&quiver, &text, line)?),
        None => None,
    };
    Ok(QuiverFile { quiver, dim })
}

/// Parses `label=value` assignments; unmentioned vertices are 0.
pub fn parse_dim(q: &Quiver, text: &str) -> Result<DimVector> {
    parse_dim_at(q, text, 1)
}

pub(crate) fn parse_dim_at(q: &Quiver, text: &str, line: usize) -> Result<DimVector> {
    let mut entries = vec![0u64; q.vertex_count()];
    let mut seen = vec![false; q.vertex_count()];
    for tok in text.split_whitespace() {
        let (label, value) = tok
            .split_once('=')
            .ok_or_else(|| Error::parse(line, format!("expected `<label>=<n>`, got `{tok}`")))?;
        let v = q
            .vertex_index(label)
            .ok_or_else(|| Error::parse(line, format!("unknown vertex `{label}`")))?;
        if seen[v] {
            return Err(Error::parse(line, format!("vertex `{label}` assigned twice")));
        }
        seen[v] = true;
        entries[v] = value
            .parse()
            .map_err(|_| Error::parse(line, format!("`{value}` is not a nonnegative integer")))?;
    }
    Ok(DimVector::new(entries))
}

/// `label=value` for every vertex, in vertex order.
pub fn write_dim(q: &Quiver, dim: &DimVector) -> String {
    q.vertices()
        .iter()
        .zip(dim.entries())
        .map(|(l, d)| format!("{l}={d}"))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn write_quiver(q: &Quiver, dim: Option<&DimVector>) -> String {
    let mut out = String::new();
    for v in q.vertices() {
        writeln!(out, "vertex {v}").unwrap();
    }
    for a in q.arrows() {
        writeln!(
            out,
            "arrow {} : {} -> {}",
            a.label,
            q.vertices()[a.tail],
            q.vertices()[a.head]
        )
        .unwrap();
    }
    if let Some(d) = dim {
        writeln!(out, "dim {}", write_dim(q, d)).unwrap();
    }
    out
}
