//! Quiver sources, vectors, surface parameters and seeds on the command line.

use std::path::{Path, PathBuf};

use cy2::format::{parse_dim, parse_quiver, QuiverFile};
use cy2::quiver::families;
use cy2::{DimVector, Quiver};

use crate::report::Fail;

pub(crate) const SEED_ENV: &str = "CY2_SEED";
pub(crate) const DEFAULT_SEED: u64 = 0;

/// Built-in quivers, named `builtin:<family>[:<k>]`.
fn builtin(spec: &str) -> Result<Quiver, Fail> {
    let (name, arg) = spec.split_once(':').unwrap_or((spec, ""));
    let k = || {
        arg.parse::<usize>()
            .map_err(|_| Fail::input(format!("builtin `{name}` needs a numeric parameter")))
    };
    Ok(match name {
        "loops" => families::loops(k()?),
        "a2" => families::a2(),
        "path" => families::path(k()?),
        "kronecker" => families::kronecker(k()?),
        "cycle" => families::cycle(k()?),
        "d4_tilde" => families::d4_tilde(),
        _ => return Err(Fail::input(format!("unknown builtin quiver `{name}`"))),
    })
}

/// Loads `source`, a builtin name or a quiver file path relative to `base`.
pub(crate) fn load_quiver(source: &str, base: Option<&Path>) -> Result<QuiverFile, Fail> {
    if let Some(spec) = source.strip_prefix("builtin:") {
        return Ok(QuiverFile {
            quiver: builtin(spec)?,
            dim: None,
        });
    }
    let path = match base {
        Some(b) if Path::new(source).is_relative() => b.join(source),
        _ => PathBuf::from(source),
    };
    let text = std::fs::read_to_string(&path)
        .map_err(|e| Fail::input(format!("{}: {e}", path.display())))?;
    parse_quiver(&text).map_err(|e| Fail::input(format!("{}: {e}", path.display())))
}

/// Accepts `label=value` assignments or a positional list such as `1,1`,
/// `(2,1,1,1,1)` or `1 1`.
pub(crate) fn parse_vector(q: &Quiver, text: &str) -> Result<DimVector, Fail> {
    let text = text.trim().trim_start_matches('(').trim_end_matches(')');
    let text = text.replace(',', " ");
    if text.contains('=') {
        return Ok(parse_dim(q, &text)?);
    }
    let entries = text
        .split_whitespace()
        .map(|t| {
            t.parse::<u64>()
                .map_err(|_| Fail::input(format!("`{t}` is not a nonnegative integer")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if entries.len() != q.vertex_count() {
        return Err(cy2::Error::DimMismatch {
            expected: q.vertex_count(),
            found: entries.len(),
        }
        .into());
    }
    Ok(DimVector::new(entries))
}

/// `g=<g> n=<n>`, separated by whitespace or a comma.
pub(crate) fn parse_surface(text: &str) -> Result<(u64, u64), Fail> {
    let mut g = None;
    let mut n = None;
    for tok in text.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()) {
        let (k, v) = tok
            .split_once('=')
            .ok_or_else(|| Fail::input(format!("expected `g=<g> n=<n>`, got `{tok}`")))?;
        let v: u64 = v
            .parse()
            .map_err(|_| Fail::input(format!("`{v}` is not a nonnegative integer")))?;
        match k {
            "g" => g = Some(v),
            "n" => n = Some(v),
            _ => return Err(Fail::input(format!("unknown surface parameter `{k}`"))),
        }
    }
    match (g, n) {
        (Some(g), Some(n)) => Ok((g, n)),
        _ => Err(Fail::input("expected `g=<g> n=<n>`")),
    }
}

/// The seed from the flag, else from the environment, else the default,
/// with where it came from.
pub(crate) fn resolve_seed(flag: Option<u64>) -> Result<(u64, &'static str), Fail> {
    if let Some(s) = flag {
        return Ok((s, "flag"));
    }
    match std::env::var(SEED_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map(|s| (s, "env"))
            .map_err(|_| Fail::input(format!("{SEED_ENV}=`{v}` is not a u64"))),
        Err(_) => Ok((DEFAULT_SEED, "default")),
    }
}

/// A moduli question: a quiver with a dimension vector, or a surface.
#[derive(Clone)]
pub(crate) enum Target {
    Quiver {
        source: String,
        quiver: Quiver,
        dim: DimVector,
    },
    Surface {
        g: u64,
        n: u64,
    },
}

impl Target {
    pub(crate) fn from_args(
        quiver: Option<&str>,
        dim: Option<&str>,
        surface: Option<&str>,
        base: Option<&Path>,
    ) -> Result<Target, Fail> {
        match (quiver, surface) {
            (Some(_), Some(_)) => Err(Fail::input("give either -q or --surface, not both")),
            (None, None) => Err(Fail::input("give -q <quiverfile> or --surface g=<g> n=<n>")),
            (None, Some(s)) => {
                let (g, n) = parse_surface(s)?;
                Ok(Target::Surface { g, n })
            }
            (Some(source), None) => {
                let file = load_quiver(source, base)?;
                let dim = match (dim, file.dim) {
                    (Some(d), _) => parse_vector(&file.quiver, d)?,
                    (None, Some(d)) => d,
                    (None, None) => return Err(Fail::input("no --dim and no `dim` line in the quiver file")),
                };
                Ok(Target::Quiver {
                    source: source.to_string(),
                    quiver: file.quiver,
                    dim,
                })
            }
        }
    }

    /// Parses a table row: `surface g=<g> n=<n>` or
    /// `quiver <source> dim <vector>`.
    pub(crate) fn from_row(line: &str, base: Option<&Path>) -> Result<Target, Fail> {
        let line = line.trim();
        if let Some(rest) = line.strip_prefix("surface") {
            let (g, n) = parse_surface(rest)?;
            return Ok(Target::Surface { g, n });
        }
        if let Some(rest) = line.strip_prefix("quiver") {
            let rest = rest.trim();
            let (source, dim) = match rest.split_once(" dim ") {
                Some((s, d)) => (s.trim(), Some(d.trim())),
                None => (rest, None),
            };
            return Target::from_args(Some(source), dim, None, base);
        }
        Err(Fail::input(format!("cannot read table row `{line}`")))
    }

    pub(crate) fn describe(&self) -> String {
        match self {
            Target::Quiver { source, dim, .. } => format!("quiver {source} dim {dim}"),
            Target::Surface { g, n } => format!("surface g={g} n={n}"),
        }
    }
}
