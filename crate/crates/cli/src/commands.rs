//! Subcommand handlers. Each appends `key = value` lines to a [`Report`].

use std::path::Path;

use rayon::prelude::*;

use cy2::format::{write_dim, write_quiver};
use cy2::local::{
    find_singular_witness, is_cyclic_type, local_quiver, semisimple_point_smooth, Factor,
    SemisimpleType,
};
use cy2::moduli::{
    extended_dynkin_lower_bound, preprojective_report, surface_rep_dim, surface_report,
    ModuliReport, SimplesCriterion, Verdict,
};
use cy2::quiver::{p_form, sym_form};
use cy2::rep::{
    build_surface_simple, build_two_sided_point, end_dim, ext_profile, has_cyclic_vector,
    is_simple, is_two_sided_point, parse_rep, tangent_dim, tangent_identity, write_surface_rep,
    algebra_span_dim, CyclicAnswer, CyclicSource, Rep,
};
use cy2::roots::RootSystem;
use cy2::{classify, classify_root, DimVector, Quiver, Scalar};

use crate::input::{load_quiver, parse_surface, parse_vector, Target};
use crate::report::{Fail, Outcome, Report};

fn vector_text(v: &[Scalar]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn optional(v: Option<i64>) -> String {
    v.map_or_else(|| "undefined".to_string(), |x| x.to_string())
}

fn sstype_text(t: &SemisimpleType) -> String {
    t.factors()
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" + ")
}

pub(crate) fn quiver_check(r: &mut Report, source: &str, dim: Option<&str>) -> Outcome {
    let file = load_quiver(source, None)?;
    let q = &file.quiver;
    r.kv("input", source);
    r.kv("vertices", q.vertex_count());
    r.kv("arrows", q.arrows().len());
    let comps = classify(q);
    r.kv("components", comps.len());
    for (i, c) in comps.iter().enumerate() {
        let labels: Vec<&str> = c.vertices.iter().map(|&v| q.vertices()[v].as_str()).collect();
        r.kv(&format!("component.{i}"), format!("{} vertices={}", c.class, labels.join(",")));
    }
    let dim = match dim {
        Some(d) => Some(parse_vector(q, d)?),
        None => file.dim.clone(),
    };
    if let Some(d) = dim {
        r.kv("dim", write_dim(q, &d));
        r.kv("p", p_form(q, &d)?);
        r.kv("root", format!("{:?}", classify_root(q, &d)?.kind));
    }
    Ok(())
}

pub(crate) fn roots(r: &mut Report, source: &str, below: &str) -> Outcome {
    let file = load_quiver(source, None)?;
    let q = &file.quiver;
    let bound = parse_vector(q, below)?;
    r.kv("input", source);
    r.kv("below", write_dim(q, &bound));
    let roots = RootSystem::new(q).positive_roots_below(&bound)?;
    r.kv("count", roots.len());
    for root in &roots {
        r.kv("root", write_dim(q, root));
    }
    Ok(())
}

#[derive(Clone, Copy, PartialEq, Eq)]
pub(crate) enum Mode {
    Simples,
    Dims,
    Smooth,
    Table,
}

fn dims_lines(r: &mut Report, m: &ModuliReport, bundle: Option<i64>) -> Outcome {
    r.kv("rep_dim", optional(m.rep_dim));
    r.kv("quotient_dim", optional(m.quotient_dim));
    r.kv("hilb_dim", optional(m.hilb_dim));
    if let (Some(rep), Some(hilb), Some(delta)) = (m.rep_dim, m.hilb_dim, bundle) {
        if hilb != rep + delta {
            return Err(Fail::inconsistency(format!(
                "hilb_dim {hilb} != rep_dim {rep} + {delta}"
            )));
        }
        r.kv("bundle_identity", "holds");
    }
    Ok(())
}

fn quiver_moduli(r: &mut Report, q: &Quiver, dim: &DimVector, mode: Mode) -> Outcome {
    let m = preprojective_report(q, dim)?;
    r.kv("admits_simples", m.admits_simples);
    if mode == Mode::Simples {
        let crit = SimplesCriterion::new(q);
        if m.admits_simples {
            let unit_loop_free = dim.as_unit().is_some_and(|v| !q.has_loop(v));
            if !unit_loop_free {
                if let Some(sub) = extended_dynkin_lower_bound(q, dim)? {
                    let labels: Vec<&str> =
                        sub.vertices.iter().map(|&v| q.vertices()[v].as_str()).collect();
                    r.kv(
                        "extended_subquiver",
                        format!("~{} vertices={} delta={}", sub.diagram, labels.join(","), sub.delta),
                    );
                }
            }
        } else if let Some(parts) = crit.violating_decomposition(dim)? {
            let parts: Vec<String> = parts.iter().map(ToString::to_string).collect();
            r.kv("violating_decomposition", parts.join(" + "));
        } else {
            r.kv("root", format!("{:?}", classify_root(q, dim)?.kind));
        }
    }
    if matches!(mode, Mode::Dims | Mode::Table) {
        r.kv("p", p_form(q, dim)?);
        dims_lines(r, &m, Some(dim.total() as i64 - dim.dot_self() as i64))?;
    }
    if matches!(mode, Mode::Smooth | Mode::Table) {
        r.kv("reason", &m.smooth.reason);
        if m.smooth.verdict == Verdict::Singular {
            match find_singular_witness(q, dim)? {
                Some(w) => r.kv("witness", sstype_text(&w)),
                None => r.kv(
                    "witness",
                    "none: no cyclic semisimple type; singular points are non-semisimple cyclic representations",
                ),
            }
        }
    }
    r.verdict(m.smooth.verdict);
    Ok(())
}

fn surface_moduli(r: &mut Report, g: u64, n: u64, mode: Mode) -> Outcome {
    let m = surface_report(g, n)?;
    r.kv("admits_simples", m.admits_simples);
    if matches!(mode, Mode::Dims | Mode::Table) {
        let bundle = (g > 1).then(|| n as i64 - (n * n) as i64);
        dims_lines(r, &m, bundle)?;
    }
    if matches!(mode, Mode::Smooth | Mode::Table) {
        r.kv("reason", &m.smooth.reason);
        if m.smooth.verdict == Verdict::Singular {
            r.kv("witness", format!("two-sided point, `surface make-twosided --surface g={g} n={n}`"));
        }
    }
    r.verdict(m.smooth.verdict);
    Ok(())
}

pub(crate) fn moduli(r: &mut Report, target: &Target, mode: Mode) -> Outcome {
    r.kv("input", target.describe());
    match target {
        Target::Quiver { quiver, dim, .. } => quiver_moduli(r, quiver, dim, mode),
        Target::Surface { g, n } => surface_moduli(r, *g, *n, mode),
    }
}

fn default_table() -> Vec<String> {
    let mut rows = Vec::new();
    for g in [2, 3] {
        for n in [1, 2, 3] {
            rows.push(format!("surface g={g} n={n}"));
        }
    }
    for loops in [2, 3] {
        for a in [1, 2, 3] {
            rows.push(format!("quiver builtin:loops:{loops} dim {a}"));
        }
    }
    rows.push("quiver builtin:kronecker:2 dim 1,1".into());
    rows.push("quiver builtin:d4_tilde dim 2,1,1,1,1".into());
    rows
}

/// Dimension and smoothness table, rows evaluated in parallel and printed
/// in input order.
pub(crate) fn paper_table(r: &mut Report, input: Option<&Path>) -> Outcome {
    let (rows, base) = match input {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Fail::input(format!("{}: {e}", path.display())))?;
            let rows = text
                .lines()
                .map(|l| l.split('#').next().unwrap_or("").trim().to_string())
                .filter(|l| !l.is_empty())
                .collect();
            (rows, path.parent().map(Path::to_path_buf))
        }
        None => (default_table(), None),
    };
    r.kv("rows", rows.len());
    let results: Vec<Result<Report, Fail>> = rows
        .par_iter()
        .map(|row| {
            let mut part = Report::default();
            let target = Target::from_row(row, base.as_deref())?;
            part.kv("row", target.describe());
            match &target {
                Target::Quiver { quiver, dim, .. } => quiver_moduli(&mut part, quiver, dim, Mode::Table)?,
                Target::Surface { g, n } => surface_moduli(&mut part, *g, *n, Mode::Table)?,
            }
            Ok(part)
        })
        .collect();
    for res in results {
        r.append(res?);
    }
    Ok(())
}

fn parse_factor(q: &Quiver, text: &str) -> Result<Factor, Fail> {
    let mut parts = text.split(':');
    let dim = parse_vector(q, parts.next().unwrap_or(""))?;
    let mult = match parts.next() {
        Some(m) => m
            .trim()
            .parse()
            .map_err(|_| Fail::input(format!("`{m}` is not a multiplicity")))?,
        None => 1,
    };
    let distinct = match parts.next().map(str::trim) {
        None => false,
        Some("distinct") => true,
        Some(other) => return Err(Fail::input(format!("unknown factor flag `{other}`"))),
    };
    if parts.next().is_some() {
        return Err(Fail::input(format!("expected `<vector>:<mult>[:distinct]`, got `{text}`")));
    }
    Ok(if distinct { Factor::distinct(dim, mult) } else { Factor::new(dim, mult) })
}

pub(crate) fn local(r: &mut Report, source: &str, factors: &[String]) -> Outcome {
    let file = load_quiver(source, None)?;
    let q = &file.quiver;
    let factors = factors
        .iter()
        .map(|f| parse_factor(q, f))
        .collect::<Result<Vec<_>, _>>()?;
    let t = SemisimpleType::new(q, factors)?;
    r.kv("input", source);
    for f in t.factors() {
        r.kv("factor", f);
    }
    let m = local_quiver(q, &t)?;
    let total = t.total_dim();
    r.kv("total_dim", &total);
    r.kv("local_vertices", m.quiver.vertex_count());
    r.kv("local_arrows", m.quiver.arrows().len());
    for (i, s) in m.simples.iter().enumerate() {
        let label = &m.quiver.vertices()[i];
        r.kv(
            &format!("simple.{label}"),
            format!("{s} loops={} eps={}", m.quiver.loops_at(i), m.eps.get(i)),
        );
    }
    let p_base = p_form(q, &total)?;
    let p_local = p_form(&m.half, &m.eps)?;
    if p_base != p_local {
        return Err(Fail::inconsistency(format!("p = {p_base} on the base, {p_local} locally")));
    }
    r.kv("p_base", p_base);
    r.kv("p_local", p_local);
    r.kv("ext_form", -sym_form(&m.half, &m.eps, &m.eps)?);
    r.kv("cyclic_type", is_cyclic_type(&t));
    r.kv("smooth_point", semisimple_point_smooth(q, &t)?);
    r.kv("eps", write_dim(&m.quiver, &m.eps));
    r.raw(&write_quiver(&m.quiver, Some(&m.eps)));
    Ok(())
}

pub(crate) fn witness(r: &mut Report, target: &Target) -> Outcome {
    let Target::Quiver { quiver, dim, .. } = target else {
        return Err(Fail::input("witness needs -q <quiverfile> and --dim"));
    };
    r.kv("input", target.describe());
    match find_singular_witness(quiver, dim)? {
        Some(w) => {
            r.kv("witness", "found");
            r.kv("factors", w.factor_count());
            for f in w.factors() {
                r.kv("factor", f);
            }
            r.kv("cyclic_type", is_cyclic_type(&w));
            r.verdict(Verdict::Singular);
        }
        None => {
            r.kv("witness", "none");
            r.kv(
                "fallback",
                "no cyclic semisimple type; a non-semisimple cyclic construction is needed",
            );
            r.verdict(Verdict::OutOfScope);
        }
    }
    Ok(())
}

fn load_rep(r: &mut Report, path: &Path) -> Result<Rep, Fail> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Fail::input(format!("{}: {e}", path.display())))?;
    let base = path.parent().map(Path::to_path_buf);
    let mut resolve = |name: &str| {
        load_quiver(name, base.as_deref())
            .map(|f| f.quiver)
            .map_err(|f| cy2::Error::Precondition(f.message))
    };
    let rep = parse_rep(&text, &mut resolve).map_err(|e| Fail::input(format!("{}: {e}", path.display())))?;
    r.kv("input", path.display());
    match &rep {
        Rep::Surface(s) => r.kv("kind", format!("surface g={} n={}", s.genus(), s.size())),
        Rep::Quiver(q) => r.kv("kind", format!("quiver-rep dim={}", q.dim())),
    }
    r.kv("size", rep.size());
    Ok(rep)
}

fn require_relation(rep: &Rep) -> Outcome {
    if rep.check_relation()? {
        Ok(())
    } else {
        Err(cy2::Error::RelationViolated.into())
    }
}

#[derive(Clone, Copy)]
pub(crate) enum RepTask {
    Verify,
    Tangent,
    End,
    Profile,
    Cyclic { seed: u64, source: &'static str, trials: usize },
    Simple,
}

pub(crate) fn rep(r: &mut Report, path: &Path, task: RepTask) -> Outcome {
    let rep = load_rep(r, path)?;
    match task {
        RepTask::Verify => {
            let ok = rep.check_relation()?;
            r.kv("relation", if ok { "holds" } else { "violated" });
        }
        RepTask::Tangent => {
            require_relation(&rep)?;
            let t = tangent_dim(&rep)?;
            let end = end_dim(&rep);
            let predicted = tangent_identity(&rep, end)?;
            r.kv("tangent_dim", t);
            r.kv("end_dim", end);
            r.kv("predicted", predicted);
            if predicted != t as i64 {
                return Err(Fail::inconsistency(format!("tangent {t} != predicted {predicted}")));
            }
            r.kv("identity", "holds");
        }
        RepTask::End => r.kv("end_dim", end_dim(&rep)),
        RepTask::Profile => {
            require_relation(&rep)?;
            let p = ext_profile(&rep)?;
            let expected = cy2::rep::euler_characteristic(&rep)?;
            r.kv("h0", p.h0);
            r.kv("h1", p.h1);
            r.kv("h2", p.h2);
            r.kv("tangent_dim", p.tangent_dim);
            r.kv("euler", p.euler());
            r.kv("expected_euler", expected);
            if p.euler() != expected {
                return Err(Fail::inconsistency(format!("euler {} != {expected}", p.euler())));
            }
        }
        RepTask::Cyclic { seed, source, trials } => {
            r.kv("seed", seed);
            r.kv("seed_source", source);
            r.kv("trials", trials);
            match has_cyclic_vector(&rep, seed, trials) {
                CyclicAnswer::Yes(c) => {
                    r.kv("cyclic", "Yes");
                    let src = match c.source {
                        CyclicSource::Canonical => "canonical".to_string(),
                        CyclicSource::Basis(i) => format!("basis {i}"),
                        CyclicSource::Random { seed, trial } => format!("random seed={seed} trial={trial}"),
                    };
                    r.kv("certificate.source", src);
                    r.kv("certificate.vector", vector_text(&c.vector));
                    r.kv("certificate.rounds", c.rounds);
                    r.kv("two_sided", is_two_sided_point(&rep, &c.vector)?);
                }
                CyclicAnswer::No { blocks } => {
                    r.kv("cyclic", "No");
                    for (d, m) in blocks {
                        r.kv("certificate.block", format!("dim={d} mult={m}"));
                    }
                }
                CyclicAnswer::NotFound { tried, seed } => {
                    r.kv("cyclic", "NotFound");
                    r.kv("tried", tried);
                    r.kv("search_seed", seed);
                }
            }
        }
        RepTask::Simple => {
            let n = rep.size();
            r.kv("algebra_dim", algebra_span_dim(&rep));
            r.kv("n_squared", n * n);
            let simple = is_simple(&rep);
            r.kv("simple", simple);
            if simple && rep.check_relation()? {
                let t = tangent_dim(&rep)? as i64;
                let expected = match &rep {
                    Rep::Surface(s) => surface_rep_dim(s.genus() as u64, n as u64)?,
                    Rep::Quiver(q) => {
                        let base = q.base_quiver()?;
                        let d = q.dim();
                        2 * p_form(&base, d)? + d.dot_self() as i64 - 1
                    }
                };
                r.kv("tangent_dim", t);
                r.kv("rep_dim", expected);
                if t != expected {
                    return Err(Fail::inconsistency(format!("tangent {t} != rep_dim {expected} at a simple")));
                }
                r.kv("smooth_point", true);
            }
        }
    }
    Ok(())
}

fn surface_args(text: &str) -> Result<(usize, usize), Fail> {
    let (g, n) = parse_surface(text)?;
    Ok((g as usize, n as usize))
}

fn emit_rep(r: &mut Report, text: &str, output: Option<&Path>) -> Outcome {
    match output {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| Fail::input(format!("{}: {e}", path.display())))?;
            r.kv("output", path.display());
        }
        None => r.raw(text),
    }
    Ok(())
}

pub(crate) fn make_simple(
    r: &mut Report,
    surface: &str,
    seed: (u64, &'static str),
    output: Option<&Path>,
) -> Outcome {
    let (g, n) = surface_args(surface)?;
    r.kv("input", format!("surface g={g} n={n}"));
    r.kv("seed", seed.0);
    r.kv("seed_source", seed.1);
    let c = build_surface_simple(g, n, seed.0)?;
    let rep = Rep::Surface(c.value.clone());
    let t = tangent_dim(&rep)?;
    let expected = surface_rep_dim(g as u64, n as u64)?;
    r.kv("attempts", c.attempts);
    r.kv("relation", "holds");
    r.kv("simple", true);
    r.kv("end_dim", end_dim(&rep));
    r.kv("tangent_dim", t);
    r.kv("rep_dim", expected);
    if t as i64 != expected {
        return Err(Fail::inconsistency(format!("tangent {t} != rep_dim {expected} at a simple")));
    }
    emit_rep(r, &write_surface_rep(&c.value), output)
}

pub(crate) fn make_two_sided(r: &mut Report, surface: &str, output: Option<&Path>) -> Outcome {
    let (g, n) = surface_args(surface)?;
    r.kv("input", format!("surface g={g} n={n}"));
    let (s, v) = build_two_sided_point(g, n)?;
    let rep = Rep::Surface(s.clone());
    let t = tangent_dim(&rep)? as i64;
    let smooth = surface_rep_dim(g as u64, n as u64)?;
    r.kv("relation", if rep.check_relation()? { "holds" } else { "violated" });
    r.kv("cyclic_vector", vector_text(&v));
    r.kv("two_sided", is_two_sided_point(&rep, &v)?);
    r.kv("end_dim", end_dim(&rep));
    r.kv("tangent_dim", t);
    r.kv("rep_dim", smooth);
    r.kv("excess", t - smooth);
    emit_rep(r, &write_surface_rep(&s), output)
}
