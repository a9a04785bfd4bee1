//! Plain-text file formats.
//!
//! Graph files start with a header line `n m` followed by `m` lines `u v`.
//! Inequality files hold one inequality per line, `a_0 a_1 ... <= b`, with
//! integer or `p/q` entries. Point files hold one line of rationals. In every
//! format `#` starts a comment and blank lines are ignored. Coordinates follow
//! the canonical element order: vertices first, then edges sorted by
//! endpoints.

use std::fmt::Write as _;

use tmlab_core::{Family, Graph, LinearInequality, Rational, RationalVector};

use crate::CliError;

/// Non-empty lines with comments stripped, paired with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str, Option<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let (body, comment) = match raw.split_once('#') {
            Some((b, c)) => (b, Some(c.trim())),
            None => (raw, None),
        };
        let body = body.trim();
        (!body.is_empty()).then_some((i + 1, body, comment))
    })
}

fn parse_usize(what: &'static str, line: usize, tok: &str) -> Result<usize, CliError> {
    tok.parse()
        .map_err(|_| CliError::parse(what, line, format!("expected a non-negative integer, found `{tok}`")))
}

pub fn parse_rational(what: &'static str, line: usize, tok: &str) -> Result<Rational, CliError> {
    if let Some((_, d)) = tok.split_once('/') {
        if d.trim_start_matches(['+', '-']).chars().all(|c| c == '0') {
            return Err(CliError::parse(what, line, format!("zero denominator in `{tok}`")));
        }
    }
    tok.parse()
        .map_err(|_| CliError::parse(what, line, format!("expected an integer or p/q, found `{tok}`")))
}

pub fn parse_graph(text: &str) -> Result<Graph, CliError> {
    const WHAT: &str = "graph";
    let mut lines = content_lines(text);
    let (hl, header, _) = lines
        .next()
        .ok_or_else(|| CliError::parse(WHAT, 1, "missing `n m` header"))?;
    let head: Vec<&str> = header.split_whitespace().collect();
    if head.len() != 2 {
        return Err(CliError::parse(WHAT, hl, "header must be `n m`"));
    }
    let n = parse_usize(WHAT, hl, head[0])?;
    let m = parse_usize(WHAT, hl, head[1])?;
    let mut edges = Vec::with_capacity(m);
    for (line, body, _) in lines {
        let toks: Vec<&str> = body.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(CliError::parse(WHAT, line, "edge lines must be `u v`"));
        }
        edges.push((parse_usize(WHAT, line, toks[0])?, parse_usize(WHAT, line, toks[1])?));
    }
    if edges.len() != m {
        return Err(CliError::parse(
            WHAT,
            hl,
            format!("header declares {m} edges, found {}", edges.len()),
        ));
    }
    Ok(Graph::new(n, edges)?)
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// Parses an inequality file for a graph with `dim` elements. Trailing
/// comments become the labels.
pub fn parse_inequalities(text: &str, dim: usize) -> Result<Vec<LinearInequality>, CliError> {
    const WHAT: &str = "inequality file";
    content_lines(text)
        .map(|(line, body, comment)| {
            let (lhs, rhs) = body
                .split_once("<=")
                .ok_or_else(|| CliError::parse(WHAT, line, "expected `a_0 ... a_k <= b`"))?;
            let coeffs = lhs
                .split_whitespace()
                .map(|t| parse_rational(WHAT, line, t))
                .collect::<Result<Vec<_>, _>>()?;
            if coeffs.len() != dim {
                return Err(CliError::parse(
                    WHAT,
                    line,
                    format!("expected {dim} coefficients, found {}", coeffs.len()),
                ));
            }
            let rhs = parse_rational(WHAT, line, rhs.trim())?;
            let label = match comment {
                Some(c) if !c.is_empty() => c.to_string(),
                _ => format!("line {line}"),
            };
            Ok(LinearInequality::new(coeffs, rhs, Family::Custom(label)))
        })
        .collect()
}

fn join_rationals(v: &[Rational]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

/// `a_0 ... <= b  # label`, the inverse of [`parse_inequalities`].
pub fn format_inequality(ineq: &LinearInequality) -> String {
    format!(
        "{} <= {}  # {}",
        join_rationals(ineq.coeffs()),
        ineq.rhs(),
        describe(ineq.label())
    )
}

pub fn write_inequalities(ineqs: &[LinearInequality]) -> String {
    ineqs.iter().map(|i| format_inequality(i) + "\n").collect()
}

pub fn parse_point(text: &str, dim: usize) -> Result<RationalVector, CliError> {
    const WHAT: &str = "point file";
    let mut lines = content_lines(text);
    let (line, body, _) = lines
        .next()
        .ok_or_else(|| CliError::parse(WHAT, 1, "no coordinates"))?;
    if let Some((extra, _, _)) = lines.next() {
        return Err(CliError::parse(WHAT, extra, "expected a single line of coordinates"));
    }
    let z = body
        .split_whitespace()
        .map(|t| parse_rational(WHAT, line, t))
        .collect::<Result<Vec<_>, _>>()?;
    if z.len() != dim {
        return Err(CliError::parse(
            WHAT,
            line,
            format!("expected {dim} coordinates, found {}", z.len()),
        ));
    }
    Ok(z)
}

pub fn format_point(z: &[Rational]) -> String {
    join_rationals(z)
}

fn set(v: &[usize]) -> String {
    let items: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

/// Human-readable family label, stable across runs.
pub fn describe(f: &Family) -> String {
    match f {
        Family::BasicVertex { vertex } => format!("basic-vertex v={vertex}"),
        Family::BasicEdge { u, v } => format!("basic-edge {u}-{v}"),
        Family::NonNegativity { element } => format!("nonneg z{element}"),
        Family::BalancedBiclique(b) => {
            format!("balanced-biclique R={} S={}", set(b.left()), set(b.right()))
        }
        Family::LiftedBiclique {
            biclique,
            distinguished,
        } => format!(
            "lifted-biclique R={} S={} t={distinguished}",
            set(biclique.left()),
            set(biclique.right())
        ),
        Family::Custom(name) => name.clone(),
    }
}
