//! Text formats: the canonical edge list, a DIMACS-style reader and DOT output.
//!
//! Edge list: a header line `n m`, then `m` lines `u v` with 0-based labels.
//! Anything after `#` on a line is ignored.
//!
//! DIMACS: `c` comment lines, one `p edge n m` line, then `e u v` lines with
//! 1-based labels.

use std::fmt::Write as _;

use super::{DuplicatePolicy, Graph};
use crate::error::{Error, Result};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn parse_usize(tok: &str, line: usize) -> Result<usize> {
    tok.parse()
        .map_err(|_| parse_err(line, format!("expected a non-negative integer, got {tok:?}")))
}

pub fn parse_edge_list(text: &str, policy: DuplicatePolicy) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(parse_err(line_no, format!("expected two fields, got {}", toks.len())));
        }
        let a = parse_usize(toks[0], line_no)?;
        let b = parse_usize(toks[1], line_no)?;
        if header.is_none() {
            header = Some((a, b));
        } else {
            edges.push((a, b));
        }
    }
    let (n, m) = header.ok_or_else(|| parse_err(0, "missing `n m` header"))?;
    if edges.len() != m {
        return Err(parse_err(0, format!("header declares {m} edges, found {}", edges.len())));
    }
    Graph::build(n, &edges, policy).map(|(g, _)| g)
}

pub fn parse_dimacs(text: &str, policy: DuplicatePolicy) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let toks: Vec<&str> = raw.split_whitespace().collect();
        match toks.first().copied() {
            None | Some("c") => {}
            Some("p") => {
                if toks.len() != 4 || toks[1] != "edge" {
                    return Err(parse_err(line_no, "expected `p edge n m`"));
                }
                header = Some((parse_usize(toks[2], line_no)?, parse_usize(toks[3], line_no)?));
            }
            Some("e") => {
                if header.is_none() {
                    return Err(parse_err(line_no, "edge before `p` line"));
                }
                if toks.len() != 3 {
                    return Err(parse_err(line_no, "expected `e u v`"));
                }
                let u = parse_usize(toks[1], line_no)?;
                let v = parse_usize(toks[2], line_no)?;
                if u == 0 || v == 0 {
                    return Err(parse_err(line_no, "DIMACS labels are 1-based"));
                }
                edges.push((u - 1, v - 1));
            }
            Some(other) => return Err(parse_err(line_no, format!("unknown line type {other:?}"))),
        }
    }
    let (n, m) = header.ok_or_else(|| parse_err(0, "missing `p edge n m` line"))?;
    if edges.len() != m {
        return Err(parse_err(0, format!("header declares {m} edges, found {}", edges.len())));
    }
    Graph::build(n, &edges, policy).map(|(g, _)| g)
}

/// Picks DIMACS when the first meaningful line starts with `p` or `c`.
pub fn parse_auto(text: &str, policy: DuplicatePolicy) -> Result<Graph> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        Some(l) if l.starts_with('p') || l.starts_with('c') || l.starts_with('e') => {
            parse_dimacs(text, policy)
        }
        _ => parse_edge_list(text, policy),
    }
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn write_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

/// DOT export. `fill[v]`, when present, becomes the vertex fill color.
pub fn to_dot(g: &Graph, fill: Option<&[Option<&str>]>) -> String {
    let mut out = String::from("graph G {\n  node [shape=circle];\n");
    for v in g.vertices() {
        match fill.and_then(|f| f.get(v).copied().flatten()) {
            Some(color) => {
                let _ = writeln!(out, "  {v} [style=filled, fillcolor=\"{color}\"];");
            }
            None => {
                let _ = writeln!(out, "  {v};");
            }
        }
    }
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}
