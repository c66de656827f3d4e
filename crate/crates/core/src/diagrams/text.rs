//! `[(t1,b2,h^1,+),(t2,b1,h^0,-)] @ abrauer(2)`: one tuple per edge with
//! vertices `t1..tN` (top) and `b1..bN` (bottom), a label name from the input
//! algebra, and `+` when the edge points from the first vertex to the second.

use super::{expand_edges, DiagramElement, DiagramKind, LabeledDiagram};
use crate::error::{Error, Result};
use crate::input_algebra::InputAlgebra;
use crate::kernel::linalg::unit_vector;

fn vertex_name(n: usize, v: usize) -> String {
    if v < n {
        format!("t{}", v + 1)
    } else {
        format!("b{}", v - n + 1)
    }
}

pub fn format_diagram(kind: DiagramKind, a: &InputAlgebra, d: &LabeledDiagram) -> String {
    let n = d.columns();
    let edges: Vec<String> = d
        .edges()
        .into_iter()
        .map(|(u, v, l)| {
            format!(
                "({},{},{},+)",
                vertex_name(n, u),
                vertex_name(n, v),
                a.labels()[l]
            )
        })
        .collect();
    format!("[{}] @ {kind}", edges.join(","))
}

fn parse_kind(s: &str) -> Result<DiagramKind> {
    let bad = || Error::Parse(format!("unknown diagram kind '{s}'"));
    let (head, rest) = s.split_once('(').ok_or_else(bad)?;
    let args: Vec<usize> = rest
        .strip_suffix(')')
        .ok_or_else(bad)?
        .split(',')
        .map(|x| x.trim().parse::<usize>().map_err(|_| bad()))
        .collect::<Result<_>>()?;
    match (head.trim(), args.as_slice()) {
        ("abrauer", [n]) => Ok(DiagramKind::ABrauer { n: *n }),
        ("walled", [r, t]) => Ok(DiagramKind::Walled { r: *r, t: *t }),
        _ => Err(bad()),
    }
}

fn parse_vertex(n: usize, s: &str) -> Result<usize> {
    let bad = || Error::Parse(format!("bad vertex '{s}'"));
    let (row, idx) = s.split_at(1.min(s.len()));
    let i: usize = idx.parse().map_err(|_| bad())?;
    if i == 0 || i > n {
        return Err(bad());
    }
    match row {
        "t" => Ok(i - 1),
        "b" => Ok(n + i - 1),
        _ => Err(bad()),
    }
}

/// Parses the text form into its kind and the (normalized) element it denotes.
pub fn parse_element(text: &str, a: &InputAlgebra) -> Result<(DiagramKind, DiagramElement)> {
    let (body, kind) = text
        .split_once('@')
        .ok_or_else(|| Error::Parse("missing '@ kind(...)'".into()))?;
    let kind = parse_kind(kind.trim())?;
    let n = kind.columns();
    let body = body.trim();
    let inner = body
        .strip_prefix('[')
        .and_then(|b| b.strip_suffix(']'))
        .ok_or_else(|| Error::Parse("edge list must be bracketed".into()))?
        .trim();
    let mut edges = Vec::new();
    let mut seen = vec![false; 2 * n];
    if !inner.is_empty() {
        let tuples = inner
            .strip_prefix('(')
            .and_then(|b| b.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(inner.into()))?;
        for tuple in tuples.split("),") {
            let tuple = tuple.trim().trim_start_matches('(');
            let fields: Vec<&str> = tuple.split(',').map(str::trim).collect();
            let [v, w, label, dir] = fields.as_slice() else {
                return Err(Error::Parse(format!("edge '({tuple})' needs four fields")));
            };
            let (v, w) = (parse_vertex(n, v)?, parse_vertex(n, w)?);
            let l = a
                .labels()
                .iter()
                .position(|x| x == label)
                .ok_or_else(|| Error::Parse(format!("unknown label '{label}'")))?;
            let forward = match *dir {
                "+" => true,
                "-" => false,
                _ => {
                    return Err(Error::Parse(format!(
                        "direction must be + or -, got '{dir}'"
                    )))
                }
            };
            if v == w || seen[v] || seen[w] {
                return Err(Error::Parse(format!("vertex reused in ({tuple})")));
            }
            seen[v] = true;
            seen[w] = true;
            // Label as read from the smaller endpoint.
            let canonical = (v < w) == forward;
            let vec = if canonical {
                unit_vector(a.field(), l)
            } else {
                a.star_basis(l).clone()
            };
            edges.push((v.min(w), v.max(w), vec));
        }
    }
    if seen.iter().any(|s| !s) {
        return Err(Error::Parse("edges do not cover every vertex".into()));
    }
    if let Some(&(u, v, _)) = edges.iter().find(|(u, v, _)| !kind.edge_allowed(*u, *v)) {
        return Err(Error::Parse(format!(
            "edge ({},{}) is illegal for {kind}",
            vertex_name(n, u),
            vertex_name(n, v)
        )));
    }
    edges.sort_by_key(|e| e.0);
    Ok((kind, expand_edges(a.field(), n, &edges, &a.field().one())))
}
