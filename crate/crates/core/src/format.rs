//! Canonical line-oriented text format.
//!
//! ```text
//! bipartite a=<int>      | general n=<int>
//! <tail> <head>          one arc per line
//! ```
//!
//! Blank lines and lines starting with `#` are ignored on input. Output
//! lists arcs in canonical order with LF endings, so equal digraphs
//! serialize to identical bytes.

use std::fmt::Write as _;

use crate::digraph::{Builder, Digraph, Kind, VertexId};
use crate::error::GraphError;

pub fn serialize(d: &Digraph) -> String {
    let mut out = String::with_capacity(16 + 8 * d.arc_count());
    match d.kind() {
        Kind::Bipartite { a } => writeln!(out, "bipartite a={a}"),
        Kind::General { n } => writeln!(out, "general n={n}"),
    }
    .expect("writing to a String");
    for (u, v) in d.arcs() {
        writeln!(out, "{} {}", d.label(u), d.label(v)).expect("writing to a String");
    }
    out
}

fn parse_header(line: &str, lineno: usize) -> Result<Kind, GraphError> {
    let syntax = |message: String| GraphError::Syntax { line: lineno, message };
    let mut tokens = line.split_whitespace();
    let (kind, param) = match (tokens.next(), tokens.next(), tokens.next()) {
        (Some(kind), Some(param), None) => (kind, param),
        _ => return Err(syntax(format!("expected header `bipartite a=<int>` or `general n=<int>`, found `{line}`"))),
    };
    let value = |key: &str| -> Result<usize, GraphError> {
        param
            .strip_prefix(key)
            .and_then(|v| v.strip_prefix('='))
            .and_then(|v| v.parse().ok())
            .ok_or_else(|| syntax(format!("expected `{key}=<int>`, found `{param}`")))
    };
    match kind {
        "bipartite" => Ok(Kind::Bipartite { a: value("a")? }),
        "general" => Ok(Kind::General { n: value("n")? }),
        other => Err(syntax(format!("unknown digraph kind `{other}`"))),
    }
}

pub fn parse(text: &str) -> Result<Digraph, GraphError> {
    let mut builder: Option<Builder> = None;
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let at_line = |e: GraphError| match e {
            e @ GraphError::Syntax { .. } => e,
            e => GraphError::AtLine { line: lineno, source: Box::new(e) },
        };
        let Some(b) = builder.as_mut() else {
            builder = Some(Builder::new(parse_header(line, lineno)?).map_err(at_line)?);
            continue;
        };
        let mut tokens = line.split_whitespace();
        let (tail, head) = match (tokens.next(), tokens.next(), tokens.next()) {
            (Some(t), Some(h), None) => (t, h),
            _ => {
                return Err(GraphError::Syntax { line: lineno, message: format!("expected `<tail> <head>`, found `{line}`") })
            }
        };
        let tail: VertexId = tail.parse().map_err(at_line)?;
        let head: VertexId = head.parse().map_err(at_line)?;
        b.add(tail, head).map_err(at_line)?;
    }
    builder
        .map(Builder::finish)
        .ok_or_else(|| GraphError::Syntax { line: text.lines().count().max(1), message: "missing header".into() })
}
