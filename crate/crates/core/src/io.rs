//! Plain-text graph and cycle files.
//!
//! A graph file starts with a header line `n m`, followed by exactly `m`
//! edge lines `u v` (`u != v`, both below `n`). Blank lines are ignored.
//! [`write_graph`] emits the canonical form: `u < v`, edges sorted.
//!
//! A cycle file holds whitespace-separated vertex ids in cycle order.

use sha2::{Digest, Sha256};

use crate::certificate::Cycle;
use crate::error::{Error, Result};
use crate::graph::Graph;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn parse_pair(line_no: usize, line: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace();
    let mut next = |what: &str| -> Result<usize> {
        let tok = it.next().ok_or_else(|| parse_err(line_no, format!("missing {what}")))?;
        tok.parse()
            .map_err(|_| parse_err(line_no, format!("invalid {what} {tok:?}")))
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if it.next().is_some() {
        return Err(parse_err(line_no, "trailing fields"));
    }
    Ok((a, b))
}

pub fn read_graph(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "missing header"))?;
    let (n, m) = parse_pair(hline, header)?;
    let mut seen = std::collections::HashSet::with_capacity(m);
    let mut edges = Vec::with_capacity(m);
    for (line_no, line) in lines {
        let (u, v) = parse_pair(line_no, line)?;
        if u == v {
            return Err(parse_err(line_no, format!("loop at vertex {u}")));
        }
        if u >= n || v >= n {
            return Err(parse_err(line_no, format!("vertex id out of range for n = {n}")));
        }
        let key = (u.min(v), u.max(v));
        if !seen.insert(key) {
            return Err(parse_err(line_no, format!("duplicate edge {} {}", key.0, key.1)));
        }
        edges.push(key);
    }
    if edges.len() != m {
        return Err(parse_err(
            hline,
            format!("header announces {m} edges, found {}", edges.len()),
        ));
    }
    Graph::from_edges(n, edges)
}

pub fn write_graph(g: &Graph) -> String {
    use std::fmt::Write;
    let mut out = String::with_capacity(16 + g.edge_count() * 12);
    writeln!(out, "{} {}", g.n(), g.edge_count()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// SHA-256 of the canonical text form, hex encoded.
pub fn graph_hash(g: &Graph) -> String {
    hex::encode(Sha256::digest(write_graph(g).as_bytes()))
}

pub fn read_cycle(text: &str) -> Result<Cycle> {
    let mut verts = Vec::new();
    for (i, line) in text.lines().enumerate() {
        for tok in line.split_whitespace() {
            let v = tok
                .parse()
                .map_err(|_| parse_err(i + 1, format!("invalid vertex id {tok:?}")))?;
            verts.push(v);
        }
    }
    Ok(Cycle::new(verts))
}

pub fn write_cycle(c: &Cycle) -> String {
    let mut s = c.verts.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
    s.push('\n');
    s
}
