//! Graph ingestion and export: edge lists, JSON, graph6 and DOT.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::graph::{EdgeId, Multigraph, Orientation, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Auto,
    EdgeList,
    Json,
    Graph6,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(Format::Auto),
            "edgelist" | "edge-list" | "txt" => Ok(Format::EdgeList),
            "json" => Ok(Format::Json),
            "graph6" | "g6" => Ok(Format::Graph6),
            _ => Err(Error::Lookup(format!("format {s}"))),
        }
    }
}

fn parse_err<T>(location: impl Into<String>, message: impl Into<String>) -> Result<T> {
    Err(Error::Parse { location: location.into(), message: message.into() })
}

pub fn parse_graph(text: &str, format: Format) -> Result<Multigraph> {
    match format {
        Format::EdgeList => parse_edge_list(text),
        Format::Json => parse_json(text),
        Format::Graph6 => parse_graph6(text),
        Format::Auto => parse_graph(text, sniff(text)),
    }
}

fn sniff(text: &str) -> Format {
    let t = text.trim_start();
    if t.starts_with('{') {
        return Format::Json;
    }
    let first = t.lines().next().unwrap_or("");
    let tokens: Vec<&str> = first.split_whitespace().collect();
    if tokens.len() == 2 && tokens.iter().all(|x| x.parse::<u64>().is_ok()) {
        Format::EdgeList
    } else {
        Format::Graph6
    }
}

/// `n m` on the first line, then `m` lines `u v` with 0-based indices.
/// Blank lines and lines starting with `#` are skipped.
pub fn parse_edge_list(text: &str) -> Result<Multigraph> {
    let mut lines =
        text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let Some((hl, header)) = lines.next() else {
        return parse_err("line 1", "missing `n m` header");
    };
    let (n, m) = two_numbers(hl, header)?;
    let mut g = Multigraph::with_vertices(n as usize);
    let mut count = 0;
    for (ln, line) in lines {
        let (u, v) = two_numbers(ln, line)?;
        if u >= n || v >= n {
            return parse_err(format!("line {ln}"), format!("vertex index out of range 0..{n}"));
        }
        if u == v {
            return Err(Error::Loop { location: format!("line {ln}") });
        }
        g.add_edge(VertexId(u as u32), VertexId(v as u32))?;
        count += 1;
    }
    if count != m {
        return parse_err("end of input", format!("header announces {m} edges, found {count}"));
    }
    Ok(g)
}

fn two_numbers(ln: usize, line: &str) -> Result<(u64, u64)> {
    let tokens: Vec<&str> = line.split_whitespace().collect();
    let parsed: Vec<u64> = tokens.iter().filter_map(|t| t.parse().ok()).collect();
    if tokens.len() != 2 || parsed.len() != 2 {
        return parse_err(format!("line {ln}"), format!("expected two nonnegative integers, got `{line}`"));
    }
    if parsed[0] > u32::MAX as u64 || parsed[1] > u32::MAX as u64 {
        return parse_err(format!("line {ln}"), "number too large");
    }
    Ok((parsed[0], parsed[1]))
}

pub fn to_edge_list(g: &Multigraph) -> String {
    let d = g.dense();
    let mut out = format!("{} {}\n", d.n, d.edges.len());
    for &(a, b) in &d.edges {
        let _ = writeln!(out, "{a} {b}");
    }
    out
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
enum JsonEdge {
    Full { id: u32, u: u32, v: u32 },
    Pair([u32; 2]),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct JsonGraph {
    vertices: Vec<u32>,
    edges: Vec<JsonEdge>,
}

impl JsonGraph {
    fn from_graph(g: &Multigraph) -> Self {
        JsonGraph {
            vertices: g.vertices().iter().map(|v| v.0).collect(),
            edges: g.edges().iter().map(|e| JsonEdge::Full { id: e.id.0, u: e.u.0, v: e.v.0 }).collect(),
        }
    }

    fn into_graph(self) -> Result<Multigraph> {
        let mut g = Multigraph::new();
        for v in self.vertices {
            g.insert_vertex(VertexId(v))?;
        }
        let explicit: Vec<u32> = self
            .edges
            .iter()
            .filter_map(|e| match e {
                JsonEdge::Full { id, .. } => Some(*id),
                JsonEdge::Pair(_) => None,
            })
            .collect();
        let mut next = explicit.iter().max().map_or(0, |m| m + 1);
        for (k, e) in self.edges.into_iter().enumerate() {
            let (id, u, v) = match e {
                JsonEdge::Full { id, u, v } => (id, u, v),
                JsonEdge::Pair([u, v]) => {
                    next += 1;
                    (next - 1, u, v)
                }
            };
            if u == v {
                return Err(Error::Loop { location: format!("edges[{k}]") });
            }
            g.insert_edge(EdgeId(id), VertexId(u), VertexId(v))
                .map_err(|err| Error::Parse { location: format!("edges[{k}]"), message: err.to_string() })?;
        }
        Ok(g)
    }
}

/// `{"vertices": [...], "edges": [{"id", "u", "v"}, ...]}`; edges may also be
/// bare `[u, v]` pairs, which receive fresh ids in order.
pub fn parse_json(text: &str) -> Result<Multigraph> {
    let raw: JsonGraph = serde_json::from_str(text).map_err(|e| Error::Parse {
        location: format!("line {}, column {}", e.line(), e.column()),
        message: e.to_string(),
    })?;
    raw.into_graph()
}

pub fn to_json(g: &Multigraph) -> String {
    serde_json::to_string_pretty(&JsonGraph::from_graph(g)).expect("graphs serialise")
}

/// `#[serde(with = "z3flow::io::json_graph")]` for `Multigraph` fields.
pub mod json_graph {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(g: &Multigraph, s: S) -> std::result::Result<S::Ok, S::Error> {
        JsonGraph::from_graph(g).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Multigraph, D::Error> {
        JsonGraph::deserialize(d)?.into_graph().map_err(serde::de::Error::custom)
    }
}

/// Decodes one graph6 line (an optional `>>graph6<<` header is skipped).
pub fn parse_graph6(text: &str) -> Result<Multigraph> {
    let line = text.trim();
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    if let Some(pos) = bytes.iter().position(|&b| !(63..=126).contains(&b)) {
        return parse_err(format!("offset {pos}"), "byte outside the graph6 range 63..=126");
    }
    let (n, mut pos) = match bytes {
        [] => return parse_err("offset 0", "empty graph6 string"),
        [126, 126, rest @ ..] if rest.len() >= 6 => (sextets(&rest[..6]), 8),
        [126, rest @ ..] if rest.len() >= 3 => (sextets(&rest[..3]), 4),
        [126, ..] => return parse_err("offset 1", "truncated order field"),
        [b, ..] => ((b - 63) as u64, 1),
    };
    let n = n as usize;
    let need = (n * n.saturating_sub(1) / 2).div_ceil(6);
    if bytes.len() - pos != need {
        return parse_err(
            format!("offset {pos}"),
            format!("expected {need} adjacency bytes, found {}", bytes.len() - pos),
        );
    }
    let mut g = Multigraph::with_vertices(n);
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[pos + bit / 6] - 63;
            if byte >> (5 - bit % 6) & 1 == 1 {
                g.add_edge(VertexId(i as u32), VertexId(j as u32))?;
            }
            bit += 1;
        }
    }
    pos += need;
    debug_assert_eq!(pos, bytes.len());
    Ok(g)
}

fn sextets(bytes: &[u8]) -> u64 {
    bytes.iter().fold(0, |acc, &b| acc << 6 | (b - 63) as u64)
}

/// graph6 encoding of a simple graph, vertices in ascending id order.
pub fn to_graph6(g: &Multigraph) -> Result<String> {
    if !g.is_simple() {
        return domain("graph6 encodes simple graphs only");
    }
    let d = g.dense();
    let n = d.n;
    let mut out: Vec<u8> = Vec::new();
    match n {
        0..=62 => out.push(n as u8 + 63),
        63..=258_047 => {
            out.push(126);
            out.extend((0..3).rev().map(|k| ((n >> (6 * k)) & 63) as u8 + 63));
        }
        _ => {
            out.extend([126, 126]);
            out.extend((0..6).rev().map(|k| ((n >> (6 * k)) & 63) as u8 + 63));
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | (d.mult(i, j) > 0) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 is ASCII"))
}

/// DOT rendering; with an orientation the graph becomes a digraph.
pub fn to_dot(g: &Multigraph, orientation: Option<&Orientation>) -> String {
    let (kind, arrow) = if orientation.is_some() { ("digraph", "->") } else { ("graph", "--") };
    let mut out = format!("{kind} G {{\n");
    for v in g.vertices() {
        let _ = writeln!(out, "  {v};");
    }
    for e in g.edges() {
        let (t, h) = orientation.and_then(|o| o.arc(e.id)).unwrap_or((e.u, e.v));
        let _ = writeln!(out, "  {t} {arrow} {h} [label=\"{}\"];", e.id);
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;
    use crate::catalog;

    #[test]
    fn edge_list_examples() {
        let digon = parse_graph("2 2\n0 1\n0 1\n", Format::Auto).unwrap();
        assert_eq!(digon.multiplicity(VertexId(0), VertexId(1)), 2);
        assert!(
            matches!(parse_graph("2 1\n0 0\n", Format::Auto), Err(Error::Loop { location }) if location == "line 2")
        );
        assert!(matches!(parse_edge_list("2 1\n0 5\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_edge_list("2 2\n0 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_edge_list("x y\n"), Err(Error::Parse { location, .. }) if location == "line 1"));
    }

    #[test]
    fn graph6_examples() {
        let k4 = parse_graph("C~", Format::Auto).unwrap();
        assert!(is_isomorphic(&k4, &catalog::complete(4)));
        assert_eq!(to_graph6(&catalog::complete(4)).unwrap(), "C~");
        let g3 = catalog::g3();
        assert_eq!(parse_graph6(&to_graph6(&g3).unwrap()).unwrap().dense().edges.len(), 11);
        assert!(to_graph6(&catalog::cycle(2)).is_err());
        assert!(parse_graph6("C").is_err());
        let big = catalog::cycle(70);
        assert!(is_isomorphic(&parse_graph6(&to_graph6(&big).unwrap()).unwrap(), &big));
    }

    #[test]
    fn json_round_trip_keeps_ids() {
        let mut g = catalog::g3();
        g.remove_edge(EdgeId(3));
        let back = parse_graph(&to_json(&g), Format::Auto).unwrap();
        assert_eq!(back.edges(), g.edges());
        assert_eq!(back.vertices(), g.vertices());
        let pairs = parse_json(r#"{"vertices":[0,1,2],"edges":[[0,1],[1,2],[0,1]]}"#).unwrap();
        assert_eq!(pairs.size(), 3);
        assert!(matches!(parse_json(r#"{"vertices":[0],"edges":[[0,0]]}"#), Err(Error::Loop { .. })));
        assert!(matches!(parse_json("{"), Err(Error::Parse { .. })));
    }

    #[test]
    fn edge_list_round_trip() {
        let g = catalog::wheel(5);
        let back = parse_edge_list(&to_edge_list(&g)).unwrap();
        assert_eq!(back.edges(), g.edges());
    }

    #[test]
    fn dot_renders_orientation() {
        let c3 = catalog::cycle(3);
        let o = crate::orientation::mod3_orientation(&c3).unwrap();
        let dot = to_dot(&c3, Some(&o));
        assert!(dot.starts_with("digraph"));
        assert_eq!(dot.matches("->").count(), 3);
        assert!(to_dot(&c3, None).contains("--"));
    }
}
