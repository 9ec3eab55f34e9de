//! Line-oriented text formats.
//!
//! Graph: `v <id>` and `e <a> <b>`. Drawing: `v <id>`, `e <eid> <u> <v>`,
//! `x <e1> <e2>`, `r <vid> <eid>...` and `rx <e1>x<e2> <eid>:<vid>...`.
//! Coloring: `c <vid> <color>`. Lists: `l <vid> <color>...`. Blank lines and
//! `#` comments are ignored everywhere.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::str::FromStr;

use crate::drawing::{CrossingPair, DrawingBuilder, EdgeId, HalfEdge, OnePlaneDrawing};
use crate::error::ParseError;
use crate::graph::{Color, Coloring, Graph, ListAssignment, VertexId};

fn records(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("");
        let toks: Vec<&str> = line.split_whitespace().collect();
        (!toks.is_empty()).then_some((i + 1, toks))
    })
}

fn num<T: FromStr>(line: usize, tok: &str, what: &str) -> Result<T, ParseError> {
    tok.parse()
        .map_err(|_| ParseError::new(line, format!("expected {what}, found `{tok}`")))
}

fn arity(line: usize, toks: &[&str], n: usize) -> Result<(), ParseError> {
    if toks.len() != n {
        return Err(ParseError::new(
            line,
            format!("`{}` takes {} fields, found {}", toks[0], n - 1, toks.len() - 1),
        ));
    }
    Ok(())
}

/// Parses a graph. Drawing files are accepted too; their crossing and
/// rotation records are ignored.
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut g = Graph::new();
    for (line, toks) in records(text) {
        match toks[0] {
            "v" => {
                arity(line, &toks, 2)?;
                g.insert_vertex(VertexId(num(line, toks[1], "vertex id")?));
            }
            "e" => {
                let (a, b) = match toks.len() {
                    3 => (toks[1], toks[2]),
                    4 => (toks[2], toks[3]),
                    _ => return Err(ParseError::new(line, "`e` takes 2 or 3 fields")),
                };
                let a = VertexId(num(line, a, "vertex id")?);
                let b = VertexId(num(line, b, "vertex id")?);
                if a == b {
                    return Err(ParseError::new(line, format!("loop at vertex {a}")));
                }
                g.insert_vertex(a);
                g.insert_vertex(b);
                if !g.insert_edge(a, b).expect("endpoints inserted") {
                    return Err(ParseError::new(line, format!("duplicate edge {a}-{b}")));
                }
            }
            "x" | "r" | "rx" => {}
            other => return Err(ParseError::new(line, format!("unknown record `{other}`"))),
        }
    }
    Ok(g)
}

pub fn write_graph(g: &Graph) -> String {
    let mut s = String::new();
    for v in g.vertices() {
        writeln!(s, "v {v}").unwrap();
    }
    for (a, b) in g.edges() {
        writeln!(s, "e {a} {b}").unwrap();
    }
    s
}

fn parse_pair(line: usize, tok: &str) -> Result<CrossingPair, ParseError> {
    let (a, b) = tok
        .split_once('x')
        .ok_or_else(|| ParseError::new(line, format!("expected <e1>x<e2>, found `{tok}`")))?;
    Ok(CrossingPair::new(
        EdgeId(num(line, a, "edge id")?),
        EdgeId(num(line, b, "edge id")?),
    ))
}

fn parse_half(line: usize, tok: &str) -> Result<HalfEdge, ParseError> {
    let (e, v) = tok
        .split_once(':')
        .ok_or_else(|| ParseError::new(line, format!("expected <eid>:<vid>, found `{tok}`")))?;
    Ok(HalfEdge {
        edge: EdgeId(num(line, e, "edge id")?),
        end: VertexId(num(line, v, "vertex id")?),
    })
}

/// Parses a drawing. The result is assembled but not validated.
pub fn parse_drawing(text: &str) -> Result<OnePlaneDrawing, ParseError> {
    let mut b = DrawingBuilder::new();
    let mut ids = BTreeSet::new();
    let mut pairs = BTreeSet::new();
    for (line, toks) in records(text) {
        match toks[0] {
            "v" => {
                arity(line, &toks, 2)?;
                b.vertex(VertexId(num(line, toks[1], "vertex id")?));
            }
            "e" => {
                arity(line, &toks, 4)?;
                let e = EdgeId(num(line, toks[1], "edge id")?);
                let u = VertexId(num(line, toks[2], "vertex id")?);
                let v = VertexId(num(line, toks[3], "vertex id")?);
                if u == v {
                    return Err(ParseError::new(line, format!("loop at vertex {u}")));
                }
                if !ids.insert(e) {
                    return Err(ParseError::new(line, format!("edge id {e} used twice")));
                }
                if !pairs.insert((u.min(v), u.max(v))) {
                    return Err(ParseError::new(line, format!("duplicate edge {u}-{v}")));
                }
                b.edge(e, u, v);
            }
            "x" => {
                arity(line, &toks, 3)?;
                b.crossing(
                    EdgeId(num(line, toks[1], "edge id")?),
                    EdgeId(num(line, toks[2], "edge id")?),
                );
            }
            "r" => {
                if toks.len() < 2 {
                    return Err(ParseError::new(line, "`r` needs a vertex"));
                }
                let v = VertexId(num(line, toks[1], "vertex id")?);
                let order = toks[2..]
                    .iter()
                    .map(|t| num(line, t, "edge id").map(EdgeId))
                    .collect::<Result<_, _>>()?;
                b.rotation(v, order);
            }
            "rx" => {
                if toks.len() < 2 {
                    return Err(ParseError::new(line, "`rx` needs a crossing"));
                }
                let c = parse_pair(line, toks[1])?;
                let order = toks[2..]
                    .iter()
                    .map(|t| parse_half(line, t))
                    .collect::<Result<_, _>>()?;
                b.crossing_rotation(c, order);
            }
            other => return Err(ParseError::new(line, format!("unknown record `{other}`"))),
        }
    }
    b.build().map_err(|e| ParseError::new(0, e.to_string()))
}

pub fn write_drawing(d: &OnePlaneDrawing) -> String {
    let mut s = String::new();
    for v in d.graph().vertices() {
        writeln!(s, "v {v}").unwrap();
    }
    for (e, u, v) in d.edges() {
        writeln!(s, "e {e} {u} {v}").unwrap();
    }
    for c in d.crossings() {
        writeln!(s, "x {} {}", c.first(), c.second()).unwrap();
    }
    for (v, r) in d.rotations() {
        write!(s, "r {v}").unwrap();
        for e in r {
            write!(s, " {e}").unwrap();
        }
        s.push('\n');
    }
    for (c, r) in d.crossing_rotations() {
        write!(s, "rx {c}").unwrap();
        for h in r {
            write!(s, " {h}").unwrap();
        }
        s.push('\n');
    }
    s
}

pub fn parse_coloring(text: &str) -> Result<Coloring, ParseError> {
    let mut c = Coloring::new();
    for (line, toks) in records(text) {
        if toks[0] != "c" {
            return Err(ParseError::new(line, format!("unknown record `{}`", toks[0])));
        }
        arity(line, &toks, 3)?;
        let v = VertexId(num(line, toks[1], "vertex id")?);
        let col: Color = num(line, toks[2], "color")?;
        if col == 0 {
            return Err(ParseError::new(line, "colors are positive integers"));
        }
        if c.set(v, col).is_some() {
            return Err(ParseError::new(line, format!("vertex {v} colored twice")));
        }
    }
    Ok(c)
}

pub fn write_coloring(c: &Coloring) -> String {
    let mut s = String::new();
    for (v, col) in c.iter() {
        writeln!(s, "c {v} {col}").unwrap();
    }
    s
}

pub fn parse_lists(text: &str) -> Result<ListAssignment, ParseError> {
    let mut lists = BTreeMap::new();
    for (line, toks) in records(text) {
        if toks[0] != "l" {
            return Err(ParseError::new(line, format!("unknown record `{}`", toks[0])));
        }
        if toks.len() < 3 {
            return Err(ParseError::new(line, "a list needs a vertex and at least one color"));
        }
        let v = VertexId(num(line, toks[1], "vertex id")?);
        let mut set = BTreeSet::new();
        for t in &toks[2..] {
            let col: Color = num(line, t, "color")?;
            if col == 0 {
                return Err(ParseError::new(line, "colors are positive integers"));
            }
            if !set.insert(col) {
                return Err(ParseError::new(line, format!("color {col} repeated in list")));
            }
        }
        if lists.insert(v, set).is_some() {
            return Err(ParseError::new(line, format!("vertex {v} has two lists")));
        }
    }
    let mut out = ListAssignment::new();
    for (v, l) in lists {
        out.set(v, l);
    }
    Ok(out)
}

pub fn write_lists(l: &ListAssignment) -> String {
    let mut s = String::new();
    for (v, list) in l.iter() {
        write!(s, "l {v}").unwrap();
        for c in list {
            write!(s, " {c}").unwrap();
        }
        s.push('\n');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_parse_errors_carry_line_numbers() {
        let err = parse_graph("v 0\n# comment\ne 0 0\n").unwrap_err();
        assert_eq!(err.line, 3);
        let err = parse_graph("e 0 1\ne 1 0\n").unwrap_err();
        assert_eq!(err.line, 2);
        assert!(err.message.contains("duplicate"));
        assert!(parse_graph("q 1\n").is_err());
    }

    #[test]
    fn graph_roundtrip() {
        let g = parse_graph("v 5\ne 0 1\ne 1 2 # tail\n").unwrap();
        assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
        assert_eq!(g.vertex_count(), 4);
    }

    #[test]
    fn drawing_roundtrip() {
        let text = "e 0 0 2\ne 1 1 3\nx 0 1\n";
        let d = parse_drawing(text).unwrap();
        assert!(d.is_valid());
        let again = parse_drawing(&write_drawing(&d)).unwrap();
        assert_eq!(again, d);
    }

    #[test]
    fn lists_and_colorings() {
        let l = parse_lists("l 0 1 2 3\nl 1 4\n").unwrap();
        assert_eq!(parse_lists(&write_lists(&l)).unwrap(), l);
        assert!(parse_lists("l 0 1 1\n").is_err());
        let c = parse_coloring("c 0 1\nc 1 2\n").unwrap();
        assert_eq!(parse_coloring(&write_coloring(&c)).unwrap(), c);
        assert!(parse_coloring("c 0 0\n").is_err());
    }
}
