//! The `heg 1` graph file format.
//!
//! Line-oriented UTF-8 text. `#` starts a comment, blank lines are ignored.
//!
//! ```text
//! heg 1
//! vertex <label>
//! edge <label> <v1> <v2>
//! half <label> <v>
//! ```
//!
//! Vertices must be declared before they are used. Declaration order is
//! otherwise irrelevant; the serializer emits vertices, then edges, then
//! half-edges, each sorted by label.

use super::{GraphError, HalfEdgeGraph};

pub(super) fn to_heg_string(g: &HalfEdgeGraph) -> String {
    let mut out = String::from("heg 1\n");
    for v in g.vertices() {
        out.push_str(&format!("vertex {v}\n"));
    }
    for (l, (u, v)) in g.edges() {
        out.push_str(&format!("edge {l} {u} {v}\n"));
    }
    for (l, v) in g.half_edges() {
        out.push_str(&format!("half {l} {v}\n"));
    }
    out
}

pub(super) fn from_heg_str(text: &str) -> Result<HalfEdgeGraph, GraphError> {
    let err = |line: usize, msg: String| GraphError::Parse { line, msg };

    let mut vertices: Vec<String> = Vec::new();
    let mut edges: Vec<(String, String, String)> = Vec::new();
    let mut half_edges: Vec<(String, String)> = Vec::new();
    let mut header_seen = false;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.split_once('#') {
            Some((before, _)) => before,
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        if !header_seen {
            if line != "heg 1" {
                return Err(err(line_no, format!("expected header `heg 1`, got `{line}`")));
            }
            header_seen = true;
            continue;
        }
        let mut tokens = line.split_whitespace();
        let keyword = tokens.next().expect("line is nonempty");
        let rest: Vec<&str> = tokens.collect();
        match keyword {
            "vertex" => {
                let [label] = rest[..] else {
                    return Err(err(line_no, "vertex takes exactly one label".into()));
                };
                vertices.push(label.to_string());
            }
            "edge" => {
                let [label, u, v] = rest[..] else {
                    return Err(err(line_no, "edge takes a label and two endpoints".into()));
                };
                for end in [u, v] {
                    if !vertices.iter().any(|w| w == end) {
                        return Err(err(
                            line_no,
                            format!("edge `{label}` references undeclared vertex `{end}`"),
                        ));
                    }
                }
                edges.push((label.to_string(), u.to_string(), v.to_string()));
            }
            "half" => {
                let [label, v] = rest[..] else {
                    return Err(err(line_no, "half takes a label and one endpoint".into()));
                };
                if !vertices.iter().any(|w| w == v) {
                    return Err(err(
                        line_no,
                        format!("half-edge `{label}` references undeclared vertex `{v}`"),
                    ));
                }
                half_edges.push((label.to_string(), v.to_string()));
            }
            other => {
                return Err(err(line_no, format!("unknown directive `{other}`")));
            }
        }
    }
    if !header_seen {
        return Err(err(1, "missing `heg 1` header".into()));
    }
    HalfEdgeGraph::new(vertices, edges, half_edges)
}
