//! Text encodings of graphs: the line-based `.graph` format, the structured
//! JSON format, and a DOT rendering.
//!
//! Line-based format, one declaration per line, `#` comments to end of line:
//!
//! ```text
//! vertex <id>
//! edge <id> <source-id> <range-id>
//! ```
//!
//! Structured format: `{"vertices": [ids...], "edges": [{"id", "source", "range"}...]}`.

use std::collections::HashMap;
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{is_valid_id, EdgeSpec, Graph};
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    Line,
    Structured,
}

impl GraphFormat {
    /// `.json` selects the structured format; anything else is line-based.
    pub fn from_path(path: &Path) -> GraphFormat {
        match path.extension().and_then(|e| e.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("json") => GraphFormat::Structured,
            _ => GraphFormat::Line,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Location {
    Line(usize),
    LineColumn { line: usize, column: usize },
    Field(String),
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Location::Line(l) => write!(f, "line {l}"),
            Location::LineColumn { line, column } => write!(f, "line {line}, column {column}"),
            Location::Field(path) => write!(f, "{path}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Malformed(String),
    InvalidId,
    DuplicateVertex,
    DuplicateEdge,
    UnknownVertex,
    Json(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub struct ParseError {
    pub location: Location,
    pub token: String,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match &self.kind {
            ParseErrorKind::Malformed(reason) => format!("malformed declaration ({reason})"),
            ParseErrorKind::InvalidId => "invalid id".to_string(),
            ParseErrorKind::DuplicateVertex => "duplicate vertex id".to_string(),
            ParseErrorKind::DuplicateEdge => "duplicate edge id".to_string(),
            ParseErrorKind::UnknownVertex => "unknown vertex".to_string(),
            ParseErrorKind::Json(msg) => format!("invalid JSON ({msg})"),
        };
        write!(f, "{}: {} {:?}", self.location, what, self.token)
    }
}

impl ParseError {
    fn new(location: Location, token: impl Into<String>, kind: ParseErrorKind) -> Self {
        ParseError {
            location,
            token: token.into(),
            kind,
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphDoc {
    vertices: Vec<String>,
    edges: Vec<EdgeDoc>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EdgeDoc {
    id: String,
    source: String,
    range: String,
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph, ParseError> {
    match format {
        GraphFormat::Line => parse_line_format(text),
        GraphFormat::Structured => parse_structured(text),
    }
}

struct Decls {
    vertices: Vec<(String, Location)>,
    edges: Vec<(EdgeSpec, Location)>,
}

impl Decls {
    fn resolve(self) -> Result<Graph, ParseError> {
        let mut vertex_at = HashMap::with_capacity(self.vertices.len());
        for (id, loc) in &self.vertices {
            if !is_valid_id(id) {
                return Err(ParseError::new(loc.clone(), id, ParseErrorKind::InvalidId));
            }
            if vertex_at.insert(id.as_str(), loc).is_some() {
                return Err(ParseError::new(
                    loc.clone(),
                    id,
                    ParseErrorKind::DuplicateVertex,
                ));
            }
        }
        let mut edge_seen = HashMap::with_capacity(self.edges.len());
        for (spec, loc) in &self.edges {
            if !is_valid_id(&spec.id) {
                return Err(ParseError::new(
                    loc.clone(),
                    &spec.id,
                    ParseErrorKind::InvalidId,
                ));
            }
            if edge_seen.insert(spec.id.as_str(), ()).is_some() {
                return Err(ParseError::new(
                    loc.clone(),
                    &spec.id,
                    ParseErrorKind::DuplicateEdge,
                ));
            }
            for endpoint in [&spec.source, &spec.range] {
                if !vertex_at.contains_key(endpoint.as_str()) {
                    return Err(ParseError::new(
                        loc.clone(),
                        endpoint,
                        ParseErrorKind::UnknownVertex,
                    ));
                }
            }
        }
        let vertices = self.vertices.into_iter().map(|(id, _)| id);
        let edges = self.edges.into_iter().map(|(spec, _)| spec).collect();
        Graph::new(vertices, edges).map_err(|e| {
            // every graph-level failure has been reported above
            unreachable!("validated declarations rejected: {e}")
        })
    }
}

fn parse_line_format(text: &str) -> Result<Graph, ParseError> {
    let mut decls = Decls {
        vertices: Vec::new(),
        edges: Vec::new(),
    };
    for (i, raw) in text.lines().enumerate() {
        let loc = Location::Line(i + 1);
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match tokens.as_slice() {
            [] => {}
            ["vertex", id] => decls.vertices.push((id.to_string(), loc)),
            ["edge", id, source, range] => {
                decls.edges.push((EdgeSpec::new(*id, *source, *range), loc))
            }
            ["vertex", ..] => {
                return Err(ParseError::new(
                    loc,
                    content.trim(),
                    ParseErrorKind::Malformed("expected `vertex <id>`".into()),
                ))
            }
            ["edge", ..] => {
                return Err(ParseError::new(
                    loc,
                    content.trim(),
                    ParseErrorKind::Malformed("expected `edge <id> <source> <range>`".into()),
                ))
            }
            [keyword, ..] => {
                return Err(ParseError::new(
                    loc,
                    *keyword,
                    ParseErrorKind::Malformed("unknown keyword".into()),
                ))
            }
        }
    }
    decls.resolve()
}

fn parse_structured(text: &str) -> Result<Graph, ParseError> {
    let doc: GraphDoc = serde_json::from_str(text).map_err(|e| {
        ParseError::new(
            Location::LineColumn {
                line: e.line(),
                column: e.column(),
            },
            "",
            ParseErrorKind::Json(e.to_string()),
        )
    })?;
    let decls = Decls {
        vertices: doc
            .vertices
            .into_iter()
            .enumerate()
            .map(|(i, v)| (v, Location::Field(format!("vertices[{i}]"))))
            .collect(),
        edges: doc
            .edges
            .into_iter()
            .enumerate()
            .map(|(i, e)| {
                (
                    EdgeSpec::new(e.id, e.source, e.range),
                    Location::Field(format!("edges[{i}]")),
                )
            })
            .collect(),
    };
    decls.resolve()
}

pub fn serialize_graph(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::Line => to_line_format(g),
        GraphFormat::Structured => to_structured(g),
    }
}

fn to_line_format(g: &Graph) -> String {
    let mut out = String::new();
    for v in g.vertices() {
        out.push_str("vertex ");
        out.push_str(v);
        out.push('\n');
    }
    for e in g.edges() {
        out.push_str(&format!(
            "edge {} {} {}\n",
            e.id,
            g.vertex_id(e.source),
            g.vertex_id(e.range)
        ));
    }
    out
}

fn to_structured(g: &Graph) -> String {
    let doc = GraphDoc {
        vertices: g.vertices().to_vec(),
        edges: g
            .edges()
            .iter()
            .map(|e| EdgeDoc {
                id: e.id.clone(),
                source: g.vertex_id(e.source).to_string(),
                range: g.vertex_id(e.range).to_string(),
            })
            .collect(),
    };
    let mut out = serde_json::to_string_pretty(&doc).expect("graph document serializes");
    out.push('\n');
    out
}

fn dot_quote(id: &str) -> String {
    let mut out = String::with_capacity(id.len() + 2);
    out.push('"');
    for c in id.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

/// DOT digraph listing all vertices, then all edges labelled by id.
pub fn to_dot(g: &Graph) -> String {
    let mut out = String::from("digraph G {\n");
    for v in g.vertices() {
        out.push_str(&format!("  {};\n", dot_quote(v)));
    }
    for e in g.edges() {
        out.push_str(&format!(
            "  {} -> {} [label={}];\n",
            dot_quote(g.vertex_id(e.source)),
            dot_quote(g.vertex_id(e.range)),
            dot_quote(&e.id)
        ));
    }
    out.push_str("}\n");
    out
}

/// `{a, b, c}`, or `∅` for the empty set.
pub fn format_set(g: &Graph, set: &VertexSet) -> String {
    if set.is_empty() {
        return "∅".to_string();
    }
    format!("{{{}}}", g.set_ids(set).join(", "))
}
