//! Finite directed multigraphs with named vertices and edges.
//!
//! Edges follow the range/source convention used throughout the crate: an
//! edge travels from its source to its range, and a path `α₁ α₂ … αₙ`
//! composes when `s(αᵢ) = r(αᵢ₊₁)`. Vertices and edges are stored in byte
//! order of their ids, which is the canonical order for every serialization.

use std::collections::hash_map::DefaultHasher;
use std::collections::HashSet;
use std::fmt;
use std::hash::{Hash, Hasher};

use thiserror::Error;

use crate::vertex_set::VertexSet;

/// Content fingerprint of a [`Graph`]; vertex sets carry it to record which
/// graph they belong to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GraphKey(u64);

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub id: String,
    pub source: usize,
    pub range: usize,
}

/// An edge declaration by ids, before it has been resolved against a vertex list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeSpec {
    pub id: String,
    pub source: String,
    pub range: String,
}

impl EdgeSpec {
    pub fn new(id: impl Into<String>, source: impl Into<String>, range: impl Into<String>) -> Self {
        EdgeSpec {
            id: id.into(),
            source: source.into(),
            range: range.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("invalid id {0:?}: ids must be nonempty and contain no whitespace or '#'")]
    InvalidId(String),
    #[error("duplicate vertex id {0}")]
    DuplicateVertex(String),
    #[error("duplicate edge id {0}")]
    DuplicateEdge(String),
    #[error("edge {edge} references unknown vertex {vertex}")]
    UnknownVertex { edge: String, vertex: String },
}

pub(crate) fn is_valid_id(id: &str) -> bool {
    !id.is_empty() && !id.chars().any(|c| c.is_whitespace() || c == '#')
}

#[derive(Clone)]
pub struct Graph {
    vertices: Vec<String>,
    edges: Vec<Edge>,
    in_edges: Vec<Vec<usize>>,
    out_edges: Vec<Vec<usize>>,
    key: GraphKey,
}

impl Graph {
    /// Builds a graph from vertex ids and edge declarations. Input order is
    /// irrelevant: both lists are sorted into canonical byte order.
    pub fn new<V, S>(vertices: V, edges: Vec<EdgeSpec>) -> Result<Graph, GraphError>
    where
        V: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        for v in &vertices {
            if !is_valid_id(v) {
                return Err(GraphError::InvalidId(v.clone()));
            }
        }
        vertices.sort_unstable_by(|a, b| a.as_bytes().cmp(b.as_bytes()));
        if let Some(w) = vertices.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateVertex(w[0].clone()));
        }

        let mut seen = HashSet::with_capacity(edges.len());
        let mut resolved = Vec::with_capacity(edges.len());
        for spec in edges {
            if !is_valid_id(&spec.id) {
                return Err(GraphError::InvalidId(spec.id));
            }
            if !seen.insert(spec.id.clone()) {
                return Err(GraphError::DuplicateEdge(spec.id));
            }
            let lookup = |v: &str| {
                vertices
                    .binary_search_by(|x| x.as_bytes().cmp(v.as_bytes()))
                    .map_err(|_| GraphError::UnknownVertex {
                        edge: spec.id.clone(),
                        vertex: v.to_string(),
                    })
            };
            let source = lookup(&spec.source)?;
            let range = lookup(&spec.range)?;
            resolved.push(Edge {
                id: spec.id,
                source,
                range,
            });
        }
        resolved.sort_unstable_by(|a, b| a.id.as_bytes().cmp(b.id.as_bytes()));
        Ok(Graph::from_sorted(vertices, resolved))
    }

    fn from_sorted(vertices: Vec<String>, edges: Vec<Edge>) -> Graph {
        let n = vertices.len();
        let mut in_edges = vec![Vec::new(); n];
        let mut out_edges = vec![Vec::new(); n];
        for (i, e) in edges.iter().enumerate() {
            in_edges[e.range].push(i);
            out_edges[e.source].push(i);
        }
        let mut hasher = DefaultHasher::new();
        vertices.hash(&mut hasher);
        edges.hash(&mut hasher);
        let key = GraphKey(hasher.finish());
        Graph {
            vertices,
            edges,
            in_edges,
            out_edges,
            key,
        }
    }

    /// The graph with no vertices and no edges.
    pub fn empty() -> Graph {
        Graph::from_sorted(Vec::new(), Vec::new())
    }

    pub fn key(&self) -> GraphKey {
        self.key
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_id(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn edge(&self, e: usize) -> &Edge {
        &self.edges[e]
    }

    pub fn vertex_index(&self, id: &str) -> Option<usize> {
        self.vertices
            .binary_search_by(|x| x.as_bytes().cmp(id.as_bytes()))
            .ok()
    }

    pub fn edge_index(&self, id: &str) -> Option<usize> {
        self.edges
            .binary_search_by(|x| x.id.as_bytes().cmp(id.as_bytes()))
            .ok()
    }

    /// Edges `e` with `r(e) = v`.
    pub fn in_edges(&self, v: usize) -> &[usize] {
        &self.in_edges[v]
    }

    /// Edges `e` with `s(e) = v`.
    pub fn out_edges(&self, v: usize) -> &[usize] {
        &self.out_edges[v]
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.in_edges[v].len()
    }

    /// Whether `v` receives at least one edge.
    pub fn is_receiving(&self, v: usize) -> bool {
        !self.in_edges[v].is_empty()
    }

    pub fn empty_set(&self) -> VertexSet {
        VertexSet::empty(self.key, self.vertices.len())
    }

    pub fn full_set(&self) -> VertexSet {
        VertexSet::full(self.key, self.vertices.len())
    }

    pub fn set_from_indices<I: IntoIterator<Item = usize>>(&self, indices: I) -> VertexSet {
        let mut set = self.empty_set();
        for v in indices {
            set.insert(v);
        }
        set
    }

    /// Resolves vertex ids into a set. Fails with the first unknown id.
    pub fn set_from_ids<I, S>(&self, ids: I) -> Result<VertexSet, String>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut set = self.empty_set();
        for id in ids {
            let id = id.as_ref();
            match self.vertex_index(id) {
                Some(v) => {
                    set.insert(v);
                }
                None => return Err(id.to_string()),
            }
        }
        Ok(set)
    }

    /// Member ids of `set` in canonical order.
    pub fn set_ids<'a>(&'a self, set: &VertexSet) -> Vec<&'a str> {
        set.iter().map(|v| self.vertex_id(v)).collect()
    }

    /// Subgraph on the vertices of `keep`, with every edge whose endpoints
    /// both survive. Ids are preserved.
    pub(crate) fn induced(&self, keep: &VertexSet) -> Graph {
        let mut remap = vec![usize::MAX; self.vertices.len()];
        let mut vertices = Vec::with_capacity(keep.len());
        for v in keep.iter() {
            remap[v] = vertices.len();
            vertices.push(self.vertices[v].clone());
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| keep.contains(e.source) && keep.contains(e.range))
            .map(|e| Edge {
                id: e.id.clone(),
                source: remap[e.source],
                range: remap[e.range],
            })
            .collect();
        Graph::from_sorted(vertices, edges)
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .edges
            .iter()
            .map(|e| {
                format!(
                    "{}: {}->{}",
                    e.id, self.vertices[e.source], self.vertices[e.range]
                )
            })
            .collect();
        f.debug_struct("Graph")
            .field("vertices", &self.vertices)
            .field("edges", &edges)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order_is_bytewise() {
        let g = Graph::new(
            ["w", "V", "u10", "u2"],
            vec![
                EdgeSpec::new("b", "w", "V"),
                EdgeSpec::new("a", "u2", "u10"),
            ],
        )
        .unwrap();
        assert_eq!(g.vertices(), ["V", "u10", "u2", "w"]);
        assert_eq!(g.edges()[0].id, "a");
        assert_eq!(g.edge(1).source, g.vertex_index("w").unwrap());
    }

    #[test]
    fn loops_and_parallel_edges() {
        let g = Graph::new(
            ["v"],
            vec![EdgeSpec::new("f", "v", "v"), EdgeSpec::new("g", "v", "v")],
        )
        .unwrap();
        assert_eq!(g.in_degree(0), 2);
        assert_eq!(g.out_edges(0), [0, 1]);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            Graph::new(["v", "v"], vec![]),
            Err(GraphError::DuplicateVertex("v".into()))
        );
        assert_eq!(
            Graph::new(["v"], vec![EdgeSpec::new("e", "v", "x")]),
            Err(GraphError::UnknownVertex {
                edge: "e".into(),
                vertex: "x".into()
            })
        );
        assert_eq!(
            Graph::new(
                ["v"],
                vec![EdgeSpec::new("e", "v", "v"), EdgeSpec::new("e", "v", "v")]
            ),
            Err(GraphError::DuplicateEdge("e".into()))
        );
        assert!(matches!(
            Graph::new(["a b"], vec![]),
            Err(GraphError::InvalidId(_))
        ));
    }

    #[test]
    fn equal_content_equal_key() {
        let a = Graph::new(["x", "y"], vec![EdgeSpec::new("e", "x", "y")]).unwrap();
        let b = Graph::new(["y", "x"], vec![EdgeSpec::new("e", "x", "y")]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.key(), b.key());
        assert_ne!(a.key(), Graph::empty().key());
    }
}
