#![allow(dead_code)]

use graph_ideals::{parse_graph, EdgeSpec, Graph, GraphFormat};
use proptest::prelude::*;

pub const FORK: &str = "vertex v1\nvertex v2\nvertex w\nedge a v1 w\nedge b v2 w\n";
pub const VLOOP: &str = "vertex v\nvertex w\nedge e v w\nedge f w w\n";

pub fn graph(text: &str) -> Graph {
    parse_graph(text, GraphFormat::Line).unwrap()
}

pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Graph {
    let edges = pairs
        .iter()
        .enumerate()
        .map(|(i, &(s, r))| EdgeSpec::new(format!("e{i}"), format!("x{s}"), format!("x{r}")))
        .collect();
    Graph::new((0..n).map(|v| format!("x{v}")), edges).unwrap()
}

/// Small multigraphs with loops and parallel edges.
pub fn small_graph(max_vertices: usize, max_edges: usize) -> impl Strategy<Value = Graph> {
    (0..=max_vertices).prop_flat_map(move |n| {
        let pairs = if n == 0 {
            Just(Vec::new()).boxed()
        } else {
            proptest::collection::vec((0..n, 0..n), 0..=max_edges).boxed()
        };
        pairs.prop_map(move |p| from_pairs(n, &p))
    })
}

pub fn ids(g: &Graph, s: &graph_ideals::VertexSet) -> Vec<String> {
    g.set_ids(s).into_iter().map(String::from).collect()
}
