//! Deterministic graph families: finite truncations of the binary-tree
//! example with loops, its chain quotient, and seeded random graphs.
//!
//! Random graphs use ChaCha8 (`rand_chacha::ChaCha8Rng`) seeded through
//! `SeedableRng::seed_from_u64`. For each edge in order the generator draws
//! `random_bool(loop_prob)`; a loop then takes one `random_range(0..n)` draw,
//! any other edge takes two (source, then range). Vertices are `u0..u{n-1}`
//! and edges `e0..e{m-1}`. Ensembles draw, per graph, a vertex count, an
//! edge count and a sub-seed from a ChaCha8 stream seeded by the ensemble
//! seed.

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{EdgeSpec, Graph};
use crate::ideals::SatHerSet;

/// Default vertex cap for [`gen_figure1`]: depth 15 at most.
pub const DEFAULT_FIGURE1_MAX_VERTICES: usize = 1 << 16;

fn tree_vertex(bits: &str) -> String {
    if bits.is_empty() {
        "v".to_string()
    } else {
        format!("v_{bits}")
    }
}

fn tree_loop(bits: &str) -> String {
    if bits.is_empty() {
        "f".to_string()
    } else {
        format!("f_{bits}")
    }
}

/// Binary strings of length at most `depth`, shortest first.
fn bitstrings(depth: u32) -> Vec<String> {
    let mut out = vec![String::new()];
    let mut level = vec![String::new()];
    for _ in 0..depth {
        level = level
            .iter()
            .flat_map(|w| [format!("{w}0"), format!("{w}1")])
            .collect();
        out.extend(level.iter().cloned());
    }
    out
}

pub fn gen_figure1(depth: u32) -> Result<(Graph, SatHerSet)> {
    gen_figure1_capped(depth, DEFAULT_FIGURE1_MAX_VERTICES)
}

/// Depth-`depth` truncation of the binary tree whose vertex `v_w` carries a
/// loop `f_w` and receives an edge `e_{wb}` from each child `v_{wb}`.
///
/// Also returns the truncation of the set `H`: every vertex whose string
/// contains a `0`.
pub fn gen_figure1_capped(depth: u32, max_vertices: usize) -> Result<(Graph, SatHerSet)> {
    if depth == 0 {
        return Err(Error::InvalidParameter("depth must be at least 1".into()));
    }
    let vertex_count = 1usize.checked_shl(depth + 1).map_or(usize::MAX, |n| n - 1);
    if vertex_count > max_vertices {
        return Err(Error::CapacityExceeded {
            what: "figure1 vertex",
            limit: max_vertices,
            requested: vertex_count,
        });
    }
    let words = bitstrings(depth);
    let mut edges = Vec::with_capacity(2 * words.len());
    for w in &words {
        edges.push(EdgeSpec::new(tree_loop(w), tree_vertex(w), tree_vertex(w)));
        if !w.is_empty() {
            let parent = &w[..w.len() - 1];
            edges.push(EdgeSpec::new(
                format!("e_{w}"),
                tree_vertex(w),
                tree_vertex(parent),
            ));
        }
    }
    let g = Graph::new(words.iter().map(|w| tree_vertex(w)), edges)?;
    let h = g
        .set_from_ids(
            words
                .iter()
                .filter(|w| w.contains('0'))
                .map(|w| tree_vertex(w)),
        )
        .expect("tree vertices exist");
    let h = SatHerSet::new_exact(&g, h).map_err(|e| {
        Error::InvariantViolation(format!("truncated H is not saturated hereditary: {e}"))
    })?;
    Ok((g, h))
}

/// The chain `v ← v_1 ← v_11 ← …` on `n` vertices, each with a loop.
pub fn gen_chain_loops(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "chain length must be at least 1".into(),
        ));
    }
    let words: Vec<String> = (0..n).map(|k| "1".repeat(k)).collect();
    let mut edges = Vec::with_capacity(2 * n);
    for (k, w) in words.iter().enumerate() {
        edges.push(EdgeSpec::new(tree_loop(w), tree_vertex(w), tree_vertex(w)));
        if k > 0 {
            edges.push(EdgeSpec::new(
                format!("e_{w}"),
                tree_vertex(w),
                tree_vertex(&words[k - 1]),
            ));
        }
    }
    Ok(Graph::new(words.iter().map(|w| tree_vertex(w)), edges)?)
}

pub fn gen_random(vertices: usize, edges: usize, loop_prob: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&loop_prob) {
        return Err(Error::InvalidParameter(format!(
            "loop probability {loop_prob} outside [0, 1]"
        )));
    }
    if vertices == 0 && edges > 0 {
        return Err(Error::InvalidParameter(
            "cannot place edges on zero vertices".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let names: Vec<String> = (0..vertices).map(|i| format!("u{i}")).collect();
    let mut specs = Vec::with_capacity(edges);
    for i in 0..edges {
        let (source, range) = if rng.random_bool(loop_prob) {
            let v = rng.random_range(0..vertices);
            (v, v)
        } else {
            (rng.random_range(0..vertices), rng.random_range(0..vertices))
        };
        specs.push(EdgeSpec::new(
            format!("e{i}"),
            names[source].clone(),
            names[range].clone(),
        ));
    }
    Ok(Graph::new(names, specs)?)
}

#[derive(Clone, Debug, PartialEq)]
pub enum ExampleSpec {
    Figure1Truncation {
        depth: u32,
    },
    ChainWithLoops {
        length: usize,
    },
    Random {
        vertices: usize,
        edges: usize,
        loop_prob: f64,
        seed: u64,
    },
}

impl ExampleSpec {
    pub fn build(&self) -> Result<Graph> {
        match *self {
            ExampleSpec::Figure1Truncation { depth } => gen_figure1(depth).map(|(g, _)| g),
            ExampleSpec::ChainWithLoops { length } => gen_chain_loops(length),
            ExampleSpec::Random {
                vertices,
                edges,
                loop_prob,
                seed,
            } => gen_random(vertices, edges, loop_prob, seed),
        }
    }
}

/// A seeded family of random graphs.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Ensemble {
    pub count: usize,
    pub max_vertices: usize,
    pub max_edges: usize,
    pub loop_prob: f64,
    pub seed: u64,
}

impl Default for Ensemble {
    fn default() -> Self {
        Ensemble {
            count: 1000,
            max_vertices: 7,
            max_edges: 14,
            loop_prob: 0.3,
            seed: 0,
        }
    }
}

impl Ensemble {
    /// The member specs, in index order.
    pub fn specs(&self) -> Vec<ExampleSpec> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        (0..self.count)
            .map(|_| {
                let vertices = rng.random_range(0..=self.max_vertices);
                let edges = if vertices == 0 {
                    0
                } else {
                    rng.random_range(0..=self.max_edges)
                };
                ExampleSpec::Random {
                    vertices,
                    edges,
                    loop_prob: self.loop_prob,
                    seed: rng.next_u64(),
                }
            })
            .collect()
    }

    pub fn graphs(&self) -> impl Iterator<Item = Graph> {
        self.specs()
            .into_iter()
            .map(|s| s.build().expect("ensemble parameters are valid"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::{serialize_graph, GraphFormat};

    #[test]
    fn figure1_depth_one() {
        let (g, h) = gen_figure1(1).unwrap();
        assert_eq!(g.vertices(), ["v", "v_0", "v_1"]);
        assert_eq!(g.edge_count(), 5);
        let loops = g.edges().iter().filter(|e| e.source == e.range).count();
        assert_eq!(loops, 3);
        assert_eq!(g.set_ids(h.as_set()), ["v_0"]);
    }

    #[test]
    fn figure1_sizes() {
        for d in 1..=6u32 {
            let (g, h) = gen_figure1(d).unwrap();
            let n = (1usize << (d + 1)) - 1;
            assert_eq!(g.vertex_count(), n);
            assert_eq!(g.edge_count(), 2 * n - 1);
            // all-ones strings are the only ones without a 0
            assert_eq!(h.len(), n - (d as usize + 1));
        }
        assert!(gen_figure1(0).is_err());
        assert!(matches!(
            gen_figure1_capped(4, 30),
            Err(Error::CapacityExceeded { requested: 31, .. })
        ));
    }

    #[test]
    fn chain_shape() {
        let g = gen_chain_loops(3).unwrap();
        assert_eq!(g.vertices(), ["v", "v_1", "v_11"]);
        assert_eq!(g.edge_count(), 5);
        let e = g.edge(g.edge_index("e_11").unwrap());
        assert_eq!(g.vertex_id(e.source), "v_11");
        assert_eq!(g.vertex_id(e.range), "v_1");
        assert!(gen_chain_loops(0).is_err());
    }

    #[test]
    fn random_parameters() {
        assert_eq!(gen_random(0, 0, 0.5, 9).unwrap(), Graph::empty());
        assert!(gen_random(0, 1, 0.5, 9).is_err());
        assert!(gen_random(3, 1, 1.5, 9).is_err());
        let g = gen_random(4, 0, 0.3, 1).unwrap();
        assert_eq!(g.vertices(), ["u0", "u1", "u2", "u3"]);
        let g = gen_random(5, 20, 1.0, 3).unwrap();
        assert!(g.edges().iter().all(|e| e.source == e.range));
    }

    #[test]
    fn deterministic() {
        let a = gen_random(6, 12, 0.3, 42).unwrap();
        let b = gen_random(6, 12, 0.3, 42).unwrap();
        assert_eq!(
            serialize_graph(&a, GraphFormat::Line),
            serialize_graph(&b, GraphFormat::Line)
        );
        let e = Ensemble::default();
        assert_eq!(e.specs(), e.specs());
        assert_eq!(e.specs().len(), 1000);
    }
}
