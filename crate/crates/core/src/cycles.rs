//! Cycles, entries, and Condition (L).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A simple cycle `α₁ … αₙ`, listed so that `s(αᵢ) = r(αᵢ₊₁)` and
/// `s(αₙ) = r(α₁)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleWitness {
    edges: Vec<String>,
}

impl CycleWitness {
    /// Validates composability, closure, and simplicity of `edges` in `g`.
    pub fn new<S: AsRef<str>>(g: &Graph, edges: &[S]) -> Result<CycleWitness> {
        if edges.is_empty() {
            return Err(Error::InvalidParameter("empty cycle".into()));
        }
        let mut idx = Vec::with_capacity(edges.len());
        for id in edges {
            let id = id.as_ref();
            idx.push(
                g.edge_index(id)
                    .ok_or_else(|| Error::InvalidParameter(format!("unknown edge {id}")))?,
            );
        }
        let n = idx.len();
        let mut ranges = Vec::with_capacity(n);
        for i in 0..n {
            let here = g.edge(idx[i]);
            let next = g.edge(idx[(i + 1) % n]);
            if here.source != next.range {
                return Err(Error::InvalidParameter(format!(
                    "edges {} and {} do not compose",
                    here.id, next.id
                )));
            }
            ranges.push(here.range);
        }
        ranges.sort_unstable();
        if ranges.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidParameter("cycle is not simple".into()));
        }
        Ok(CycleWitness {
            edges: edges.iter().map(|e| e.as_ref().to_string()).collect(),
        })
    }

    pub fn edges(&self) -> &[String] {
        &self.edges
    }

    /// `α⁰`: the ranges `r(α₁), …, r(αₙ)` in cycle order.
    pub fn vertices<'a>(&self, g: &'a Graph) -> Vec<&'a str> {
        self.edges
            .iter()
            .map(|id| {
                let e = g.edge(g.edge_index(id).expect("witness edge belongs to graph"));
                g.vertex_id(e.range)
            })
            .collect()
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// Returns a cycle with no entry, if any exists.
///
/// A cycle lacks an entry exactly when each of its vertices has in-degree 1,
/// so the search runs over the functional graph `v ↦ s(unique in-edge of v)`
/// restricted to in-degree-1 vertices. The witness starts at its smallest
/// vertex.
pub fn find_entryless_cycle(g: &Graph) -> Option<CycleWitness> {
    const FRESH: u8 = 0;
    const ON_WALK: u8 = 1;
    const DONE: u8 = 2;

    let n = g.vertex_count();
    let sole_in_edge = |v: usize| match g.in_edges(v) {
        [e] => Some(*e),
        _ => None,
    };
    let mut state = vec![FRESH; n];
    let mut walk = Vec::new();
    for start in 0..n {
        walk.clear();
        let mut x = start;
        let found = loop {
            match state[x] {
                ON_WALK => break Some(x),
                DONE => break None,
                _ => {}
            }
            let Some(e) = sole_in_edge(x) else {
                state[x] = DONE;
                break None;
            };
            state[x] = ON_WALK;
            walk.push(x);
            x = g.edge(e).source;
        };
        if let Some(entry) = found {
            let pos = walk
                .iter()
                .position(|&v| v == entry)
                .expect("entry is on walk");
            let mut cycle = walk[pos..].to_vec();
            let min_at = (0..cycle.len()).min_by_key(|&i| cycle[i]).unwrap();
            cycle.rotate_left(min_at);
            let edges: Vec<&str> = cycle
                .iter()
                .map(|&v| g.edge(sole_in_edge(v).unwrap()).id.as_str())
                .collect();
            return Some(CycleWitness::new(g, &edges).expect("functional-graph cycle is simple"));
        }
        for &v in &walk {
            state[v] = DONE;
        }
    }
    None
}

/// Whether every cycle of `g` has an entry.
pub fn has_condition_l(g: &Graph) -> bool {
    find_entryless_cycle(g).is_none()
}
