//! Reachability along directed paths. Both closures include their input,
//! since trivial vertex paths count as paths.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

pub(crate) fn check_owner(g: &Graph, s: &VertexSet) -> Result<()> {
    if s.graph() == g.key() && s.universe() == g.vertex_count() {
        Ok(())
    } else {
        Err(Error::ForeignSet)
    }
}

/// `{r(α) : s(α) ∈ S}`: every vertex reachable from `S`.
pub fn forward_closure(g: &Graph, s: &VertexSet) -> Result<VertexSet> {
    check_owner(g, s)?;
    Ok(closure(g, s, Direction::Forward))
}

/// `{s(α) : r(α) ∈ S}`: every vertex from which `S` is reachable. For a
/// singleton `{w}` this is `T(w)`.
pub fn backward_closure(g: &Graph, s: &VertexSet) -> Result<VertexSet> {
    check_owner(g, s)?;
    Ok(closure(g, s, Direction::Backward))
}

#[derive(Clone, Copy)]
pub(crate) enum Direction {
    Forward,
    Backward,
}

pub(crate) fn closure(g: &Graph, s: &VertexSet, dir: Direction) -> VertexSet {
    let mut seen = s.clone();
    let mut stack: Vec<usize> = s.iter().collect();
    while let Some(v) = stack.pop() {
        let step = match dir {
            Direction::Forward => g.out_edges(v),
            Direction::Backward => g.in_edges(v),
        };
        for &e in step {
            let edge = g.edge(e);
            let next = match dir {
                Direction::Forward => edge.range,
                Direction::Backward => edge.source,
            };
            if seen.insert(next) {
                stack.push(next);
            }
        }
    }
    seen
}
