use super::{is_hereditary, is_saturated, SatHerSet};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::reach::check_owner;
use crate::vertex_set::VertexSet;

/// Quotient by a hereditary set that may not be saturated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    pub graph: Graph,
    /// False when the removed set was hereditary but not saturated.
    pub saturated: bool,
}

/// `E/H`: vertices outside `H` and edges whose source is outside `H`.
pub fn quotient_graph(g: &Graph, h: &SatHerSet) -> Result<Graph> {
    check_owner(g, h.as_set())?;
    Ok(remove(g, h.as_set()))
}

/// Permissive variant: accepts any hereditary set and reports whether it was
/// also saturated.
pub fn quotient_graph_hereditary(g: &Graph, s: &VertexSet) -> Result<Quotient> {
    if !is_hereditary(g, s)? {
        return Err(Error::NotHereditary);
    }
    Ok(Quotient {
        graph: remove(g, s),
        saturated: is_saturated(g, s)?,
    })
}

fn remove(g: &Graph, h: &VertexSet) -> Graph {
    let keep = h.complement();
    // heredity: an edge with range in H has its source in H
    debug_assert!(g
        .edges()
        .iter()
        .all(|e| h.contains(e.source) || keep.contains(e.range)));
    g.induced(&keep)
}
