//! Saturated hereditary vertex sets: the vertex-level picture of the
//! gauge-invariant ideals of a graph algebra.
//!
//! `H` is hereditary when every path ending in `H` starts in `H`, and
//! saturated when every vertex that receives edges, all of whose in-edge
//! sources lie in `H`, is itself in `H`. Vertices that receive no edges are
//! exempt from the saturation condition.

mod annihilator;
mod lattice;
mod quotient;

pub use annihilator::{is_regular, perp, perp_perp, regular_ideals};
pub use lattice::{
    enumerate_sat_her, enumerate_sat_her_with, lattice_record, IdealLattice, LatticeEntry,
    LatticeOptions, LatticeRecord,
};
pub use quotient::{quotient_graph, quotient_graph_hereditary, Quotient};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::reach::{check_owner, closure, Direction};
use crate::vertex_set::VertexSet;

/// A vertex set certified saturated and hereditary in its graph.
///
/// Values are only produced by [`saturate`], [`SatHerSet::new_exact`], or the
/// lattice operations, so the invariant always holds.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SatHerSet(VertexSet);

impl SatHerSet {
    /// Accepts `set` only if it is already saturated and hereditary.
    pub fn new_exact(g: &Graph, set: VertexSet) -> Result<SatHerSet> {
        if !is_hereditary(g, &set)? {
            return Err(Error::NotHereditary);
        }
        if !is_saturated(g, &set)? {
            return Err(Error::NotSaturated);
        }
        Ok(SatHerSet(set))
    }

    pub(crate) fn trusted(set: VertexSet) -> SatHerSet {
        SatHerSet(set)
    }

    pub fn as_set(&self) -> &VertexSet {
        &self.0
    }

    pub fn into_set(self) -> VertexSet {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl AsRef<VertexSet> for SatHerSet {
    fn as_ref(&self) -> &VertexSet {
        &self.0
    }
}

pub fn is_hereditary(g: &Graph, s: &VertexSet) -> Result<bool> {
    check_owner(g, s)?;
    Ok(closure(g, s, Direction::Backward) == *s)
}

pub fn is_saturated(g: &Graph, s: &VertexSet) -> Result<bool> {
    check_owner(g, s)?;
    Ok((0..g.vertex_count()).all(|v| s.contains(v) || !forced_by(g, s, v)))
}

/// Whether `v` receives edges and all of their sources lie in `s`.
fn forced_by(g: &Graph, s: &VertexSet, v: usize) -> bool {
    let incoming = g.in_edges(v);
    !incoming.is_empty() && incoming.iter().all(|&e| s.contains(g.edge(e).source))
}

/// Smallest hereditary superset of `s`.
pub fn hereditary_closure(g: &Graph, s: &VertexSet) -> Result<VertexSet> {
    check_owner(g, s)?;
    Ok(closure(g, s, Direction::Backward))
}

/// Smallest saturated hereditary superset of `s`.
pub fn saturate(g: &Graph, s: &VertexSet) -> Result<SatHerSet> {
    check_owner(g, s)?;
    let mut current = closure(g, s, Direction::Backward);
    loop {
        let forced: Vec<usize> = (0..g.vertex_count())
            .filter(|&v| !current.contains(v) && forced_by(g, &current, v))
            .collect();
        if forced.is_empty() {
            break;
        }
        for v in forced {
            current.insert(v);
        }
        // saturation can add vertices whose predecessors are missing
        current = closure(g, &current, Direction::Backward);
    }
    Ok(SatHerSet(current))
}

/// Intersection; saturated hereditary sets are closed under it.
pub fn meet(g: &Graph, a: &SatHerSet, b: &SatHerSet) -> Result<SatHerSet> {
    check_owner(g, a.as_set())?;
    check_owner(g, b.as_set())?;
    let out = a.0.intersection(&b.0);
    debug_assert!(is_hereditary(g, &out).unwrap() && is_saturated(g, &out).unwrap());
    Ok(SatHerSet(out))
}

/// Saturation of the union.
pub fn join(g: &Graph, a: &SatHerSet, b: &SatHerSet) -> Result<SatHerSet> {
    check_owner(g, a.as_set())?;
    check_owner(g, b.as_set())?;
    saturate(g, &a.0.union(&b.0))
}
