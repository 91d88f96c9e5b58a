//! Brute-force oracles built only from the literal definitions.
//!
//! Nothing here calls the closure, saturation, or cycle code of the main
//! implementation; the oracles read the raw edge list of a graph and nothing
//! else.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Largest vertex count for the exhaustive subset filter.
pub const SUBSET_ORACLE_MAX_VERTICES: usize = 20;
/// Largest vertex count for exhaustive simple-cycle enumeration.
pub const CYCLE_ORACLE_MAX_VERTICES: usize = 16;

/// Independent reference answers used by the verification checks.
pub trait Oracle {
    fn sat_her_sets(&self, g: &Graph) -> Result<Vec<VertexSet>>;
    /// The maximal element of `lattice` disjoint from `h`.
    fn perp(&self, lattice: &[VertexSet], h: &VertexSet) -> Result<VertexSet>;
    fn condition_l(&self, g: &Graph) -> Result<bool>;
}

/// The definitional oracles of this module.
#[derive(Clone, Copy, Debug, Default)]
pub struct LiteralOracle;

impl Oracle for LiteralOracle {
    fn sat_her_sets(&self, g: &Graph) -> Result<Vec<VertexSet>> {
        oracle_enumerate_sat_her(g)
    }

    fn perp(&self, lattice: &[VertexSet], h: &VertexSet) -> Result<VertexSet> {
        maximal_disjoint(lattice, h)
    }

    fn condition_l(&self, g: &Graph) -> Result<bool> {
        oracle_condition_l(g)
    }
}

/// Filters all `2^|E⁰|` subsets by the hereditary and saturated conditions.
///
/// Heredity is checked edge by edge: a path ending in `H` starts in `H` for
/// every path exactly when it does for every single edge.
pub fn oracle_enumerate_sat_her(g: &Graph) -> Result<Vec<VertexSet>> {
    let n = g.vertex_count();
    if n > SUBSET_ORACLE_MAX_VERTICES {
        return Err(Error::CapacityExceeded {
            what: "subset oracle",
            limit: SUBSET_ORACLE_MAX_VERTICES,
            requested: n,
        });
    }
    let edges: Vec<(u32, u32)> = g
        .edges()
        .iter()
        .map(|e| (1u32 << e.source, 1u32 << e.range))
        .collect();
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << n) {
        let hereditary = edges.iter().all(|&(s, r)| mask & r == 0 || mask & s != 0);
        if !hereditary {
            continue;
        }
        let saturated = (0..n).all(|v| {
            let bit = 1u32 << v;
            if mask & bit != 0 {
                return true;
            }
            let mut receives = false;
            let mut all_inside = true;
            for &(s, r) in &edges {
                if r == bit {
                    receives = true;
                    all_inside &= mask & s != 0;
                }
            }
            !(receives && all_inside)
        });
        if saturated {
            out.push(g.set_from_indices((0..n).filter(|&v| mask & (1 << v) != 0)));
        }
    }
    out.sort();
    Ok(out)
}

/// The unique inclusion-maximal member of `lattice` disjoint from `h`.
pub fn maximal_disjoint(lattice: &[VertexSet], h: &VertexSet) -> Result<VertexSet> {
    let disjoint: Vec<&VertexSet> = lattice.iter().filter(|k| k.is_disjoint(h)).collect();
    let maximal: Vec<&VertexSet> = disjoint
        .iter()
        .copied()
        .filter(|k| {
            !disjoint
                .iter()
                .any(|other| other != k && k.is_subset(other))
        })
        .collect();
    match maximal.as_slice() {
        [only] => Ok((*only).clone()),
        _ => Err(Error::NonUniqueMaximum),
    }
}

pub fn oracle_perp(g: &Graph, h: &VertexSet) -> Result<VertexSet> {
    maximal_disjoint(&oracle_enumerate_sat_her(g)?, h)
}

/// Every simple cycle, as edge-index lists `α₁ … αₙ` with `s(αᵢ) = r(αᵢ₊₁)`.
/// Loops and parallel edges give distinct cycles.
pub fn oracle_simple_cycles(g: &Graph) -> Result<Vec<Vec<usize>>> {
    let n = g.vertex_count();
    if n > CYCLE_ORACLE_MAX_VERTICES {
        return Err(Error::CapacityExceeded {
            what: "cycle oracle",
            limit: CYCLE_ORACLE_MAX_VERTICES,
            requested: n,
        });
    }
    let edges = g.edges();
    let mut cycles = Vec::new();
    // each cycle is found once, from its smallest vertex, walking source→range
    for start in 0..n {
        let mut on_path = vec![false; n];
        let mut path: Vec<usize> = Vec::new();
        extend(edges, start, start, &mut on_path, &mut path, &mut cycles);
    }
    Ok(cycles)
}

fn extend(
    edges: &[crate::graph::Edge],
    start: usize,
    at: usize,
    on_path: &mut [bool],
    path: &mut Vec<usize>,
    cycles: &mut Vec<Vec<usize>>,
) {
    on_path[at] = true;
    for (i, e) in edges.iter().enumerate() {
        if e.source != at {
            continue;
        }
        if e.range == start {
            path.push(i);
            // walked order is αₙ … α₁
            cycles.push(path.iter().rev().copied().collect());
            path.pop();
        } else if e.range > start && !on_path[e.range] {
            path.push(i);
            extend(edges, start, e.range, on_path, path, cycles);
            path.pop();
        }
    }
    on_path[at] = false;
}

/// Whether some `αᵢ` has another edge with the same range.
pub fn has_entry(g: &Graph, cycle: &[usize]) -> bool {
    cycle.iter().any(|&a| {
        let target = g.edges()[a].range;
        g.edges()
            .iter()
            .enumerate()
            .any(|(i, e)| i != a && e.range == target)
    })
}

pub fn oracle_entryless_cycles(g: &Graph) -> Result<Vec<Vec<usize>>> {
    Ok(oracle_simple_cycles(g)?
        .into_iter()
        .filter(|c| !has_entry(g, c))
        .collect())
}

pub fn oracle_condition_l(g: &Graph) -> Result<bool> {
    Ok(oracle_simple_cycles(g)?.iter().all(|c| has_entry(g, c)))
}
