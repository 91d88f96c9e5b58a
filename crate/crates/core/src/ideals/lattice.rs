use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use super::{perp, perp_perp, saturate, SatHerSet};
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphKey};
use crate::reach::{closure, Direction};
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LatticeOptions {
    /// Enumeration stops with a capacity error past this many entries.
    pub max_entries: usize,
}

impl Default for LatticeOptions {
    fn default() -> Self {
        LatticeOptions {
            max_entries: 100_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeEntry {
    pub set: SatHerSet,
    pub regular: bool,
    /// Index of `perp(set)` within the lattice.
    pub perp: usize,
}

/// Every saturated hereditary set of one graph, sorted by cardinality and
/// then by member list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealLattice {
    graph: GraphKey,
    entries: Vec<LatticeEntry>,
}

/// One row of the structured lattice output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeRecord {
    pub set: Vec<String>,
    pub hereditary: bool,
    pub saturated: bool,
    pub regular: bool,
    pub perp: Vec<String>,
}

impl IdealLattice {
    pub fn graph(&self) -> GraphKey {
        self.graph
    }

    pub fn entries(&self) -> &[LatticeEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize) -> &LatticeEntry {
        &self.entries[i]
    }

    pub fn sets(&self) -> impl Iterator<Item = &SatHerSet> {
        self.entries.iter().map(|e| &e.set)
    }

    pub fn index_of(&self, set: &VertexSet) -> Option<usize> {
        self.entries
            .binary_search_by(|e| e.set.as_set().cmp(set))
            .ok()
    }

    /// Covering pairs `(lower, upper)` of the inclusion order.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.entries.len();
        let below = |i: usize, j: usize| {
            i != j
                && self.entries[i]
                    .set
                    .as_set()
                    .is_subset(self.entries[j].set.as_set())
        };
        let mut out = Vec::new();
        for j in 0..n {
            for i in 0..n {
                if below(i, j) && !(0..n).any(|k| below(i, k) && below(k, j)) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn records(&self, g: &Graph) -> Vec<LatticeRecord> {
        let ids = |s: &VertexSet| g.set_ids(s).into_iter().map(String::from).collect();
        self.entries
            .iter()
            .map(|e| LatticeRecord {
                set: ids(e.set.as_set()),
                hereditary: true,
                saturated: true,
                regular: e.regular,
                perp: ids(self.entries[e.perp].set.as_set()),
            })
            .collect()
    }
}

/// Structured record for a single set, outside any enumerated lattice.
pub fn lattice_record(g: &Graph, h: &SatHerSet) -> Result<LatticeRecord> {
    let ids = |s: &VertexSet| g.set_ids(s).into_iter().map(String::from).collect();
    Ok(LatticeRecord {
        set: ids(h.as_set()),
        hereditary: true,
        saturated: true,
        regular: super::is_regular(g, h)?,
        perp: ids(perp(g, h)?.as_set()),
    })
}

pub fn enumerate_sat_her(g: &Graph) -> Result<IdealLattice> {
    enumerate_sat_her_with(g, &LatticeOptions::default())
}

/// Builds the lattice as the join-closure of the principal sets
/// `saturate(T(v))` together with `∅`. Every saturated hereditary `H` is the
/// join of the principal sets of its members, so the closure is complete.
pub fn enumerate_sat_her_with(g: &Graph, opts: &LatticeOptions) -> Result<IdealLattice> {
    let exceeded = |requested| Error::CapacityExceeded {
        what: "lattice",
        limit: opts.max_entries,
        requested,
    };

    let mut generators: Vec<VertexSet> = Vec::new();
    for v in 0..g.vertex_count() {
        let principal = saturate(g, &g.set_from_indices([v]))?.into_set();
        if !generators.contains(&principal) {
            generators.push(principal);
        }
    }

    let bottom = g.empty_set();
    let mut found: HashSet<VertexSet> = HashSet::from([bottom.clone()]);
    let mut queue = vec![bottom];
    while let Some(current) = queue.pop() {
        for gen in &generators {
            if gen.is_subset(&current) {
                continue;
            }
            let joined = saturate(g, &current.union(gen))?.into_set();
            if found.insert(joined.clone()) {
                if found.len() > opts.max_entries {
                    return Err(exceeded(found.len()));
                }
                queue.push(joined);
            }
        }
    }
    if found.len() > opts.max_entries {
        return Err(exceeded(found.len()));
    }

    let mut sets: Vec<VertexSet> = found.into_iter().collect();
    sets.sort();
    let position: HashMap<&VertexSet, usize> =
        sets.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let perps: Vec<usize> = sets
        .iter()
        .map(|s| {
            let p = closure(g, s, Direction::Forward).complement();
            position.get(&p).copied().ok_or_else(|| {
                Error::InvariantViolation("perp of a lattice element is not in the lattice".into())
            })
        })
        .collect::<Result<_>>()?;

    let entries = sets
        .iter()
        .enumerate()
        .map(|(i, s)| {
            let regular = perps[perps[i]] == i;
            if cfg!(debug_assertions) {
                let h = SatHerSet::trusted(s.clone());
                debug_assert_eq!(perp(g, &h)?.as_set(), &sets[perps[i]]);
                debug_assert_eq!(perp_perp(g, &h)? == h, regular);
            }
            Ok(LatticeEntry {
                set: SatHerSet::trusted(s.clone()),
                regular,
                perp: perps[i],
            })
        })
        .collect::<Result<_>>()?;

    Ok(IdealLattice {
        graph: g.key(),
        entries,
    })
}
