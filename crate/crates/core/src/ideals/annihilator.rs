//! Annihilators and regularity, computed on vertex sets.
//!
//! For a saturated hereditary `H` with forward closure `H̄`:
//! `perp(H) = E⁰ \ H̄` and `perp_perp(H) = {w : T(w) ⊆ H̄}`; `H` is regular
//! when it equals `perp_perp(H)`.

use super::{enumerate_sat_her, is_hereditary, is_saturated, SatHerSet};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::reach::{check_owner, closure, Direction};

pub fn perp(g: &Graph, h: &SatHerSet) -> Result<SatHerSet> {
    check_owner(g, h.as_set())?;
    let out = closure(g, h.as_set(), Direction::Forward).complement();
    if !(is_hereditary(g, &out)? && is_saturated(g, &out)?) {
        return Err(Error::InvariantViolation(
            "complement of a forward closure is not saturated hereditary".into(),
        ));
    }
    Ok(SatHerSet::trusted(out))
}

/// `{w ∈ E⁰ : T(w) ⊆ H̄}`, evaluated vertex by vertex.
pub fn perp_perp(g: &Graph, h: &SatHerSet) -> Result<SatHerSet> {
    check_owner(g, h.as_set())?;
    let reach = closure(g, h.as_set(), Direction::Forward);
    let mut out = g.empty_set();
    for w in reach.iter() {
        let single = g.set_from_indices([w]);
        if closure(g, &single, Direction::Backward).is_subset(&reach) {
            out.insert(w);
        }
    }
    if cfg!(debug_assertions) {
        let twice = perp(g, &perp(g, h)?)?;
        if twice.as_set() != &out {
            return Err(Error::InvariantViolation(
                "perp_perp disagrees with perp applied twice".into(),
            ));
        }
    }
    Ok(SatHerSet::trusted(out))
}

pub fn is_regular(g: &Graph, h: &SatHerSet) -> Result<bool> {
    Ok(perp_perp(g, h)? == *h)
}

/// All regular saturated hereditary sets, in canonical lattice order.
pub fn regular_ideals(g: &Graph) -> Result<Vec<SatHerSet>> {
    let lattice = enumerate_sat_her(g)?;
    Ok(lattice
        .entries()
        .iter()
        .filter(|e| e.regular)
        .map(|e| e.set.clone())
        .collect())
}
