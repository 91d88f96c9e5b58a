//! Gauge-invariant ideals of graph C*-algebras, computed combinatorially.
//!
//! A gauge-invariant ideal of `C*(E)` is determined by its saturated
//! hereditary vertex set, so everything here works on finite directed
//! multigraphs and subsets of their vertices:
//!
//! * [`graph`], [`format`]: the multigraph type and its text encodings;
//! * [`reach`], [`cycles`]: forward/backward closures, entryless cycles, Condition (L);
//! * [`ideals`]: saturation, the lattice of saturated hereditary sets,
//!   annihilators (`perp`), regularity, quotient graphs;
//! * [`verify`]: brute-force oracles and whole-graph cross-checks;
//! * [`generators`]: the binary-tree example, its chain quotient, random graphs.

pub mod cycles;
pub mod error;
pub mod format;
pub mod generators;
pub mod graph;
pub mod ideals;
pub mod reach;
pub mod verify;
mod vertex_set;

#[cfg(feature = "cli")]
pub mod cli;

pub use cycles::{find_entryless_cycle, has_condition_l, CycleWitness};
pub use error::{Error, Result};
pub use format::{parse_graph, serialize_graph, to_dot, GraphFormat};
pub use graph::{Edge, EdgeSpec, Graph, GraphKey};
pub use ideals::SatHerSet;
pub use reach::{backward_closure, forward_closure};
pub use vertex_set::VertexSet;
