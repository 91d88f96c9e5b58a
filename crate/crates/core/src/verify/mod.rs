//! Cross-checks of the ideal calculus against the oracles, and of the
//! theorems relating regularity, annihilators, and Condition (L).
//!
//! For each saturated hereditary `H` of a graph the checks are:
//!
//! * `perp-matches-oracle`: `perp(H)` is the maximal sat-her set disjoint from `H`;
//! * `perp-sat-her`: `perp(H)` is saturated and hereditary;
//! * `triple-perp`: `perp³(H) = perp(H)`;
//! * `perp-perp-formula`: `{w : T(w) ⊆ H̄} = perp(perp(H))`;
//! * `regularity-consistent`: the lattice flag, `is_regular`, and `H = perp_perp(H)` agree;
//! * `regular-quotient-l`: on a graph with Condition (L), regular `H` gives a quotient with (L).
//!
//! Per graph, `lattice-matches-oracle` and `condition-l-matches-oracle` compare
//! the main enumeration and entry test with the brute-force versions.

mod oracle;

pub use oracle::{
    has_entry, maximal_disjoint, oracle_condition_l, oracle_entryless_cycles,
    oracle_enumerate_sat_her, oracle_perp, oracle_simple_cycles, LiteralOracle, Oracle,
    CYCLE_ORACLE_MAX_VERTICES, SUBSET_ORACLE_MAX_VERTICES,
};

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cycles::{find_entryless_cycle, has_condition_l, CycleWitness};
use crate::error::{Error, Result};
use crate::format::{parse_graph, serialize_graph, GraphFormat};
use crate::generators::Ensemble;
use crate::graph::Graph;
use crate::ideals::{
    enumerate_sat_her_with, is_hereditary, is_regular, is_saturated, perp, perp_perp,
    quotient_graph, IdealLattice, LatticeOptions, SatHerSet,
};
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    LatticeMatchesOracle,
    ConditionLMatchesOracle,
    PerpMatchesOracle,
    PerpSatHer,
    TriplePerp,
    PerpPerpFormula,
    RegularityConsistent,
    RegularQuotientL,
}

impl Check {
    pub const PER_GRAPH: [Check; 2] = [Check::LatticeMatchesOracle, Check::ConditionLMatchesOracle];
    pub const PER_SET: [Check; 6] = [
        Check::PerpMatchesOracle,
        Check::PerpSatHer,
        Check::TriplePerp,
        Check::PerpPerpFormula,
        Check::RegularityConsistent,
        Check::RegularQuotientL,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::LatticeMatchesOracle => "lattice-matches-oracle",
            Check::ConditionLMatchesOracle => "condition-l-matches-oracle",
            Check::PerpMatchesOracle => "perp-matches-oracle",
            Check::PerpSatHer => "perp-sat-her",
            Check::TriplePerp => "triple-perp",
            Check::PerpPerpFormula => "perp-perp-formula",
            Check::RegularityConsistent => "regularity-consistent",
            Check::RegularQuotientL => "regular-quotient-l",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
    Skip,
}

/// Enough to rebuild and rerun a single check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// Line-format serialization of the graph.
    pub graph: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub set: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cycle: Option<CycleWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub check: Check,
    pub outcome: Outcome,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph_index: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub set: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSummary {
    pub vertices: usize,
    pub edges: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnsembleMeta {
    pub seed: u64,
    pub count: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub graphs: Vec<GraphSummary>,
    pub records: Vec<CheckRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ensemble: Option<EnsembleMeta>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.records.iter().all(|r| r.outcome != Outcome::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| r.outcome == Outcome::Fail)
    }

    pub fn tally(&self) -> BTreeMap<Check, Tally> {
        let mut out = BTreeMap::new();
        for r in &self.records {
            let t: &mut Tally = out.entry(r.check).or_default();
            match r.outcome {
                Outcome::Pass => t.pass += 1,
                Outcome::Fail => t.fail += 1,
                Outcome::Skip => t.skip += 1,
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report serializes");
        out.push('\n');
        out
    }

    /// One row per check with pass/fail/skip counts, then one row per failure.
    pub fn to_table(&self) -> String {
        let mut out = format!(
            "graphs: {}  vertices: {}  edges: {}\n",
            self.graphs.len(),
            self.graphs.iter().map(|g| g.vertices).sum::<usize>(),
            self.graphs.iter().map(|g| g.edges).sum::<usize>()
        );
        if let Some(meta) = self.ensemble {
            out.push_str(&format!(
                "ensemble: seed {} count {}\n",
                meta.seed, meta.count
            ));
        }
        for (check, t) in self.tally() {
            let status = if t.fail > 0 { "FAIL" } else { "PASS" };
            out.push_str(&format!(
                "{status}  {:<28} pass={} fail={} skip={}\n",
                check.name(),
                t.pass,
                t.fail,
                t.skip
            ));
        }
        for r in self.failures() {
            out.push_str(&format!(
                "FAIL  {:<28} graph={} set={} {}\n",
                r.check.name(),
                r.graph_index.map_or("-".to_string(), |i| i.to_string()),
                r.set
                    .as_ref()
                    .map_or("-".to_string(), |s| format!("{{{}}}", s.join(","))),
                r.detail.as_deref().unwrap_or("")
            ));
        }
        out
    }
}

struct Verdict {
    outcome: Outcome,
    detail: Option<String>,
    cycle: Option<CycleWitness>,
}

impl Verdict {
    fn pass() -> Self {
        Verdict {
            outcome: Outcome::Pass,
            detail: None,
            cycle: None,
        }
    }

    fn fail(detail: impl Into<String>) -> Self {
        Verdict {
            outcome: Outcome::Fail,
            detail: Some(detail.into()),
            cycle: None,
        }
    }

    fn skip(detail: impl Into<String>) -> Self {
        Verdict {
            outcome: Outcome::Skip,
            detail: Some(detail.into()),
            cycle: None,
        }
    }

    fn expect(ok: bool, detail: impl FnOnce() -> String) -> Self {
        if ok {
            Verdict::pass()
        } else {
            Verdict::fail(detail())
        }
    }

    fn from_result(r: Result<Verdict>) -> Verdict {
        match r {
            Ok(v) => v,
            Err(e @ Error::CapacityExceeded { .. }) => Verdict::skip(e.to_string()),
            Err(e) => Verdict::fail(e.to_string()),
        }
    }
}

/// Shared state for the checks on one graph.
struct Context<'a> {
    g: &'a Graph,
    oracle: &'a dyn Oracle,
    oracle_sets: Option<Result<Vec<VertexSet>>>,
    condition_l: bool,
}

impl<'a> Context<'a> {
    fn new(g: &'a Graph, oracle: &'a dyn Oracle) -> Self {
        Context {
            g,
            oracle,
            oracle_sets: None,
            condition_l: has_condition_l(g),
        }
    }

    fn oracle_sets(&mut self) -> Result<&[VertexSet]> {
        let (g, oracle) = (self.g, self.oracle);
        match self
            .oracle_sets
            .get_or_insert_with(|| oracle.sat_her_sets(g))
        {
            Ok(sets) => Ok(sets),
            Err(e) => Err(e.clone()),
        }
    }

    fn fmt_set(&self, s: &VertexSet) -> String {
        crate::format::format_set(self.g, s)
    }

    fn graph_check(&mut self, check: Check, lattice: &IdealLattice) -> Verdict {
        let r = match check {
            Check::LatticeMatchesOracle => self.oracle_sets().map(|expected| {
                let got: Vec<&VertexSet> = lattice.sets().map(SatHerSet::as_set).collect();
                let expected: Vec<&VertexSet> = expected.iter().collect();
                Verdict::expect(got == expected, || {
                    format!(
                        "closure enumeration found {} sets, subset filter {}",
                        got.len(),
                        expected.len()
                    )
                })
            }),
            Check::ConditionLMatchesOracle => self.oracle.condition_l(self.g).map(|expected| {
                let mut v = Verdict::expect(self.condition_l == expected, || {
                    format!(
                        "has_condition_l = {}, oracle = {}",
                        self.condition_l, expected
                    )
                });
                v.cycle = find_entryless_cycle(self.g);
                v
            }),
            _ => unreachable!("{check} is a per-set check"),
        };
        Verdict::from_result(r)
    }

    fn set_check(&mut self, check: Check, h: &SatHerSet, flagged_regular: Option<bool>) -> Verdict {
        Verdict::from_result(self.set_check_inner(check, h, flagged_regular))
    }

    fn set_check_inner(
        &mut self,
        check: Check,
        h: &SatHerSet,
        flagged_regular: Option<bool>,
    ) -> Result<Verdict> {
        let g = self.g;
        Ok(match check {
            Check::PerpMatchesOracle => {
                let p = perp(g, h)?;
                let oracle = self.oracle;
                let expected = oracle.perp(self.oracle_sets()?, h.as_set())?;
                Verdict::expect(p.as_set() == &expected, || {
                    format!(
                        "perp = {}, oracle = {}",
                        self.fmt_set(p.as_set()),
                        self.fmt_set(&expected)
                    )
                })
            }
            Check::PerpSatHer => {
                let p = perp(g, h)?;
                let (her, sat) = (is_hereditary(g, p.as_set())?, is_saturated(g, p.as_set())?);
                Verdict::expect(her && sat, || {
                    format!("perp hereditary = {her}, saturated = {sat}")
                })
            }
            Check::TriplePerp => {
                let once = perp(g, h)?;
                let thrice = perp(g, &perp(g, &once)?)?;
                Verdict::expect(once == thrice, || {
                    format!(
                        "perp = {}, perp³ = {}",
                        self.fmt_set(once.as_set()),
                        self.fmt_set(thrice.as_set())
                    )
                })
            }
            Check::PerpPerpFormula => {
                let formula = perp_perp(g, h)?;
                let twice = perp(g, &perp(g, h)?)?;
                Verdict::expect(formula == twice, || {
                    format!(
                        "{{w : T(w) ⊆ H̄}} = {}, perp∘perp = {}",
                        self.fmt_set(formula.as_set()),
                        self.fmt_set(twice.as_set())
                    )
                })
            }
            Check::RegularityConsistent => {
                let by_formula = perp_perp(g, h)? == *h;
                let by_predicate = is_regular(g, h)?;
                let flag = flagged_regular.unwrap_or(by_predicate);
                Verdict::expect(by_formula == by_predicate && flag == by_predicate, || {
                    format!(
                        "H = perp_perp(H): {by_formula}, is_regular: {by_predicate}, lattice flag: {flag}"
                    )
                })
            }
            Check::RegularQuotientL => {
                if !self.condition_l {
                    Verdict::skip("graph fails Condition (L)")
                } else if !is_regular(g, h)? {
                    let q = quotient_graph(g, h)?;
                    Verdict::skip(format!(
                        "not regular; quotient has Condition (L) = {}",
                        has_condition_l(&q)
                    ))
                } else {
                    let q = quotient_graph(g, h)?;
                    match find_entryless_cycle(&q) {
                        None => Verdict::pass(),
                        Some(cycle) => Verdict {
                            cycle: Some(cycle),
                            ..Verdict::fail("regular quotient has an entryless cycle")
                        },
                    }
                }
            }
            _ => unreachable!("{check} is a per-graph check"),
        })
    }
}

fn ids(g: &Graph, s: &VertexSet) -> Vec<String> {
    g.set_ids(s).into_iter().map(String::from).collect()
}

fn record(
    g: &Graph,
    check: Check,
    set: Option<&SatHerSet>,
    verdict: Verdict,
    graph_index: Option<usize>,
) -> CheckRecord {
    let set_ids = set.map(|s| ids(g, s.as_set()));
    let witness = (verdict.outcome == Outcome::Fail).then(|| Witness {
        graph: serialize_graph(g, GraphFormat::Line),
        set: set_ids.clone(),
        cycle: verdict.cycle.clone(),
    });
    CheckRecord {
        check,
        outcome: verdict.outcome,
        graph_index,
        set: set_ids,
        detail: verdict.detail,
        witness,
    }
}

/// Runs every check on `g` with the literal oracles.
pub fn verify_graph(g: &Graph) -> Result<VerificationReport> {
    verify_graph_with(g, &LiteralOracle, &LatticeOptions::default())
}

pub fn verify_graph_with(
    g: &Graph,
    oracle: &dyn Oracle,
    opts: &LatticeOptions,
) -> Result<VerificationReport> {
    let mut report = VerificationReport::default();
    append_graph(&mut report, g, oracle, opts, None)?;
    Ok(report)
}

fn append_graph(
    report: &mut VerificationReport,
    g: &Graph,
    oracle: &dyn Oracle,
    opts: &LatticeOptions,
    graph_index: Option<usize>,
) -> Result<()> {
    let lattice = enumerate_sat_her_with(g, opts)?;
    let mut ctx = Context::new(g, oracle);
    report.graphs.push(GraphSummary {
        vertices: g.vertex_count(),
        edges: g.edge_count(),
    });
    for check in Check::PER_GRAPH {
        let verdict = ctx.graph_check(check, &lattice);
        report
            .records
            .push(record(g, check, None, verdict, graph_index));
    }
    for entry in lattice.entries() {
        for check in Check::PER_SET {
            let verdict = ctx.set_check(check, &entry.set, Some(entry.regular));
            report
                .records
                .push(record(g, check, Some(&entry.set), verdict, graph_index));
        }
    }
    Ok(())
}

/// Runs [`verify_graph_with`] over every member of a seeded ensemble.
pub fn verify_ensemble(
    ensemble: &Ensemble,
    oracle: &dyn Oracle,
    opts: &LatticeOptions,
) -> Result<VerificationReport> {
    let mut report = VerificationReport {
        ensemble: Some(EnsembleMeta {
            seed: ensemble.seed,
            count: ensemble.count,
        }),
        ..Default::default()
    };
    for (i, g) in ensemble.graphs().enumerate() {
        append_graph(&mut report, &g, oracle, opts, Some(i))?;
    }
    Ok(report)
}

/// Rebuilds the graph and set of a failing record from its witness and
/// reruns that single check.
pub fn reproduce(record: &CheckRecord, oracle: &dyn Oracle) -> Result<Outcome> {
    let witness = record
        .witness
        .as_ref()
        .ok_or_else(|| Error::InvalidParameter("record carries no witness".into()))?;
    let g = parse_graph(&witness.graph, GraphFormat::Line)?;
    let mut ctx = Context::new(&g, oracle);
    let verdict = match &witness.set {
        None => {
            let lattice = enumerate_sat_her_with(&g, &LatticeOptions::default())?;
            ctx.graph_check(record.check, &lattice)
        }
        Some(members) => {
            let set = g.set_from_ids(members).map_err(Error::UnknownVertex)?;
            let h = SatHerSet::new_exact(&g, set)?;
            ctx.set_check(record.check, &h, None)
        }
    };
    Ok(verdict.outcome)
}

/// A non-regular `H` whose quotient has an entryless cycle, on a graph with
/// Condition (L). The cycle is returned with it.
pub fn find_l_preservation_counterexample(g: &Graph) -> Result<Option<(SatHerSet, CycleWitness)>> {
    if !has_condition_l(g) {
        return Err(Error::Precondition("graph fails Condition (L)".into()));
    }
    let lattice = enumerate_sat_her_with(g, &LatticeOptions::default())?;
    for entry in lattice.entries().iter().filter(|e| !e.regular) {
        let q = quotient_graph(g, &entry.set)?;
        if let Some(cycle) = find_entryless_cycle(&q) {
            return Ok(Some((entry.set.clone(), cycle)));
        }
    }
    Ok(None)
}

/// Non-regular sets whose quotient keeps Condition (L): regularity is
/// sufficient for preserving (L) but not necessary.
pub fn non_regular_l_preserving(g: &Graph) -> Result<Vec<SatHerSet>> {
    let lattice = enumerate_sat_her_with(g, &LatticeOptions::default())?;
    let mut out = Vec::new();
    for entry in lattice.entries().iter().filter(|e| !e.regular) {
        if has_condition_l(&quotient_graph(g, &entry.set)?) {
            out.push(entry.set.clone());
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::{parse_graph, GraphFormat};

    const FORK: &str = "vertex v1\nvertex v2\nvertex w\nedge a v1 w\nedge b v2 w\n";
    const VLOOP: &str = "vertex v\nvertex w\nedge e v w\nedge f w w\n";

    fn graph(text: &str) -> Graph {
        parse_graph(text, GraphFormat::Line).unwrap()
    }

    #[test]
    fn fork_passes_everything() {
        let g = graph(FORK);
        let report = verify_graph(&g).unwrap();
        assert!(report.passed());
        assert_eq!(report.records.len(), 2 + 4 * Check::PER_SET.len());
        let skips = report
            .records
            .iter()
            .filter(|r| r.outcome == Outcome::Skip)
            .count();
        // the fork has no cycles, so every set is checked for (L) preservation
        assert_eq!(skips, 0);
    }

    #[test]
    fn vloop_records_non_regular_quotient() {
        let g = graph(VLOOP);
        let report = verify_graph(&g).unwrap();
        assert!(report.passed());
        let rec = report
            .records
            .iter()
            .find(|r| {
                r.check == Check::RegularQuotientL
                    && r.set.as_deref() == Some(&["v".to_string()][..])
            })
            .unwrap();
        assert_eq!(rec.outcome, Outcome::Skip);
        assert_eq!(
            rec.detail.as_deref(),
            Some("not regular; quotient has Condition (L) = false")
        );
    }

    #[test]
    fn counterexample_search() {
        let g = graph(VLOOP);
        let (h, cycle) = find_l_preservation_counterexample(&g).unwrap().unwrap();
        assert_eq!(g.set_ids(h.as_set()), ["v"]);
        assert_eq!(cycle.edges(), ["f"]);
        assert_eq!(
            find_l_preservation_counterexample(&graph(FORK)).unwrap(),
            None
        );
        assert!(matches!(
            find_l_preservation_counterexample(&graph("vertex v\nedge f v v\n")),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn table_lists_checks() {
        let report = verify_graph(&graph(FORK)).unwrap();
        let table = report.to_table();
        assert!(table.starts_with("graphs: 1  vertices: 3  edges: 2\n"));
        assert!(table.contains("PASS  perp-matches-oracle"));
        assert!(!table.contains("FAIL"));
    }
}
