//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Every criterion runs at zero tolerance.

use std::io::Cursor;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use graph_ideals::cli;
use graph_ideals::generators::{gen_chain_loops, gen_figure1, Ensemble};
use graph_ideals::ideals::{
    enumerate_sat_her, is_hereditary, is_regular, is_saturated, perp, perp_perp, quotient_graph,
    SatHerSet,
};
use graph_ideals::verify::{
    maximal_disjoint, oracle_condition_l, oracle_enumerate_sat_her, verify_ensemble, LiteralOracle,
};
use graph_ideals::{
    forward_closure, has_condition_l, parse_graph, EdgeSpec, Graph, GraphFormat, VertexSet,
};

const SWEEP_MAX_VERTICES: usize = 4;
const SWEEP_MAX_MULTIPLICITY: u32 = 2;
const RUNTIME_BUDGET: Duration = Duration::from_secs(300);

/// Failures for criteria 1, 2 and 3 on one graph.
#[derive(Default)]
struct SweepTally {
    graphs: u64,
    lattice_elements: u64,
    condition_l_graphs: u64,
    regular_quotients_checked: u64,
    c1: Vec<String>,
    c2: Vec<String>,
    c3: Vec<String>,
}

impl SweepTally {
    fn note(list: &mut Vec<String>, g: &Graph, h: Option<&VertexSet>, what: &str) {
        if list.len() < 5 {
            let set = h
                .map(|h| graph_ideals::format::format_set(g, h))
                .unwrap_or_default();
            list.push(format!(
                "{what} {set} in\n{}",
                graph_ideals::serialize_graph(g, GraphFormat::Line)
            ));
        } else {
            list.push(String::new());
        }
    }

    fn check(&mut self, g: &Graph) {
        self.graphs += 1;
        let lattice = enumerate_sat_her(g).expect("lattice within capacity");
        let oracle = oracle_enumerate_sat_her(g).expect("oracle within capacity");
        let sets: Vec<&SatHerSet> = lattice.sets().collect();
        if sets.iter().map(|s| s.as_set()).ne(oracle.iter()) {
            Self::note(&mut self.c1, g, None, "lattice differs from subset filter");
        }
        let condition_l = has_condition_l(g);
        if condition_l {
            self.condition_l_graphs += 1;
        }
        for (h, entry) in sets.iter().zip(lattice.entries()) {
            self.lattice_elements += 1;
            let hs = h.as_set();
            let p = perp(g, h).expect("perp");
            match maximal_disjoint(&oracle, hs) {
                Ok(o) if &o == p.as_set() => {}
                _ => Self::note(&mut self.c1, g, Some(hs), "perp differs from oracle at"),
            }
            let pp_formula = perp_perp(g, h).expect("perp_perp");
            let pp = perp(g, &p).expect("perp");
            if pp_formula != pp {
                Self::note(&mut self.c1, g, Some(hs), "perp_perp formula differs at");
            }
            let regular = is_regular(g, h).expect("is_regular");
            if regular != (pp_formula == **h) || regular != entry.regular {
                Self::note(&mut self.c1, g, Some(hs), "regularity mismatch at");
            }

            let ps = p.as_set();
            if !(is_hereditary(g, ps).unwrap() && is_saturated(g, ps).unwrap()) {
                Self::note(&mut self.c2, g, Some(hs), "perp not sat-her at");
            }
            if perp(g, &pp).expect("perp") != p {
                Self::note(&mut self.c2, g, Some(hs), "triple perp differs at");
            }

            if condition_l && regular {
                self.regular_quotients_checked += 1;
                let q = quotient_graph(g, h).expect("quotient");
                if !has_condition_l(&q) {
                    Self::note(&mut self.c3, g, Some(hs), "regular quotient fails (L) at");
                }
            }
        }
    }
}

/// Labelled sweep bound; above it one graph per isomorphism class is checked.
const LABELLED_MAX_VERTICES: usize = 3;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Number of multigraphs on `n` vertices up to isomorphism, by Burnside's
/// lemma over the induced action on ordered pairs.
fn burnside_classes(n: usize, max_mult: u32) -> u64 {
    let perms = permutations(n);
    let fixed: u64 = perms
        .iter()
        .map(|p| {
            let mut seen = vec![false; n * n];
            let mut cycles = 0;
            for start in 0..n * n {
                let mut x = start;
                if seen[x] {
                    continue;
                }
                cycles += 1;
                while !seen[x] {
                    seen[x] = true;
                    x = p[x / n] * n + p[x % n];
                }
            }
            u64::from(max_mult + 1).pow(cycles)
        })
        .sum();
    fixed / perms.len() as u64
}

fn build(n: usize, mult: &[u32]) -> Graph {
    let names: Vec<String> = (0..n).map(|v| format!("x{v}")).collect();
    let mut edges = Vec::new();
    for (p, &m) in mult.iter().enumerate() {
        let (s, r) = (p / n, p % n);
        for k in 0..m {
            edges.push(EdgeSpec::new(
                format!("e{s}{r}{k}"),
                names[s].clone(),
                names[r].clone(),
            ));
        }
    }
    Graph::new(names, edges).unwrap()
}

/// Calls `f` on multigraphs with `n` vertices and at most `max_mult`
/// parallel edges per ordered pair, loops included. With `labelled` every
/// labelling is visited; otherwise only the labelling whose multiplicity code
/// is least among its relabellings. Returns the number of graphs visited.
fn for_each_graph(n: usize, max_mult: u32, labelled: bool, mut f: impl FnMut(&Graph)) -> u64 {
    let base = u64::from(max_mult + 1);
    let cells = n * n;
    let total = base.pow(cells as u32);
    let weight: Vec<u64> = (0..cells as u32).map(|i| base.pow(i)).collect();
    let relabel: Vec<Vec<usize>> = permutations(n)
        .into_iter()
        .map(|p| (0..cells).map(|c| p[c / n] * n + p[c % n]).collect())
        .collect();
    let mut mult = vec![0u32; cells];
    let mut visited = 0;
    for code in 0..total {
        let mut rest = code;
        for m in mult.iter_mut() {
            *m = (rest % base) as u32;
            rest /= base;
        }
        let canonical = labelled
            || relabel.iter().all(|map| {
                let image: u64 = (0..cells)
                    .map(|c| u64::from(mult[c]) * weight[map[c]])
                    .sum();
                image >= code
            });
        if canonical {
            visited += 1;
            f(&build(n, &mult));
        }
    }
    visited
}

struct Outcome {
    pass: bool,
    summary: String,
}

fn report(results: &mut Vec<(String, Outcome)>, name: &str, pass: bool, summary: String) {
    println!("{} {name}: {summary}", if pass { "PASS" } else { "FAIL" });
    results.push((name.to_string(), Outcome { pass, summary }));
}

fn failures(list: &[String]) -> String {
    match list.first() {
        None => "0 failures".to_string(),
        Some(first) => format!("{} failures, first: {first}", list.len()),
    }
}

fn run_cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut argv = vec!["graph-ideals"];
    argv.extend_from_slice(args);
    let code = cli::run(argv, &mut Cursor::new(Vec::new()), &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn main() -> ExitCode {
    let mut results = Vec::new();

    // Criteria 1-3: exhaustive small graphs plus the default random ensemble.
    let start = Instant::now();
    let mut sweep = SweepTally::default();
    // ACCEPTANCE_LABELLED=1 visits every labelling at every size (slow).
    let all_labelled = std::env::var_os("ACCEPTANCE_LABELLED").is_some_and(|v| v == "1");
    let mut class_count_ok = true;
    for n in 0..=SWEEP_MAX_VERTICES {
        let labelled = all_labelled || n <= LABELLED_MAX_VERTICES;
        let visited = for_each_graph(n, SWEEP_MAX_MULTIPLICITY, labelled, |g| sweep.check(g));
        let expected = if labelled {
            u64::from(SWEEP_MAX_MULTIPLICITY + 1).pow((n * n) as u32)
        } else {
            burnside_classes(n, SWEEP_MAX_MULTIPLICITY)
        };
        class_count_ok &= visited == expected;
    }
    let sweep_graphs = sweep.graphs;
    let ensemble = Ensemble::default();
    for g in ensemble.graphs() {
        sweep.check(&g);
    }
    let elapsed = start.elapsed();
    let scope = format!(
        "{} exhaustive ({}) + {} ensemble graphs, {} lattice elements, {:.1}s",
        sweep_graphs,
        if all_labelled {
            "every labelling"
        } else {
            "labelled up to 3 vertices, isomorphism classes at 4"
        },
        ensemble.count,
        sweep.lattice_elements,
        elapsed.as_secs_f64()
    );
    report(
        &mut results,
        "1 oracle equivalence (perp, perp_perp, regularity)",
        sweep.c1.is_empty() && class_count_ok && (all_labelled || elapsed <= RUNTIME_BUDGET),
        format!(
            "{}; {scope} (budget {}s); sweep counts match Burnside: {class_count_ok}",
            failures(&sweep.c1),
            RUNTIME_BUDGET.as_secs()
        ),
    );
    report(
        &mut results,
        "2 perp is sat-her and perp^3 = perp",
        sweep.c2.is_empty(),
        format!("{}; {scope}", failures(&sweep.c2)),
    );
    report(
        &mut results,
        "3 regular quotients keep Condition (L)",
        sweep.c3.is_empty() && sweep.regular_quotients_checked > 0,
        format!(
            "{}; {} graphs with (L), {} regular quotients checked",
            failures(&sweep.c3),
            sweep.condition_l_graphs,
            sweep.regular_quotients_checked
        ),
    );

    // Criterion 4: the two-vertex non-converse witness.
    {
        let g = parse_graph(
            "vertex v\nvertex w\nedge e v w\nedge f w w\n",
            GraphFormat::Line,
        )
        .unwrap();
        let h = SatHerSet::new_exact(&g, g.set_from_ids(["v"]).unwrap());
        let ok_lib = has_condition_l(&g)
            && h.as_ref().is_ok_and(|h| {
                !is_regular(&g, h).unwrap() && !has_condition_l(&quotient_graph(&g, h).unwrap())
            });
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("vloop.graph");
        std::fs::write(&path, "vertex v\nvertex w\nedge e v w\nedge f w w\n").unwrap();
        let (code, out, _) = run_cli(&["regular", path.to_str().unwrap(), "--set", "v", "--exact"]);
        let expected = "set\t{v}\nperp\t∅\nperp_perp\t{v, w}\nregular\tfalse\ngraph_condition_l\ttrue\nquotient_condition_l\tfalse\n";
        report(
            &mut results,
            "4 non-regular H = {v} on v->w with loop at w",
            ok_lib && code == 0 && out == expected,
            format!("library check {ok_lib}; `regular vloop.graph --set v --exact` exit {code}"),
        );
    }

    // Criterion 5: truncations of the binary-tree example.
    {
        let mut problems = Vec::new();
        for d in 1..=6u32 {
            let (g, h) = gen_figure1(d).unwrap();
            let mut expected = g.full_set();
            expected.remove(
                g.vertex_index(&format!("v_{}", "1".repeat(d as usize)))
                    .unwrap(),
            );
            if forward_closure(&g, h.as_set()).unwrap() != expected {
                problems.push(format!("depth {d}: forward closure"));
            }
            if !is_regular(&g, &h).unwrap() {
                problems.push(format!("depth {d}: H_d not regular"));
            }
            let q = quotient_graph(&g, &h).unwrap();
            if q != gen_chain_loops(d as usize + 1).unwrap() {
                problems.push(format!("depth {d}: quotient is not the chain of loops"));
            }
        }
        report(
            &mut results,
            "5 depth 1-6 truncations: closure misses only v_1^d, H_d regular, quotient = chain",
            problems.is_empty(),
            if problems.is_empty() {
                "6 depths checked".to_string()
            } else {
                problems.join("; ")
            },
        );
    }

    // Criterion 6: Condition (L) against cycle enumeration.
    {
        let ensembles = [
            Ensemble::default(),
            Ensemble {
                max_vertices: 12,
                max_edges: 24,
                ..Ensemble::default()
            },
        ];
        let mut checked = 0;
        let mut bad = Vec::new();
        let mut without_l = 0;
        for e in &ensembles {
            for (i, g) in e.graphs().enumerate() {
                checked += 1;
                let l = has_condition_l(&g);
                without_l += usize::from(!l);
                if l != oracle_condition_l(&g).unwrap() {
                    bad.push(format!(
                        "graph {i} of ensemble ≤{} vertices",
                        e.max_vertices
                    ));
                }
            }
        }
        report(
            &mut results,
            "6 has_condition_l agrees with cycle enumeration",
            bad.is_empty(),
            format!(
                "{} disagreements over {checked} graphs ({without_l} without (L))",
                bad.len()
            ),
        );
    }

    // Criterion 7: CLI contract.
    {
        let dir = tempfile::tempdir().unwrap();
        let fork = dir.path().join("fork.graph");
        std::fs::write(
            &fork,
            "vertex v1\nvertex v2\nvertex w\nedge a v1 w\nedge b v2 w\n",
        )
        .unwrap();
        let bad = dir.path().join("bad.graph");
        std::fs::write(&bad, "edge e v w\n").unwrap();
        let fork = fork.to_str().unwrap();
        let mut problems = Vec::new();

        let first = run_cli(&["lattice", fork, "--structured"]);
        if first != run_cli(&["lattice", fork, "--structured"]) {
            problems.push("non-deterministic output".to_string());
        }
        match serde_json::from_str::<Vec<graph_ideals::ideals::LatticeRecord>>(&first.1) {
            Ok(rows) if rows.len() == 4 => {}
            _ => problems.push("structured lattice output invalid".to_string()),
        }
        let (_, text, _) = run_cli(&["gen", "figure1", "--depth", "2", "--structured"]);
        match parse_graph(&text, GraphFormat::Structured) {
            Ok(g) if g == gen_figure1(2).unwrap().0 => {}
            _ => problems.push("structured graph output does not round-trip".to_string()),
        }
        let (_, line, _) = run_cli(&[
            "gen",
            "random",
            "--vertices",
            "6",
            "--edges",
            "11",
            "--seed",
            "9",
        ]);
        let reparsed = parse_graph(&line, GraphFormat::Line)
            .map(|g| graph_ideals::serialize_graph(&g, GraphFormat::Line));
        if reparsed.as_deref() != Ok(line.as_str()) {
            problems.push("line graph output does not round-trip".to_string());
        }
        let classes = [
            (vec!["lattice", fork], 0),
            (vec!["lattice", bad.to_str().unwrap()], 2),
            (vec!["bogus"], 2),
            (vec!["perp", fork, "--set", "w", "--exact"], 3),
            (vec!["perp", fork, "--set", "nope"], 3),
            (vec!["lattice", fork, "--max-lattice", "2"], 4),
            (vec!["verify", fork], 0),
        ];
        for (args, want) in &classes {
            let (code, _, err) = run_cli(args);
            if code != *want {
                problems.push(format!("{args:?}: exit {code}, wanted {want}"));
            }
            if *want != 0 && !err.lines().any(|l| l.starts_with("error:")) {
                problems.push(format!("{args:?}: no error: line"));
            }
        }
        report(
            &mut results,
            "7 CLI determinism, exit codes, structured output",
            problems.is_empty(),
            if problems.is_empty() {
                format!("{} exit-code cases, round-trips ok", classes.len())
            } else {
                problems.join("; ")
            },
        );
    }

    // The library's own verification module over the default ensemble.
    {
        let r = verify_ensemble(&Ensemble::default(), &LiteralOracle, &Default::default()).unwrap();
        let fails = r.failures().count();
        report(
            &mut results,
            "verify_ensemble (default seed 0, 1000 graphs)",
            fails == 0,
            format!("{} records, {fails} failures", r.records.len()),
        );
    }

    let failed: Vec<&str> = results
        .iter()
        .filter(|(_, o)| !o.pass)
        .map(|(n, _)| n.as_str())
        .collect();
    if failed.is_empty() {
        println!("acceptance: all {} criteria passed", results.len());
        ExitCode::SUCCESS
    } else {
        for (name, o) in results.iter().filter(|(_, o)| !o.pass) {
            eprintln!("failed: {name}: {}", o.summary);
        }
        ExitCode::FAILURE
    }
}
