//! Command-line front end.
//!
//! Exit codes: 0 success, 2 parse or usage error, 3 invalid set, 4 capacity
//! exceeded, 5 verification failure. Every nonzero exit writes one line
//! starting with `error:` to the error stream.

use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::cycles::find_entryless_cycle;
use crate::error::Error;
use crate::format::{format_set, parse_graph, serialize_graph, to_dot, GraphFormat};
use crate::generators::{gen_chain_loops, gen_figure1, gen_random, Ensemble};
use crate::graph::Graph;
use crate::ideals::{
    enumerate_sat_her_with, is_regular, lattice_record, perp, perp_perp, quotient_graph, saturate,
    LatticeOptions, SatHerSet,
};
use crate::verify::{verify_ensemble, verify_graph_with, LiteralOracle, VerificationReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INVALID_SET: i32 = 3;
pub const EXIT_CAPACITY: i32 = 4;
pub const EXIT_VERIFY_FAILED: i32 = 5;

#[derive(Parser, Debug)]
#[command(
    name = "graph-ideals",
    version,
    about = "Gauge-invariant ideal lattices of graph algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputMode {
    Table,
    Structured,
    Dot,
}

#[derive(Args, Debug)]
struct Output {
    /// Output mode.
    #[arg(long, value_enum, default_value_t = OutputMode::Table)]
    output: OutputMode,
    /// Shorthand for `--output dot`.
    #[arg(long, conflicts_with_all = ["output", "structured"])]
    dot: bool,
    /// Shorthand for `--output structured`.
    #[arg(long, conflicts_with = "output")]
    structured: bool,
}

impl Output {
    fn mode(&self) -> OutputMode {
        if self.dot {
            OutputMode::Dot
        } else if self.structured {
            OutputMode::Structured
        } else {
            self.output
        }
    }
}

#[derive(Args, Debug)]
struct SetArgs {
    /// Graph file (`.graph` line format, `.json` structured; `-` reads line format from stdin).
    graph: PathBuf,
    /// Comma-separated vertex ids.
    #[arg(long, allow_hyphen_values = true)]
    set: String,
    /// Reject sets that are not saturated hereditary instead of saturating them.
    #[arg(long)]
    exact: bool,
    #[command(flatten)]
    out: Output,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List every saturated hereditary set with its regularity and perp.
    Lattice {
        graph: PathBuf,
        #[arg(long, default_value_t = LatticeOptions::default().max_entries)]
        max_lattice: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Annihilator of a set: the complement of its forward closure.
    Perp(SetArgs),
    /// Regularity test for a set, with its quotient's Condition (L).
    Regular(SetArgs),
    /// Quotient graph by a set.
    Quotient(SetArgs),
    /// Condition (L), with an entryless cycle when it fails.
    CheckL {
        graph: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Cross-check one graph, or a seeded random ensemble, against the oracles.
    Verify {
        /// Graph to verify; omit to run an ensemble.
        graph: Option<PathBuf>,
        #[arg(long, default_value_t = Ensemble::default().count)]
        count: usize,
        #[arg(long, default_value_t = Ensemble::default().seed)]
        seed: u64,
        #[arg(long, default_value_t = Ensemble::default().max_vertices)]
        max_vertices: usize,
        #[arg(long, default_value_t = Ensemble::default().max_edges)]
        max_edges: usize,
        #[arg(long, default_value_t = Ensemble::default().loop_prob)]
        loop_prob: f64,
        #[arg(long, default_value_t = LatticeOptions::default().max_entries)]
        max_lattice: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Emit a generated graph.
    Gen {
        #[command(subcommand)]
        family: Family,
    },
}

#[derive(Subcommand, Debug)]
enum Family {
    /// Depth-truncated binary tree with a loop at every vertex.
    Figure1 {
        #[arg(long)]
        depth: u32,
        #[command(flatten)]
        out: Output,
    },
    /// Chain with a loop at every vertex.
    Chain {
        #[arg(long)]
        length: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Seeded random multigraph.
    Random {
        #[arg(long)]
        vertices: usize,
        #[arg(long)]
        edges: usize,
        #[arg(long, default_value_t = 0.3)]
        loop_prob: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: Output,
    },
}

/// A failed command: exit code plus the reason line.
struct Failure {
    code: i32,
    reason: String,
}

impl Failure {
    fn usage(reason: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            reason: reason.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Parse(_) | Error::Graph(_) | Error::InvalidParameter(_) => EXIT_USAGE,
            Error::ForeignSet
            | Error::UnknownVertex(_)
            | Error::NotHereditary
            | Error::NotSaturated => EXIT_INVALID_SET,
            Error::CapacityExceeded { .. } => EXIT_CAPACITY,
            Error::Precondition(_) | Error::NonUniqueMaximum | Error::InvariantViolation(_) => {
                EXIT_INTERNAL
            }
        };
        Failure {
            code,
            reason: e.to_string(),
        }
    }
}

type CmdResult = Result<i32, Failure>;

struct Io<'a> {
    stdin: &'a mut dyn Read,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Io<'_> {
    fn write_out(&mut self, text: &str) -> Result<(), Failure> {
        self.out
            .write_all(text.as_bytes())
            .map_err(|e| Failure::usage(format!("cannot write output: {e}")))
    }

    fn note(&mut self, text: &str) {
        let _ = writeln!(self.err, "note: {text}");
    }
}

/// Parses `argv` (program name first) and runs the command.
pub fn run<I, T>(argv: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return EXIT_OK;
            }
            let first = e.to_string();
            let first = first
                .lines()
                .next()
                .unwrap_or("invalid arguments")
                .trim_start_matches("error: ");
            let _ = writeln!(err, "error: {first}");
            let _ = write!(err, "{}", e.render());
            return EXIT_USAGE;
        }
    };
    let mut io = Io { stdin, out, err };
    match dispatch(cli.command, &mut io) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(io.err, "error: {}", f.reason);
            f.code
        }
    }
}

fn load_graph(path: &Path, io: &mut Io) -> Result<Graph, Failure> {
    let (text, format) = if path == Path::new("-") {
        let mut text = String::new();
        io.stdin
            .read_to_string(&mut text)
            .map_err(|e| Failure::usage(format!("cannot read stdin: {e}")))?;
        (text, GraphFormat::Line)
    } else {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
        (text, GraphFormat::from_path(path))
    };
    parse_graph(&text, format).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn resolve_set(g: &Graph, args: &SetArgs, io: &mut Io) -> Result<SatHerSet, Failure> {
    let ids: Vec<&str> = args
        .set
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect();
    let raw = g.set_from_ids(&ids).map_err(Error::UnknownVertex)?;
    if args.exact {
        return Ok(SatHerSet::new_exact(g, raw)?);
    }
    let closed = saturate(g, &raw)?;
    if closed.as_set() != &raw {
        io.note(&format!(
            "saturated {} to {}",
            format_set(g, &raw),
            format_set(g, closed.as_set())
        ));
    }
    Ok(closed)
}

fn emit_graph(g: &Graph, mode: OutputMode, io: &mut Io) -> CmdResult {
    let text = match mode {
        OutputMode::Table => serialize_graph(g, GraphFormat::Line),
        OutputMode::Structured => serialize_graph(g, GraphFormat::Structured),
        OutputMode::Dot => to_dot(g),
    };
    io.write_out(&text)?;
    Ok(EXIT_OK)
}

fn no_dot(mode: OutputMode, what: &str) -> Result<(), Failure> {
    if mode == OutputMode::Dot {
        Err(Failure::usage(format!(
            "dot output is only available for graphs, not {what}"
        )))
    } else {
        Ok(())
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("result serializes");
    s.push('\n');
    s
}

fn set_record_json(g: &Graph, h: &SatHerSet) -> Result<String, Failure> {
    Ok(to_json(&[lattice_record(g, h)?]))
}

fn dispatch(command: Command, io: &mut Io) -> CmdResult {
    match command {
        Command::Lattice {
            graph,
            max_lattice,
            out,
        } => {
            let mode = out.mode();
            no_dot(mode, "lattices")?;
            let g = load_graph(&graph, io)?;
            let lattice = enumerate_sat_her_with(
                &g,
                &LatticeOptions {
                    max_entries: max_lattice,
                },
            )?;
            let text = match mode {
                OutputMode::Structured => to_json(&lattice.records(&g)),
                _ => {
                    let mut text = String::new();
                    for e in lattice.entries() {
                        text.push_str(&format!(
                            "{}\tregular={}\tperp={}\n",
                            format_set(&g, e.set.as_set()),
                            e.regular,
                            format_set(&g, lattice.get(e.perp).set.as_set())
                        ));
                    }
                    text
                }
            };
            io.write_out(&text)?;
            Ok(EXIT_OK)
        }
        Command::Perp(args) => {
            let mode = args.out.mode();
            no_dot(mode, "sets")?;
            let g = load_graph(&args.graph, io)?;
            let h = resolve_set(&g, &args, io)?;
            let p = perp(&g, &h)?;
            let text = match mode {
                OutputMode::Structured => set_record_json(&g, &p)?,
                _ => format!("{}\n", format_set(&g, p.as_set())),
            };
            io.write_out(&text)?;
            Ok(EXIT_OK)
        }
        Command::Regular(args) => {
            let mode = args.out.mode();
            no_dot(mode, "sets")?;
            let g = load_graph(&args.graph, io)?;
            let h = resolve_set(&g, &args, io)?;
            let text = match mode {
                OutputMode::Structured => set_record_json(&g, &h)?,
                _ => {
                    let p = perp(&g, &h)?;
                    let pp = perp_perp(&g, &h)?;
                    let q = quotient_graph(&g, &h)?;
                    format!(
                        "set\t{}\nperp\t{}\nperp_perp\t{}\nregular\t{}\ngraph_condition_l\t{}\nquotient_condition_l\t{}\n",
                        format_set(&g, h.as_set()),
                        format_set(&g, p.as_set()),
                        format_set(&g, pp.as_set()),
                        is_regular(&g, &h)?,
                        find_entryless_cycle(&g).is_none(),
                        find_entryless_cycle(&q).is_none(),
                    )
                }
            };
            io.write_out(&text)?;
            Ok(EXIT_OK)
        }
        Command::Quotient(args) => {
            let g = load_graph(&args.graph, io)?;
            let h = resolve_set(&g, &args, io)?;
            let q = quotient_graph(&g, &h)?;
            emit_graph(&q, args.out.mode(), io)
        }
        Command::CheckL { graph, out } => {
            let mode = out.mode();
            no_dot(mode, "Condition (L) results")?;
            let g = load_graph(&graph, io)?;
            let cycle = find_entryless_cycle(&g);
            let text = match mode {
                OutputMode::Structured => {
                    #[derive(Serialize)]
                    struct LResult<'a> {
                        condition_l: bool,
                        cycle: Option<&'a [String]>,
                    }
                    to_json(&LResult {
                        condition_l: cycle.is_none(),
                        cycle: cycle.as_ref().map(|c| c.edges()),
                    })
                }
                _ => match &cycle {
                    None => "condition_l\ttrue\n".to_string(),
                    Some(c) => format!(
                        "condition_l\tfalse\nentryless_cycle\t{}\ncycle_vertices\t{}\n",
                        c.edges().join(","),
                        c.vertices(&g).join(",")
                    ),
                },
            };
            io.write_out(&text)?;
            Ok(EXIT_OK)
        }
        Command::Verify {
            graph,
            count,
            seed,
            max_vertices,
            max_edges,
            loop_prob,
            max_lattice,
            out,
        } => {
            let mode = out.mode();
            no_dot(mode, "reports")?;
            let opts = LatticeOptions {
                max_entries: max_lattice,
            };
            let report = match graph {
                Some(path) => {
                    let g = load_graph(&path, io)?;
                    verify_graph_with(&g, &LiteralOracle, &opts)?
                }
                None => {
                    if !(0.0..=1.0).contains(&loop_prob) {
                        return Err(Failure::usage(format!(
                            "loop probability {loop_prob} outside [0, 1]"
                        )));
                    }
                    let ensemble = Ensemble {
                        count,
                        max_vertices,
                        max_edges,
                        loop_prob,
                        seed,
                    };
                    verify_ensemble(&ensemble, &LiteralOracle, &opts)?
                }
            };
            emit_report(&report, mode, io)
        }
        Command::Gen { family } => match family {
            Family::Figure1 { depth, out } => {
                let (g, h) = gen_figure1(depth)?;
                io.note(&format!("truncated H = {}", format_set(&g, h.as_set())));
                emit_graph(&g, out.mode(), io)
            }
            Family::Chain { length, out } => emit_graph(&gen_chain_loops(length)?, out.mode(), io),
            Family::Random {
                vertices,
                edges,
                loop_prob,
                seed,
                out,
            } => emit_graph(
                &gen_random(vertices, edges, loop_prob, seed)?,
                out.mode(),
                io,
            ),
        },
    }
}

/// Writes the report; on failure also writes each witness to the error
/// stream and exits with [`EXIT_VERIFY_FAILED`].
pub(crate) fn emit_report_to(
    report: &VerificationReport,
    structured: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let text = if structured {
        report.to_json()
    } else {
        report.to_table()
    };
    let _ = out.write_all(text.as_bytes());
    if report.passed() {
        return EXIT_OK;
    }
    for r in report.failures() {
        let _ = writeln!(
            err,
            "witness: {}",
            serde_json::to_string(r).expect("record serializes")
        );
    }
    let failed = report.failures().count();
    let _ = writeln!(err, "error: verification failed ({failed} failing checks)");
    EXIT_VERIFY_FAILED
}

fn emit_report(report: &VerificationReport, mode: OutputMode, io: &mut Io) -> CmdResult {
    Ok(emit_report_to(
        report,
        mode == OutputMode::Structured,
        io.out,
        io.err,
    ))
}
