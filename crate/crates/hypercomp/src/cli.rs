//! Command-line front end. `run` is pure with respect to the process:
//! it returns the exit code and the output streams, so integration
//! tests can drive it without spawning.
//!
//! Exit codes: 0 success, 1 verification/feasibility failure, 2 input
//! error, 3 resource/budget error.

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::bounds::best_lower_bound;
use crate::competition::{competition_hypergraph, verify_witness, Witness};
use crate::constructions::{
    construct_auto_with_budget, find_elimination_ordering_with_stats, find_spanning_certificate,
    witness_acyclic_uniform, witness_complete_uniform, witness_connected_graph,
    witness_degree_one, witness_fallback, witness_from_elimination, witness_with_extra_edges,
    DEFAULT_SEARCH_BUDGET,
};
use crate::error::Error;
use crate::exact::{exact_hk_with, ExactOptions, Status, DEFAULT_BUDGET};
use crate::text::{emit_digraph, emit_hypergraph, parse_digraph, parse_hypergraph};

pub const SCHEMA_VERSION: u64 = 1;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandResult {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandResult {
    fn ok(stdout: String) -> Self {
        CommandResult {
            exit_code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(exit_code: i32, stderr: String) -> Self {
        CommandResult {
            exit_code,
            stdout: String::new(),
            stderr,
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "hypercomp", version, about = "Competition hypergraphs and hypercompetition numbers", disable_help_subcommand = true)]
struct Cli {
    /// Rejected: all algorithms are deterministic, nothing is seeded.
    #[arg(long, global = true, hide = true)]
    seed: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Structural summary of a hypergraph file
    Info { file: String },
    /// Lower bounds on the hypercompetition number
    Bounds {
        file: String,
        #[arg(long)]
        json: bool,
    },
    /// Build a verified witness digraph
    Construct {
        file: Option<String>,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
        /// Vertex count for --method complete-uniform
        #[arg(long)]
        n: Option<usize>,
        /// Edge size for --method complete-uniform
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        dot: bool,
        #[arg(long)]
        out: Option<String>,
        #[arg(long, default_value_t = DEFAULT_SEARCH_BUDGET)]
        budget: u64,
    },
    /// Exact hypercompetition number by branch and bound
    Exact {
        file: String,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        dot: bool,
        #[arg(long)]
        out: Option<String>,
    },
    /// Check a witness digraph against a hypergraph
    Verify {
        hypergraph: String,
        digraph: String,
        /// Comma-separated names of the claimed added vertices;
        /// defaults to the digraph vertices absent from the hypergraph
        #[arg(long)]
        added: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Competition hypergraph of a digraph
    Competition { file: String },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Method {
    Auto,
    Elimination,
    ExtraEdges,
    Graph,
    CompleteUniform,
    DegreeOne,
    AcyclicUniform,
    Fallback,
}

fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::Resource(_) | Error::BudgetExhausted => 3,
        _ => 2,
    }
}

fn read_file(path: &str) -> Result<String, CommandResult> {
    std::fs::read_to_string(path)
        .map_err(|e| CommandResult::fail(2, format!("cannot read {path}: {e}\n")))
}

fn load_hypergraph(path: &str) -> Result<crate::hypergraph::Hypergraph, CommandResult> {
    let text = read_file(path)?;
    parse_hypergraph(&text).map_err(|e| CommandResult::fail(2, format!("{path}: {e}\n")))
}

fn load_digraph(path: &str) -> Result<crate::digraph::Digraph, CommandResult> {
    let text = read_file(path)?;
    parse_digraph(&text).map_err(|e| CommandResult::fail(2, format!("{path}: {e}\n")))
}

pub fn run<I, S>(args: I) -> CommandResult
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv: Vec<String> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    CommandResult::ok(rendered)
                }
                _ => CommandResult::fail(2, rendered),
            };
        }
    };
    if cli.seed.is_some() {
        return CommandResult::fail(
            2,
            "--seed is not supported: all algorithms are deterministic\n".into(),
        );
    }
    match dispatch(cli.command) {
        Ok(result) => result,
        Err(result) => result,
    }
}

fn dispatch(cmd: Command) -> Result<CommandResult, CommandResult> {
    match cmd {
        Command::Info { file } => {
            let h = load_hypergraph(&file)?;
            let uniform = h
                .uniformity()
                .map(|r| r.to_string())
                .unwrap_or_else(|| "-".into());
            let min_edge = h
                .edges()
                .iter()
                .map(|e| e.len())
                .min()
                .map(|m| m.to_string())
                .unwrap_or_else(|| "-".into());
            let min_degree = (0..h.vertex_count())
                .map(|v| h.degree_of(v))
                .min()
                .map(|m| m.to_string())
                .unwrap_or_else(|| "-".into());
            Ok(CommandResult::ok(format!(
                "vertices={} edges={} uniform={} components={} isolated={} acyclic={} mindegree={} minedge={}\n",
                h.vertex_count(),
                h.edge_count(),
                uniform,
                h.connected_components().len(),
                h.isolated_vertices().len(),
                h.has_no_cycle(),
                min_degree,
                min_edge,
            )))
        }
        Command::Bounds { file, json } => {
            let h = load_hypergraph(&file)?;
            let report = best_lower_bound(&h);
            if json {
                let doc = json!({
                    "schemaVersion": SCHEMA_VERSION,
                    "sizeBound": report.size_bound,
                    "degreeBound": report.degree_bound,
                    "best": report.best,
                });
                Ok(CommandResult::ok(format!("{doc}\n")))
            } else {
                Ok(CommandResult::ok(format!(
                    "sizeBound={} degreeBound={} best={}\n",
                    report.size_bound, report.degree_bound, report.best
                )))
            }
        }
        Command::Construct {
            file,
            method,
            n,
            r,
            dot,
            out,
            budget,
        } => {
            let witness = build_witness(file.as_deref(), method, n, r, budget)?;
            let rendered = if dot {
                witness.digraph.to_dot()
            } else {
                emit_digraph(&witness.digraph)
            };
            let mut stdout = format!("k = {}\n", witness.added.len());
            match out {
                Some(path) => {
                    std::fs::write(&path, rendered)
                        .map_err(|e| CommandResult::fail(2, format!("cannot write {path}: {e}\n")))?;
                }
                None => stdout.push_str(&rendered),
            }
            Ok(CommandResult::ok(stdout))
        }
        Command::Exact {
            file,
            budget,
            threads,
            json,
            dot,
            out,
        } => {
            let h = load_hypergraph(&file)?;
            let result = exact_hk_with(&h, &ExactOptions { budget, threads });
            let rendered = if dot {
                result.witness.digraph.to_dot()
            } else {
                emit_digraph(&result.witness.digraph)
            };
            let exit = match result.status {
                Status::Proved => 0,
                Status::BudgetExhaustedUpperBound => 3,
            };
            let mut stdout = String::new();
            if json {
                let doc = json!({
                    "schemaVersion": SCHEMA_VERSION,
                    "hk": result.hk,
                    "status": result.status.to_string(),
                    "nodesExplored": result.nodes_explored,
                    "added": result.witness.added,
                    "witness": rendered,
                });
                let _ = writeln!(stdout, "{doc}");
            } else {
                let _ = writeln!(
                    stdout,
                    "hk={} status={} nodes={}",
                    result.hk, result.status, result.nodes_explored
                );
            }
            match out {
                Some(path) => {
                    std::fs::write(&path, &rendered)
                        .map_err(|e| CommandResult::fail(2, format!("cannot write {path}: {e}\n")))?;
                }
                None => {
                    if !json {
                        stdout.push_str(&rendered);
                    }
                }
            }
            Ok(CommandResult {
                exit_code: exit,
                stdout,
                stderr: String::new(),
            })
        }
        Command::Verify {
            hypergraph,
            digraph,
            added,
            json,
        } => {
            let base = load_hypergraph(&hypergraph)?;
            let d = load_digraph(&digraph)?;
            let added: Vec<String> = match added {
                Some(list) => list
                    .split(',')
                    .map(str::trim)
                    .filter(|s| !s.is_empty())
                    .map(String::from)
                    .collect(),
                None => d
                    .vertices()
                    .iter()
                    .filter(|v| base.vertex_id(v).is_none())
                    .cloned()
                    .collect(),
            };
            let k = added.len();
            let report = verify_witness(&Witness {
                digraph: d,
                base,
                added,
            });
            if json {
                let doc = json!({
                    "schemaVersion": SCHEMA_VERSION,
                    "ok": report.ok(),
                    "k": k,
                    "failure": report.failure.as_ref().map(|f| f.to_string()),
                });
                Ok(CommandResult {
                    exit_code: if report.ok() { 0 } else { 1 },
                    stdout: format!("{doc}\n"),
                    stderr: String::new(),
                })
            } else {
                match report.failure {
                    None => Ok(CommandResult::ok(format!("OK k={k}\n"))),
                    Some(f) => Ok(CommandResult {
                        exit_code: 1,
                        stdout: format!("{f}\n"),
                        stderr: String::new(),
                    }),
                }
            }
        }
        Command::Competition { file } => {
            let d = load_digraph(&file)?;
            let ch = competition_hypergraph(&d);
            Ok(CommandResult::ok(emit_hypergraph(&ch)))
        }
    }
}

fn build_witness(
    file: Option<&str>,
    method: Method,
    n: Option<usize>,
    r: Option<usize>,
    budget: u64,
) -> Result<Witness, CommandResult> {
    let precondition =
        |e: Error| CommandResult::fail(exit_code_for(&e), format!("{e}\n"));
    if method == Method::CompleteUniform {
        let (n, r) = match (n, r) {
            (Some(n), Some(r)) => (n, r),
            _ => {
                return Err(CommandResult::fail(
                    2,
                    "--method complete-uniform requires --n and --r\n".into(),
                ))
            }
        };
        return witness_complete_uniform(n, r).map_err(precondition);
    }
    let file = file.ok_or_else(|| {
        CommandResult::fail(2, "this method requires a hypergraph file\n".into())
    })?;
    let h = load_hypergraph(file)?;
    match method {
        Method::Auto => Ok(construct_auto_with_budget(&h, budget)),
        Method::Elimination => {
            let (found, stats) =
                find_elimination_ordering_with_stats(&h, budget).map_err(precondition)?;
            match found {
                Some(ord) => witness_from_elimination(&h, &ord).map_err(precondition),
                None if stats.budget_exhausted => Err(CommandResult::fail(
                    3,
                    "elimination-ordering search budget exhausted\n".into(),
                )),
                None => Err(CommandResult::fail(
                    2,
                    "no elimination ordering exists for this hypergraph\n".into(),
                )),
            }
        }
        Method::ExtraEdges => {
            let search = find_spanning_certificate(&h, budget).map_err(precondition)?;
            match search.certificate {
                Some(cert) => witness_with_extra_edges(&h, &cert).map_err(precondition),
                None if search.budget_exhausted => Err(CommandResult::fail(
                    3,
                    "spanning-subhypergraph search budget exhausted\n".into(),
                )),
                None => Err(CommandResult::fail(
                    2,
                    "no spanning subhypergraph with an elimination ordering found\n".into(),
                )),
            }
        }
        Method::Graph => witness_connected_graph(&h).map_err(precondition),
        Method::DegreeOne => witness_degree_one(&h).map_err(precondition),
        Method::AcyclicUniform => witness_acyclic_uniform(&h).map_err(precondition),
        Method::Fallback => Ok(witness_fallback(&h)),
        Method::CompleteUniform => unreachable!("handled above"),
    }
}
