//! Command-line front end: loads edge-list graphs, runs the basis /
//! counting / oracle / pipeline stages individually or the whole corpus
//! harness, and prints text or JSON. Exit code 0 means a verdict or
//! report was produced (including negative verdicts); 2 means the input
//! could not be used.

use clap::{Parser, Subcommand};
use hamcheck_core::config::SolverConfig;
use hamcheck_core::corpus::{generate_corpus, run_corpus, CorpusSpec};
use hamcheck_core::generate::generate_named;
use hamcheck_core::graph::{parse_graph, Graph};
use hamcheck_core::grinberg::{enumerate_count_solutions, grinberg_rhs};
use hamcheck_core::mcb::{dump_basis, horton_mcb};
use hamcheck_core::oracle::{brute_force_hamiltonian, OracleOutcome};
use hamcheck_core::pipeline::{solve, Verdict};
use hamcheck_core::trace::render_trace;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "hamcheck",
    about = "Cycle-space Hamiltonicity toolkit",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the minimum cycle basis.
    Mcb {
        /// Edge-list file, or name:<generator> (for example name:petersen,
        /// name:grid:3:4).
        graph: String,
        #[arg(long)]
        json: bool,
    },
    /// Print the order histogram, the counting target, and its solutions.
    Grinberg {
        graph: String,
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Run the exhaustive backtracking oracle.
    Oracle {
        graph: String,
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Decide Hamiltonicity with the deletion pipeline.
    Solve {
        graph: String,
        #[arg(long)]
        config: Option<PathBuf>,
        /// Write a replayable JSONL trace of the run here.
        #[arg(long)]
        trace: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Run a corpus spec through the pipeline and the oracle.
    Corpus {
        spec: PathBuf,
        /// Write the JSON report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Directory for discrepancy traces.
        #[arg(long)]
        traces: Option<PathBuf>,
        #[arg(long)]
        config: Option<PathBuf>,
        /// Overrides the config seed.
        #[arg(long)]
        seed: Option<u64>,
    },
}

fn load_config(path: Option<&Path>) -> Result<SolverConfig, String> {
    match path {
        None => Ok(SolverConfig::default()),
        Some(p) => {
            let text = std::fs::read_to_string(p)
                .map_err(|e| format!("config {}: {e}", p.display()))?;
            SolverConfig::parse(&text).map_err(|e| format!("config {}: {e}", p.display()))
        }
    }
}

/// Loads a graph from an edge-list file, or builds a named generator
/// when the argument looks like name:<generator>[:param...].
fn load_graph(arg: &str) -> Result<Graph, String> {
    if let Some(spec) = arg.strip_prefix("name:") {
        let mut parts = spec.split(':');
        let name = parts.next().unwrap_or_default();
        let mut params = Vec::new();
        for p in parts {
            params.push(
                p.parse::<u32>()
                    .map_err(|_| format!("generator parameter {p:?} is not a number"))?,
            );
        }
        return generate_named(name, &params, 0).map_err(|e| e.to_string());
    }
    let text = std::fs::read_to_string(arg).map_err(|e| format!("graph {arg}: {e}"))?;
    parse_graph(&text).map_err(|e| format!("graph {arg}: {e}"))
}

fn cmd_mcb(graph: &str, json: bool) -> Result<(), String> {
    let g = load_graph(graph)?;
    let basis = horton_mcb(&g).map_err(|e| e.to_string())?;
    if json {
        let cycles: Vec<&[u32]> = basis.cycles().iter().map(|c| c.vertices()).collect();
        let doc = serde_json::json!({
            "dimension": basis.dimension(),
            "weight": basis.weight(),
            "orders": basis.order_histogram(),
            "cycles": cycles,
        });
        println!("{doc}");
    } else {
        print!("{}", dump_basis(&basis));
        println!("dimension {} weight {}", basis.dimension(), basis.weight());
    }
    Ok(())
}

fn fmt_hist(h: &std::collections::BTreeMap<usize, usize>) -> String {
    let parts: Vec<String> = h.iter().map(|(o, c)| format!("{o}:{c}")).collect();
    parts.join(" ")
}

fn cmd_grinberg(graph: &str, config: Option<&Path>, json: bool) -> Result<(), String> {
    let g = load_graph(graph)?;
    let config = load_config(config)?;
    let basis = horton_mcb(&g).map_err(|e| e.to_string())?;
    let rhs = grinberg_rhs(&g);
    let enumeration = enumerate_count_solutions(basis.order_histogram(), rhs, config.solution_cap);
    if json {
        let vectors: Vec<_> = enumeration.vectors.iter().map(|v| v.counts()).collect();
        let doc = serde_json::json!({
            "orders": basis.order_histogram(),
            "target": rhs,
            "solutions": vectors,
            "truncated": enumeration.truncated,
        });
        println!("{doc}");
    } else {
        println!("orders {}", fmt_hist(basis.order_histogram()));
        println!("target {rhs}");
        println!(
            "solutions {}{}",
            enumeration.vectors.len(),
            if enumeration.truncated { " (truncated)" } else { "" }
        );
        for v in &enumeration.vectors {
            println!("  {}", fmt_hist(v.counts()));
        }
    }
    Ok(())
}

fn cmd_oracle(graph: &str, config: Option<&Path>, json: bool) -> Result<(), String> {
    let g = load_graph(graph)?;
    let config = load_config(config)?;
    let result = brute_force_hamiltonian(&g, config.oracle_budget);
    if json {
        let doc = match &result.outcome {
            OracleOutcome::Hamiltonian(seq) => serde_json::json!({
                "outcome": "hamiltonian",
                "cycle": seq,
                "expansions": result.expansions,
            }),
            OracleOutcome::NonHamiltonian => serde_json::json!({
                "outcome": "non_hamiltonian",
                "expansions": result.expansions,
            }),
            OracleOutcome::BudgetExceeded => serde_json::json!({
                "outcome": "budget_exceeded",
                "expansions": result.expansions,
            }),
        };
        println!("{doc}");
    } else {
        match &result.outcome {
            OracleOutcome::Hamiltonian(seq) => {
                let parts: Vec<String> = seq.iter().map(|v| v.to_string()).collect();
                println!("hamiltonian {}", parts.join("-"));
            }
            OracleOutcome::NonHamiltonian => println!("non_hamiltonian"),
            OracleOutcome::BudgetExceeded => println!("budget_exceeded"),
        }
        println!("expansions {}", result.expansions);
    }
    Ok(())
}

fn cmd_solve(
    graph: &str,
    config: Option<&Path>,
    trace: Option<&Path>,
    json: bool,
) -> Result<(), String> {
    let g = load_graph(graph)?;
    let config = load_config(config)?;
    let out = solve(&g, &config);
    if let Some(path) = trace {
        let text = render_trace(&g.render(), &config, &out.verdict, &out.stats, &out.trace);
        std::fs::write(path, text).map_err(|e| format!("trace {}: {e}", path.display()))?;
    }
    if json {
        let mut doc = serde_json::to_value(&out.verdict).expect("verdict serializes");
        doc["stats"] = serde_json::to_value(&out.stats).expect("stats serialize");
        println!("{doc}");
    } else {
        match &out.verdict {
            Verdict::Hamiltonian { cycle } => {
                let parts: Vec<String> = cycle.iter().map(|v| v.to_string()).collect();
                println!("hamiltonian {}", parts.join("-"));
            }
            Verdict::NotHamiltonian { reason } => println!("not_hamiltonian {}", reason.label()),
            Verdict::MethodIncomplete { detail } => println!("method_incomplete: {detail}"),
        }
        println!(
            "steps {} deletions {} attempts {}",
            out.stats.steps, out.stats.deletions, out.stats.attempts_tried
        );
    }
    Ok(())
}

fn cmd_corpus(
    spec: &Path,
    out: Option<&Path>,
    traces: Option<&Path>,
    config: Option<&Path>,
    seed: Option<u64>,
) -> Result<(), String> {
    let text = std::fs::read_to_string(spec).map_err(|e| format!("spec {}: {e}", spec.display()))?;
    let spec = CorpusSpec::parse(&text).map_err(|e| e.to_string())?;
    let config = load_config(config)?;
    let seed = seed.unwrap_or(config.seed);
    let build = generate_corpus(&spec, seed).map_err(|e| e.to_string())?;
    let report = run_corpus(&build.entries, build.filtered, &config, traces)
        .map_err(|e| format!("writing traces: {e}"))?;
    let rendered = report.render();
    match out {
        Some(path) => {
            std::fs::write(path, rendered).map_err(|e| format!("report {}: {e}", path.display()))?;
            let disagreements = report.discrepancies().count();
            println!(
                "corpus {} graphs, {} filtered, {} discrepancies, report {}",
                report.corpus_size,
                report.filtered_during_generation,
                disagreements,
                path.display()
            );
        }
        None => print!("{rendered}"),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), String> {
    match cli.command {
        Command::Mcb { graph, json } => cmd_mcb(&graph, json),
        Command::Grinberg { graph, config, json } => {
            cmd_grinberg(&graph, config.as_deref(), json)
        }
        Command::Oracle { graph, config, json } => cmd_oracle(&graph, config.as_deref(), json),
        Command::Solve {
            graph,
            config,
            trace,
            json,
        } => cmd_solve(&graph, config.as_deref(), trace.as_deref(), json),
        Command::Corpus {
            spec,
            out,
            traces,
            config,
            seed,
        } => cmd_corpus(
            &spec,
            out.as_deref(),
            traces.as_deref(),
            config.as_deref(),
            seed,
        ),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
