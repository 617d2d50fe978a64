//! Corpus generation and the differential run harness.
//!
//! A corpus is a deterministic list of admissible graphs: the fixed named
//! set, seeded random draws, exhaustive labeled enumeration at small
//! sizes, or all three. The runner decides every graph twice, once with
//! the pipeline and once with the exhaustive oracle, persists a
//! replayable trace for every row worth auditing, and assembles the
//! agreement report. Row order never depends on worker count.

use crate::config::SolverConfig;
use crate::generate::{
    complete_graph, cycle_graph, grid_graph, herschel_graph, petersen_graph, random_gnp,
};
use crate::graph::{validate, Graph};
use crate::oracle::{brute_force_hamiltonian, OracleOutcome};
use crate::pipeline::{solve, validate_hamiltonian, Verdict};
use crate::report::{AgreementReport, AgreementRow, ConfusionMatrix};
use crate::trace::render_trace;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("corpus spec line {line}: expected `key = value`, got {text:?}")]
    Malformed { line: usize, text: String },
    #[error("corpus spec line {line}: unknown key {key:?}")]
    UnknownKey { line: usize, key: String },
    #[error("corpus spec line {line}: bad value for {key}: {value:?}")]
    BadValue { line: usize, key: String, value: String },
    #[error("corpus spec: unknown kind {0:?}")]
    UnknownKind(String),
    #[error("corpus spec: vertex range {0}..={1} is empty")]
    EmptyRange(u32, u32),
    #[error("exhaustive enumeration is capped at 7 vertices, requested {0}")]
    ExhaustiveTooLarge(u32),
    #[error("exhaustive enumeration needs at least 3 vertices, requested {0}")]
    ExhaustiveTooSmall(u32),
    #[error("random generation stalled: {0} draws produced no admissible graph")]
    Stalled(usize),
    #[error("graph generation failed: {0}")]
    Generate(#[from] crate::generate::GenerateError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CorpusSpec {
    /// The fixed reference set: C5..C8, K4, K5, Petersen, Herschel, and
    /// the 3x4 grid.
    Named,
    Random {
        n_min: u32,
        n_max: u32,
        /// Edge probability in percent, to keep the spec file integral.
        p_percent: u32,
        count: usize,
    },
    /// Every connected labeled graph with minimum degree two on `n`
    /// vertices.
    Exhaustive { n: u32 },
    /// Named plus random defaults plus exhaustive 3..=6.
    Full,
}

impl CorpusSpec {
    /// Parses the flat key-value spec format. `kind` picks the variant;
    /// the numeric keys override that variant's defaults.
    pub fn parse(text: &str) -> Result<CorpusSpec, CorpusError> {
        let mut kind: Option<String> = None;
        let mut n_min = 6u32;
        let mut n_max = 12u32;
        let mut p_percent = 40u32;
        let mut count = 500usize;
        let mut n = 5u32;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let Some((key, value)) = trimmed.split_once('=') else {
                return Err(CorpusError::Malformed {
                    line,
                    text: trimmed.to_string(),
                });
            };
            let key = key.trim();
            let value = value.trim();
            let bad = |k: &str, v: &str| CorpusError::BadValue {
                line,
                key: k.to_string(),
                value: v.to_string(),
            };
            match key {
                "kind" => kind = Some(value.to_string()),
                "n_min" => n_min = value.parse().map_err(|_| bad(key, value))?,
                "n_max" => n_max = value.parse().map_err(|_| bad(key, value))?,
                "p_percent" => p_percent = value.parse().map_err(|_| bad(key, value))?,
                "count" => count = value.parse().map_err(|_| bad(key, value))?,
                "n" => n = value.parse().map_err(|_| bad(key, value))?,
                _ => {
                    return Err(CorpusError::UnknownKey {
                        line,
                        key: key.to_string(),
                    })
                }
            }
        }
        match kind.as_deref() {
            None | Some("full") => Ok(CorpusSpec::Full),
            Some("named") => Ok(CorpusSpec::Named),
            Some("random") => Ok(CorpusSpec::Random {
                n_min,
                n_max,
                p_percent,
                count,
            }),
            Some("exhaustive") => Ok(CorpusSpec::Exhaustive { n }),
            Some(other) => Err(CorpusError::UnknownKind(other.to_string())),
        }
    }
}

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub id: String,
    pub graph: Graph,
}

#[derive(Debug, Clone)]
pub struct CorpusBuild {
    pub entries: Vec<CorpusEntry>,
    /// Candidates rejected for being disconnected, too small, or having
    /// a vertex of degree below two.
    pub filtered: usize,
}

fn admissible(g: &Graph) -> bool {
    validate(g).admissible()
}

fn named_entries(out: &mut Vec<CorpusEntry>) {
    let mut push = |id: &str, g: Graph| {
        out.push(CorpusEntry {
            id: id.to_string(),
            graph: g,
        })
    };
    for n in 5..=8 {
        push(&format!("c{n}"), cycle_graph(n).expect("cycle builds"));
    }
    push("k4", complete_graph(4).expect("k4 builds"));
    push("k5", complete_graph(5).expect("k5 builds"));
    push("petersen", petersen_graph());
    push("herschel", herschel_graph());
    push("grid_3x4", grid_graph(3, 4).expect("grid builds"));
}

fn random_entries(
    out: &mut Vec<CorpusEntry>,
    filtered: &mut usize,
    n_min: u32,
    n_max: u32,
    p_percent: u32,
    count: usize,
    seed: u64,
) -> Result<(), CorpusError> {
    if n_min > n_max || n_min < 3 {
        return Err(CorpusError::EmptyRange(n_min, n_max));
    }
    let p = f64::from(p_percent) / 100.0;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut accepted = 0usize;
    let mut draws = 0usize;
    let draw_cap = 1000 * count + 1000;
    while accepted < count {
        if draws >= draw_cap {
            return Err(CorpusError::Stalled(draws));
        }
        draws += 1;
        let n = rng.random_range(n_min..=n_max);
        let graph_seed = rng.random::<u64>();
        let g = random_gnp(n, p, graph_seed)?;
        if admissible(&g) {
            out.push(CorpusEntry {
                id: format!("random_{accepted:04}"),
                graph: g,
            });
            accepted += 1;
        } else {
            *filtered += 1;
        }
    }
    Ok(())
}

fn exhaustive_entries(
    out: &mut Vec<CorpusEntry>,
    filtered: &mut usize,
    n: u32,
) -> Result<(), CorpusError> {
    if n < 3 {
        return Err(CorpusError::ExhaustiveTooSmall(n));
    }
    if n > 7 {
        return Err(CorpusError::ExhaustiveTooLarge(n));
    }
    let mut pairs = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            pairs.push((u, v));
        }
    }
    let bits = pairs.len();
    for mask in 0u32..(1u32 << bits) {
        if (mask.count_ones() as u64) < u64::from(n) {
            // Minimum degree two forces at least n edges.
            *filtered += 1;
            continue;
        }
        let mut degree = vec![0u32; n as usize + 1];
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask & (1 << i) != 0 {
                degree[u as usize] += 1;
                degree[v as usize] += 1;
            }
        }
        if degree[1..].iter().any(|&d| d < 2) {
            *filtered += 1;
            continue;
        }
        let edges: Vec<(u32, u32)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << *i) != 0)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::new(n, edges).expect("masks build simple graphs");
        if g.is_connected() {
            out.push(CorpusEntry {
                id: format!("exhaustive_{n}_{mask}"),
                graph: g,
            });
        } else {
            *filtered += 1;
        }
    }
    Ok(())
}

/// Materializes a corpus. Deterministic for a fixed spec and seed.
pub fn generate_corpus(spec: &CorpusSpec, seed: u64) -> Result<CorpusBuild, CorpusError> {
    let mut entries = Vec::new();
    let mut filtered = 0usize;
    match *spec {
        CorpusSpec::Named => named_entries(&mut entries),
        CorpusSpec::Random {
            n_min,
            n_max,
            p_percent,
            count,
        } => random_entries(&mut entries, &mut filtered, n_min, n_max, p_percent, count, seed)?,
        CorpusSpec::Exhaustive { n } => exhaustive_entries(&mut entries, &mut filtered, n)?,
        CorpusSpec::Full => {
            named_entries(&mut entries);
            random_entries(&mut entries, &mut filtered, 6, 12, 40, 500, seed)?;
            for n in 3..=6 {
                exhaustive_entries(&mut entries, &mut filtered, n)?;
            }
        }
    }
    Ok(CorpusBuild { entries, filtered })
}

struct RowOutcome {
    row: AgreementRow,
    trace_text: Option<String>,
}

fn run_entry(entry: &CorpusEntry, config: &SolverConfig) -> RowOutcome {
    let out = solve(&entry.graph, config);
    let oracle = brute_force_hamiltonian(&entry.graph, config.oracle_budget);
    let (oracle_label, oracle_ham) = match &oracle.outcome {
        OracleOutcome::Hamiltonian(seq) => {
            debug_assert!(validate_hamiltonian(&entry.graph, seq));
            ("hamiltonian", Some(true))
        }
        OracleOutcome::NonHamiltonian => ("non_hamiltonian", Some(false)),
        OracleOutcome::BudgetExceeded => ("budget_exceeded", None),
    };
    let agree = oracle_ham.map(|oracle_says_ham| match &out.verdict {
        Verdict::Hamiltonian { .. } => oracle_says_ham,
        Verdict::NotHamiltonian { .. } => !oracle_says_ham,
        Verdict::MethodIncomplete { .. } => false,
    });
    let mut row = AgreementRow {
        id: entry.id.clone(),
        method: out.verdict.label(),
        oracle: oracle_label.to_string(),
        agree,
        method_steps: out.stats.steps,
        oracle_expansions: oracle.expansions,
        trace_ref: None,
    };
    let trace_text = if row.is_discrepancy() {
        row.trace_ref = Some(format!("trace_{}.jsonl", entry.id));
        Some(render_trace(
            &entry.graph.render(),
            config,
            &out.verdict,
            &out.stats,
            &out.trace,
        ))
    } else {
        None
    };
    RowOutcome { row, trace_text }
}

/// Runs the differential harness over `entries`. Traces for discrepancy
/// rows are written into `trace_dir` when one is given. Worker count
/// comes from the config; output is identical for any worker count.
pub fn run_corpus(
    entries: &[CorpusEntry],
    filtered_during_generation: usize,
    config: &SolverConfig,
    trace_dir: Option<&Path>,
) -> std::io::Result<AgreementReport> {
    let outcomes: Vec<RowOutcome> = if config.workers > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(config.workers)
            .build()
            .expect("worker pool builds");
        pool.install(|| {
            use rayon::prelude::*;
            entries.par_iter().map(|e| run_entry(e, config)).collect()
        })
    } else {
        entries.iter().map(|e| run_entry(e, config)).collect()
    };

    let mut matrix = ConfusionMatrix::default();
    let mut oracle_inconclusive = 0u64;
    let mut rows = Vec::with_capacity(outcomes.len());
    for outcome in outcomes {
        let row = outcome.row;
        match (row.method.as_str(), row.oracle.as_str()) {
            (_, "budget_exceeded") => oracle_inconclusive += 1,
            ("hamiltonian", "hamiltonian") => matrix.ham_ham += 1,
            ("hamiltonian", "non_hamiltonian") => matrix.ham_nonham += 1,
            ("method_incomplete", "hamiltonian") => matrix.incomplete_ham += 1,
            ("method_incomplete", "non_hamiltonian") => matrix.incomplete_nonham += 1,
            (_, "hamiltonian") => matrix.nonham_ham += 1,
            (_, "non_hamiltonian") => matrix.nonham_nonham += 1,
            _ => unreachable!("oracle labels are fixed"),
        }
        if let (Some(dir), Some(name), Some(text)) =
            (trace_dir, row.trace_ref.as_ref(), outcome.trace_text.as_ref())
        {
            std::fs::create_dir_all(dir)?;
            std::fs::write(dir.join(name), text)?;
        }
        rows.push(row);
    }
    Ok(AgreementReport {
        corpus_size: entries.len(),
        filtered_during_generation,
        matrix,
        oracle_inconclusive,
        rows,
    })
}
