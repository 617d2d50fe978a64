//! Solve traces: JSON-lines records that make every run replayable.
//!
//! A trace file is one solve. The first line carries the input graph and
//! the config, the middle lines are the recorded decisions and deletions,
//! and the last line is the verdict with the run counters. Replaying
//! parses the header, re-runs the solver, and byte-compares the rendered
//! result, so a stored trace doubles as a reproduction recipe.

use crate::config::SolverConfig;
use crate::graph::{parse_graph, Edge, ParseError, VertexId};
use crate::pipeline::{solve, SolveStats, Verdict};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// 64-bit FNV-1a over a byte string.
pub fn fnv64(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

/// Hex digest used to fingerprint solver state inside trace steps.
pub fn digest16(bytes: &[u8]) -> String {
    format!("{:016x}", fnv64(bytes))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TraceEvent {
    /// A pipeline decision point: which stage ran, what it decided, which
    /// rule label applied (empty when none), and a digest of the solver
    /// state at that moment.
    Step {
        step: String,
        decision: String,
        rule: String,
        digest: String,
    },
    /// One cycle deletion with before/after counts, recorded so that
    /// conservation (same vertex set, exactly one edge fewer) can be
    /// audited from the trace alone.
    Deletion {
        cycle: Vec<VertexId>,
        removed_edge: Edge,
        vertices_before: u32,
        vertices_after: u32,
        edges_before: usize,
        edges_after: usize,
    },
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SolverTrace {
    pub events: Vec<TraceEvent>,
}

impl SolverTrace {
    pub fn new() -> Self {
        SolverTrace { events: Vec::new() }
    }

    pub fn step(&mut self, step: &str, decision: String, rule: &str, digest: String) {
        self.events.push(TraceEvent::Step {
            step: step.to_string(),
            decision,
            rule: rule.to_string(),
            digest,
        });
    }

    #[allow(clippy::too_many_arguments)]
    pub fn deletion(
        &mut self,
        cycle: Vec<VertexId>,
        removed_edge: Edge,
        vertices_before: u32,
        vertices_after: u32,
        edges_before: usize,
        edges_after: usize,
    ) {
        self.events.push(TraceEvent::Deletion {
            cycle,
            removed_edge,
            vertices_before,
            vertices_after,
            edges_before,
            edges_after,
        });
    }

    pub fn len(&self) -> usize {
        self.events.len()
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct HeaderLine {
    kind: String,
    graph: String,
    config: SolverConfig,
}

#[derive(Debug, Serialize)]
struct VerdictLine<'a> {
    kind: &'a str,
    verdict: &'a Verdict,
    stats: &'a SolveStats,
}

/// Renders a complete trace file for one solve.
pub fn render_trace(
    graph_text: &str,
    config: &SolverConfig,
    verdict: &Verdict,
    stats: &SolveStats,
    trace: &SolverTrace,
) -> String {
    let mut out = String::new();
    let header = HeaderLine {
        kind: "header".to_string(),
        graph: graph_text.to_string(),
        config: config.clone(),
    };
    out.push_str(&serde_json::to_string(&header).expect("header serializes"));
    out.push('\n');
    for event in &trace.events {
        out.push_str(&serde_json::to_string(event).expect("event serializes"));
        out.push('\n');
    }
    let footer = VerdictLine {
        kind: "verdict",
        verdict,
        stats,
    };
    out.push_str(&serde_json::to_string(&footer).expect("verdict serializes"));
    out.push('\n');
    out
}

#[derive(Debug, Error)]
pub enum ReplayError {
    #[error("trace has no header line")]
    Empty,
    #[error("trace header is not valid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("first trace line is not a header")]
    NotHeader,
    #[error("embedded graph does not parse: {0}")]
    Graph(#[from] ParseError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReplayOutcome {
    /// Whether the re-run reproduced the stored trace byte for byte.
    pub matches: bool,
    pub replayed: String,
}

/// Re-runs the solve recorded in `text` and compares the bytes.
pub fn replay_trace(text: &str) -> Result<ReplayOutcome, ReplayError> {
    let first = text.lines().next().ok_or(ReplayError::Empty)?;
    let header: HeaderLine = serde_json::from_str(first)?;
    if header.kind != "header" {
        return Err(ReplayError::NotHeader);
    }
    let g = parse_graph(&header.graph)?;
    let out = solve(&g, &header.config);
    let replayed = render_trace(&header.graph, &header.config, &out.verdict, &out.stats, &out.trace);
    Ok(ReplayOutcome {
        matches: replayed == text,
        replayed,
    })
}
