//! End-to-end Hamiltonicity decision pipeline.
//!
//! A solve runs validation, minimum cycle basis construction, the
//! cycle-count equation, and the forced-edge screen, then tries one
//! deletion attempt per count vector until an attempt finishes. An
//! attempt deletes one-unit-edge cycles, smallest first, under three
//! standing constraints: no vertex may collect three forced edges, no
//! blocking cycle may be left stranded, and per-order survivors must hit
//! the count vector exactly. A finished attempt's surviving cycles are
//! XOR-summed and the sum is validated against the input graph before a
//! Hamiltonian verdict is issued, so every yes answer carries a checked
//! certificate. Attempts that die report the rule that stopped them;
//! truncated searches report incompleteness instead of guessing.

use crate::config::SolverConfig;
use crate::cycle::{gf2_sum, Cycle};
use crate::graph::{validate, Edge, Graph, VertexId};
use crate::grinberg::{enumerate_count_solutions, grinberg_rhs, CountVector, OrderHistogram};
use crate::mcb::{horton_mcb, CycleBasis};
use crate::removability::{
    build_c_set, check_dismantlable, check_removable_candidate, classify_vertices, compute_r_map,
    remove_cycle, screen_p, PScreen, Removability, RemovabilityError,
};
use crate::trace::{digest16, SolverTrace};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

pub use crate::oracle::validate_hamiltonian;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NotHamiltonianReason {
    /// Rejected at validation: disconnected, too small, or a vertex of
    /// degree below two.
    DegreeOrConnectivity,
    /// The cycle-count equation has no nonnegative solution.
    NoSolution,
    /// A vertex of degree at least three collected three forced edges.
    PConstraint,
    /// Every attempt died after a blocking-cycle pin constrained it.
    CkConstraint,
    /// Every attempt died with survivors that cannot match any count
    /// vector, with no candidate left, or with a sum that is not a
    /// spanning cycle.
    SetMismatch,
}

impl NotHamiltonianReason {
    pub fn label(&self) -> &'static str {
        match self {
            NotHamiltonianReason::DegreeOrConnectivity => "degree_or_connectivity",
            NotHamiltonianReason::NoSolution => "no_solution",
            NotHamiltonianReason::PConstraint => "p_constraint",
            NotHamiltonianReason::CkConstraint => "ck_constraint",
            NotHamiltonianReason::SetMismatch => "set_mismatch",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum Verdict {
    Hamiltonian { cycle: Vec<VertexId> },
    NotHamiltonian { reason: NotHamiltonianReason },
    MethodIncomplete { detail: String },
}

impl Verdict {
    pub fn is_hamiltonian(&self) -> bool {
        matches!(self, Verdict::Hamiltonian { .. })
    }

    /// Flat label for report rows and confusion-matrix keys.
    pub fn label(&self) -> String {
        match self {
            Verdict::Hamiltonian { .. } => "hamiltonian".to_string(),
            Verdict::NotHamiltonian { reason } => {
                format!("not_hamiltonian:{}", reason.label())
            }
            Verdict::MethodIncomplete { .. } => "method_incomplete".to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveStats {
    pub dimension: usize,
    pub basis_weight: usize,
    pub solution_count: usize,
    pub solutions_truncated: bool,
    pub attempts_tried: usize,
    pub attempts_truncated: bool,
    pub deletions: u64,
    pub steps: u64,
}

impl SolveStats {
    fn zero() -> Self {
        SolveStats {
            dimension: 0,
            basis_weight: 0,
            solution_count: 0,
            solutions_truncated: false,
            attempts_tried: 0,
            attempts_truncated: false,
            deletions: 0,
            steps: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveOutput {
    pub verdict: Verdict,
    pub stats: SolveStats,
    pub trace: SolverTrace,
}

/// XOR of the surviving cycles, accepted only when it is a single cycle
/// spanning `g` that the independent validator confirms.
pub fn extract_hamiltonian(cycles: &[Cycle], g: &Graph) -> Option<Vec<VertexId>> {
    let sum = gf2_sum(cycles.iter());
    let cycle = sum.cycle?;
    if cycle.order() != g.vertex_count() as usize {
        return None;
    }
    let tour = cycle.tour();
    validate_hamiltonian(g, &tour).then_some(tour)
}

fn fmt_vertices(vs: &[VertexId]) -> String {
    let parts: Vec<String> = vs.iter().map(|v| v.to_string()).collect();
    parts.join("-")
}

fn fmt_hist(h: &OrderHistogram) -> String {
    let parts: Vec<String> = h.iter().map(|(o, c)| format!("{o}:{c}")).collect();
    parts.join(" ")
}

fn graph_digest(g: &Graph) -> String {
    digest16(g.render().as_bytes())
}

fn state_digest(g: &Graph, basis: &CycleBasis, pinned: &BTreeSet<Vec<Edge>>) -> String {
    let mut s = g.render();
    s.push('|');
    for c in basis.cycles() {
        for &(u, v) in c.edges() {
            s.push_str(&format!("{u}-{v};"));
        }
        s.push(':');
    }
    s.push('|');
    for id in pinned {
        for &(u, v) in id {
            s.push_str(&format!("{u}-{v};"));
        }
        s.push(':');
    }
    digest16(s.as_bytes())
}

struct AttemptState<'a> {
    original: &'a Graph,
    target: &'a CountVector,
    /// Cycles moved to the protected side, keyed by edge list. Protected
    /// cycles are never deletion candidates and must survive to the end.
    pinned: BTreeSet<Vec<Edge>>,
    /// Pins caused by blocking cycles, as opposed to plain candidate
    /// rejections. Decides how a dead end is reported.
    ck_pins: usize,
    undo_left: usize,
}

impl AttemptState<'_> {
    fn pinned_of_order(&self, order: usize) -> usize {
        self.pinned.iter().filter(|id| id.len() == order).count()
    }
}

enum RoundEnd {
    Finished { cycle: Vec<VertexId> },
    Dead { reason: NotHamiltonianReason },
}

/// Survivor deficit per order: how many cycles of each order still have
/// to go. `None` when some order already has fewer cycles than the
/// target demands, which no deletion can repair.
fn deletion_need(basis: &CycleBasis, target: &CountVector) -> Option<BTreeMap<usize, usize>> {
    let hist = basis.order_histogram();
    for (&order, &want) in target.counts() {
        if hist.get(&order).copied().unwrap_or(0) < want {
            return None;
        }
    }
    Some(
        hist.iter()
            .map(|(&order, &have)| (order, have - target.get(order)))
            .collect(),
    )
}

fn dead_reason(state: &AttemptState<'_>) -> NotHamiltonianReason {
    if state.ck_pins > 0 {
        NotHamiltonianReason::CkConstraint
    } else {
        NotHamiltonianReason::SetMismatch
    }
}

/// One deletion round. Checks termination, re-checks the forced-edge
/// bound, pins blocking cycles found at boundary vertices, then walks the
/// candidate list. The first removable candidate commits the round; its
/// failing subtree only comes back here while undo budget remains.
fn run_round(
    g: &Graph,
    basis: &CycleBasis,
    state: &mut AttemptState<'_>,
    trace: &mut SolverTrace,
    stats: &mut SolveStats,
) -> Result<RoundEnd, RemovabilityError> {
    let Some(need) = deletion_need(basis, state.target) else {
        trace.step(
            "dead_end",
            "an order already has fewer cycles than the target".to_string(),
            "order_deficit",
            state_digest(g, basis, &state.pinned),
        );
        return Ok(RoundEnd::Dead {
            reason: dead_reason(state),
        });
    };

    if need.values().all(|&k| k == 0) {
        return Ok(match extract_hamiltonian(basis.cycles(), state.original) {
            Some(cycle) => {
                trace.step(
                    "extract",
                    format!("spanning cycle {}", fmt_vertices(&cycle)),
                    "",
                    state_digest(g, basis, &state.pinned),
                );
                RoundEnd::Finished { cycle }
            }
            None => {
                trace.step(
                    "extract",
                    "survivors do not sum to a spanning cycle".to_string(),
                    "sum_mismatch",
                    state_digest(g, basis, &state.pinned),
                );
                RoundEnd::Dead {
                    reason: NotHamiltonianReason::SetMismatch,
                }
            }
        });
    }

    let rmap = compute_r_map(basis, g)?;
    let vclass = classify_vertices(g, &rmap);

    if let PScreen::NotHamiltonianByP { vertex, forced } = screen_p(g, &rmap) {
        trace.step(
            "dead_end",
            format!("vertex {vertex} carries {forced} forced edges"),
            "p_ge_3",
            state_digest(g, basis, &state.pinned),
        );
        return Ok(RoundEnd::Dead {
            reason: NotHamiltonianReason::PConstraint,
        });
    }

    // Blocking-cycle sweep: every unpinned cycle without a unit edge that
    // passes through a boundary vertex gets its shared-vertex set checked.
    // Non-dismantlable ones are pinned to the protected side.
    let mut swept: BTreeSet<Vec<Edge>> = BTreeSet::new();
    for k in vclass.boundary_vertices() {
        for c in basis.cycles() {
            if !c.contains_vertex(k) {
                continue;
            }
            if c.edges().iter().any(|&(u, v)| rmap.get(u, v) == 1) {
                continue;
            }
            let id = c.edges().to_vec();
            if state.pinned.contains(&id) || !swept.insert(id.clone()) {
                continue;
            }
            let outcome = check_dismantlable(&build_c_set(c, basis));
            if outcome.dismantlable {
                trace.step(
                    "blocking_check",
                    format!("cycle {} at vertex {k} clears", fmt_vertices(c.vertices())),
                    outcome.rule,
                    state_digest(g, basis, &state.pinned),
                );
            } else {
                state.pinned.insert(id);
                state.ck_pins += 1;
                trace.step(
                    "blocking_pin",
                    format!("cycle {} at vertex {k} pinned", fmt_vertices(c.vertices())),
                    outcome.rule,
                    state_digest(g, basis, &state.pinned),
                );
                let order = c.order();
                if state.pinned_of_order(order) > state.target.get(order) {
                    trace.step(
                        "dead_end",
                        format!("pinned order-{order} cycles exceed the survivor target"),
                        "pin_overflow",
                        state_digest(g, basis, &state.pinned),
                    );
                    return Ok(RoundEnd::Dead {
                        reason: dead_reason(state),
                    });
                }
            }
        }
    }

    let candidates: Vec<&Cycle> = basis
        .cycles()
        .iter()
        .filter(|c| {
            need.get(&c.order()).copied().unwrap_or(0) > 0
                && !state.pinned.contains(c.edges())
                && c.edges()
                    .iter()
                    .filter(|&&(u, v)| rmap.get(u, v) == 1)
                    .count()
                    == 1
        })
        .collect();

    if candidates.is_empty() {
        trace.step(
            "dead_end",
            "no deletion candidate with one unit edge remains".to_string(),
            "no_candidate",
            state_digest(g, basis, &state.pinned),
        );
        return Ok(RoundEnd::Dead {
            reason: dead_reason(state),
        });
    }

    for c in candidates {
        match check_removable_candidate(c, basis, &rmap, &vclass, g)? {
            Removability::Irremovable { rule } => {
                trace.step(
                    "candidate",
                    format!("cycle {} held", fmt_vertices(c.vertices())),
                    rule,
                    state_digest(g, basis, &state.pinned),
                );
                state.pinned.insert(c.edges().to_vec());
                if rule == "blocking_cycle" {
                    state.ck_pins += 1;
                }
                let order = c.order();
                if state.pinned_of_order(order) > state.target.get(order) {
                    trace.step(
                        "dead_end",
                        format!("pinned order-{order} cycles exceed the survivor target"),
                        "pin_overflow",
                        state_digest(g, basis, &state.pinned),
                    );
                    return Ok(RoundEnd::Dead {
                        reason: dead_reason(state),
                    });
                }
            }
            Removability::Removable => {
                let unit: Vec<Edge> = c
                    .edges()
                    .iter()
                    .copied()
                    .filter(|&(u, v)| rmap.get(u, v) == 1)
                    .collect();
                let (basis2, g2) = remove_cycle(basis, c, g)?;
                stats.deletions += 1;
                trace.deletion(
                    c.tour(),
                    unit[0],
                    g.vertex_count(),
                    g2.vertex_count(),
                    g.edge_count(),
                    g2.edge_count(),
                );
                match run_round(&g2, &basis2, state, trace, stats)? {
                    RoundEnd::Finished { cycle } => {
                        return Ok(RoundEnd::Finished { cycle });
                    }
                    RoundEnd::Dead { reason } => {
                        if state.undo_left == 0 {
                            return Ok(RoundEnd::Dead { reason });
                        }
                        state.undo_left -= 1;
                        trace.step(
                            "undo",
                            format!(
                                "reverting deletion of cycle {}",
                                fmt_vertices(c.vertices())
                            ),
                            "",
                            state_digest(g, basis, &state.pinned),
                        );
                    }
                }
            }
        }
    }

    trace.step(
        "dead_end",
        "every candidate was held or exhausted".to_string(),
        "candidates_exhausted",
        state_digest(g, basis, &state.pinned),
    );
    Ok(RoundEnd::Dead {
        reason: dead_reason(state),
    })
}

fn run_solve(
    g: &Graph,
    config: &SolverConfig,
    trace: &mut SolverTrace,
    stats: &mut SolveStats,
) -> Verdict {
    let report = validate(g);
    let admissible = report.admissible();
    trace.step(
        "validate",
        format!(
            "n={} m={} connected={} min_degree={}",
            report.vertex_count, report.edge_count, report.connected, report.min_degree
        ),
        if admissible { "" } else { "inadmissible" },
        graph_digest(g),
    );
    if !admissible {
        return Verdict::NotHamiltonian {
            reason: NotHamiltonianReason::DegreeOrConnectivity,
        };
    }

    let basis = match horton_mcb(g) {
        Ok(b) => b,
        Err(e) => {
            return Verdict::MethodIncomplete {
                detail: format!("cycle basis construction failed: {e}"),
            }
        }
    };
    stats.dimension = basis.dimension();
    stats.basis_weight = basis.weight();
    trace.step(
        "cycle_basis",
        format!(
            "dimension {} weight {} orders {}",
            basis.dimension(),
            basis.weight(),
            fmt_hist(basis.order_histogram())
        ),
        "",
        graph_digest(g),
    );

    let rhs = grinberg_rhs(g);
    trace.step(
        "count_equation",
        format!("target {rhs}"),
        "",
        graph_digest(g),
    );

    let rmap = match compute_r_map(&basis, g) {
        Ok(r) => r,
        Err(e) => {
            return Verdict::MethodIncomplete {
                detail: format!("edge multiplicity map failed: {e}"),
            }
        }
    };
    match screen_p(g, &rmap) {
        PScreen::NotHamiltonianByP { vertex, forced } => {
            trace.step(
                "forced_edge_screen",
                format!("vertex {vertex} carries {forced} forced edges"),
                "p_ge_3",
                graph_digest(g),
            );
            return Verdict::NotHamiltonian {
                reason: NotHamiltonianReason::PConstraint,
            };
        }
        PScreen::Pass => {
            trace.step("forced_edge_screen", "pass".to_string(), "", graph_digest(g));
        }
    }

    let enumeration = enumerate_count_solutions(basis.order_histogram(), rhs, config.solution_cap);
    stats.solution_count = enumeration.vectors.len();
    stats.solutions_truncated = enumeration.truncated;
    trace.step(
        "enumerate_solutions",
        format!(
            "{} count vectors{}",
            enumeration.vectors.len(),
            if enumeration.truncated {
                " (truncated)"
            } else {
                ""
            }
        ),
        "",
        graph_digest(g),
    );
    if enumeration.vectors.is_empty() {
        trace.step(
            "dead_end",
            "the count equation has no nonnegative solution".to_string(),
            "no_solution",
            graph_digest(g),
        );
        return Verdict::NotHamiltonian {
            reason: NotHamiltonianReason::NoSolution,
        };
    }

    let mut first_failure: Option<NotHamiltonianReason> = None;
    let mut internal: Option<RemovabilityError> = None;
    for (index, vector) in enumeration.vectors.iter().enumerate() {
        if index == config.attempt_cap {
            stats.attempts_truncated = true;
            trace.step(
                "attempts",
                format!("attempt cap {} reached", config.attempt_cap),
                "truncated",
                graph_digest(g),
            );
            break;
        }
        stats.attempts_tried += 1;
        trace.step(
            "attempt",
            format!("counts {}", fmt_hist(vector.counts())),
            "",
            graph_digest(g),
        );
        let mut state = AttemptState {
            original: g,
            target: vector,
            pinned: BTreeSet::new(),
            ck_pins: 0,
            undo_left: config.undo_depth,
        };
        match run_round(g, &basis, &mut state, trace, stats) {
            Ok(RoundEnd::Finished { cycle }) => {
                trace.step(
                    "verdict",
                    format!("hamiltonian cycle of length {}", cycle.len()),
                    "",
                    graph_digest(g),
                );
                return Verdict::Hamiltonian { cycle };
            }
            Ok(RoundEnd::Dead { reason }) => {
                if first_failure.is_none() {
                    first_failure = Some(reason);
                }
            }
            Err(e) => {
                trace.step(
                    "internal_error",
                    e.to_string(),
                    "",
                    graph_digest(g),
                );
                if internal.is_none() {
                    internal = Some(e);
                }
            }
        }
    }

    if let Some(e) = internal {
        return Verdict::MethodIncomplete {
            detail: format!("deletion machinery failed: {e}"),
        };
    }
    if stats.solutions_truncated || stats.attempts_truncated {
        return Verdict::MethodIncomplete {
            detail: "search caps truncated the attempt space".to_string(),
        };
    }
    match first_failure {
        Some(reason) => Verdict::NotHamiltonian { reason },
        None => Verdict::MethodIncomplete {
            detail: "no attempt ran".to_string(),
        },
    }
}

/// Runs the full pipeline on `g` and returns the verdict, the run
/// counters, and the event trace.
pub fn solve(g: &Graph, config: &SolverConfig) -> SolveOutput {
    let mut trace = SolverTrace::new();
    let mut stats = SolveStats::zero();
    let verdict = run_solve(g, config, &mut trace, &mut stats);
    stats.steps = trace.len() as u64;
    SolveOutput {
        verdict,
        stats,
        trace,
    }
}
