//! Cycle-space Hamiltonicity toolkit.
//!
//! The crate decides Hamiltonicity by cycle-space accounting: build a
//! minimum cycle basis, solve the integer counting equation its order
//! histogram must satisfy, then serially delete one-unit-edge cycles
//! under forced-edge and blocking-cycle constraints until the survivors
//! XOR to a spanning cycle. Every yes verdict carries an independently
//! validated certificate; an exhaustive oracle and a corpus harness exist
//! to measure where the no verdicts are wrong.
//!
//! Module map: `graph` and `bits` are the substrate (edge lists, GF(2)
//! rows), `cycle`/`mcb`/`grinberg` build bases and count solutions,
//! `removability` holds the deletion rules, `pipeline` runs the decision
//! end to end, `oracle` is the independent referee, and
//! `corpus`/`report`/`trace` make runs reproducible and comparable.

pub mod bits;
pub mod config;
pub mod corpus;
pub mod cycle;
pub mod fixtures;
pub mod generate;
pub mod graph;
pub mod grinberg;
pub mod mcb;
pub mod oracle;
pub mod pipeline;
pub mod removability;
pub mod report;
pub mod trace;

pub use config::{ConfigError, SolverConfig};
pub use corpus::{generate_corpus, run_corpus, CorpusBuild, CorpusEntry, CorpusError, CorpusSpec};
pub use cycle::{gf2_sum, Cycle, CycleError, Gf2Sum};
pub use graph::{
    edge, parse_graph, validate, Edge, Graph, GraphError, ParseError, ValidationReport, VertexId,
};
pub use grinberg::{
    enumerate_count_solutions, grinberg_rhs, CountVector, Enumeration, GrinbergPartition,
    OrderHistogram,
};
pub use mcb::{horton_mcb, verify_basis, BasisError, CycleBasis};
pub use oracle::{brute_force_hamiltonian, subset_dp_hamiltonian, OracleOutcome, OracleResult};
pub use pipeline::{
    extract_hamiltonian, solve, validate_hamiltonian, NotHamiltonianReason, SolveOutput,
    SolveStats, Verdict,
};
pub use report::{AgreementReport, AgreementRow, ConfusionMatrix};
pub use trace::{render_trace, replay_trace, ReplayOutcome, SolverTrace, TraceEvent};
