//! Independent Hamiltonicity ground truth. The primary oracle is an
//! exhaustive backtracking search with a sound feasibility prune; it shares
//! no code with the solver pipeline. A bitmask dynamic program over vertex
//! subsets provides a second, algorithmically unrelated answer for small
//! graphs so the oracle itself can be cross-checked.

use crate::graph::{Graph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleOutcome {
    /// A Hamiltonian cycle, as a vertex sequence of length `|V|` whose
    /// consecutive pairs (wrapping) are all edges.
    Hamiltonian(Vec<VertexId>),
    /// The search space was exhausted without finding a cycle.
    NonHamiltonian,
    /// The node-expansion budget ran out before the search finished.
    /// Deliberately distinct from a non-Hamiltonian answer.
    BudgetExceeded,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub outcome: OracleOutcome,
    /// Deterministic cost: number of search nodes expanded.
    pub expansions: u64,
}

struct Search {
    /// Adjacency over internal indices as bitmasks.
    adj: Vec<u64>,
    n: usize,
    budget: u64,
    expansions: u64,
}

enum Found {
    Cycle(Vec<usize>),
    No,
    OutOfBudget,
}

impl Search {
    /// `path` holds internal indices; `visited` is their bitmask. Returns
    /// the completed internal cycle if one extends `path`.
    fn extend(&mut self, path: &mut Vec<usize>, visited: u64) -> Found {
        if self.expansions >= self.budget {
            return Found::OutOfBudget;
        }
        self.expansions += 1;
        let cur = *path.last().expect("path starts nonempty");
        let full = (1u64 << self.n) - 1;
        if visited == full {
            if self.adj[cur] & 1 != 0 {
                return Found::Cycle(path.clone());
            }
            return Found::No;
        }
        // Feasibility: every unvisited vertex still needs two distinct
        // attachment points among the unvisited set, the path head, and the
        // start vertex. A vertex with fewer can never end up with two cycle
        // neighbors, so the branch is dead.
        let unvisited = full & !visited;
        let mut rest = unvisited;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let mut links = (self.adj[v] & unvisited & !(1 << v)).count_ones();
            if self.adj[v] & (1 << cur) != 0 {
                links += 1;
            }
            if self.adj[v] & 1 != 0 {
                links += 1;
            }
            if links < 2 {
                return Found::No;
            }
        }
        let mut next = self.adj[cur] & unvisited;
        while next != 0 {
            let v = next.trailing_zeros() as usize;
            next &= next - 1;
            path.push(v);
            match self.extend(path, visited | (1 << v)) {
                Found::No => {
                    path.pop();
                }
                done => return done,
            }
        }
        Found::No
    }
}

/// Exhaustive backtracking Hamiltonicity check. Vertices are reordered by
/// ascending degree before the search so low-freedom vertices are fixed
/// first. An exhausted search is a certified absence; running out of budget
/// is reported as its own outcome.
pub fn brute_force_hamiltonian(g: &Graph, budget: u64) -> OracleResult {
    let n = g.vertex_count() as usize;
    if n < 3 || n > 63 || !g.is_connected() || g.min_degree() < 2 {
        return OracleResult {
            outcome: OracleOutcome::NonHamiltonian,
            expansions: 0,
        };
    }
    let mut order: Vec<VertexId> = g.vertices().collect();
    order.sort_by_key(|&v| (g.degree(v), v));
    let mut index = vec![usize::MAX; n + 1];
    for (i, &v) in order.iter().enumerate() {
        index[v as usize] = i;
    }
    let mut adj = vec![0u64; n];
    for &(u, v) in g.edges() {
        let (iu, iv) = (index[u as usize], index[v as usize]);
        adj[iu] |= 1 << iv;
        adj[iv] |= 1 << iu;
    }
    let mut search = Search {
        adj,
        n,
        budget,
        expansions: 0,
    };
    let mut path = vec![0usize];
    let found = search.extend(&mut path, 1);
    let outcome = match found {
        Found::Cycle(internal) => {
            OracleOutcome::Hamiltonian(internal.into_iter().map(|i| order[i]).collect())
        }
        Found::No => OracleOutcome::NonHamiltonian,
        Found::OutOfBudget => OracleOutcome::BudgetExceeded,
    };
    OracleResult {
        outcome,
        expansions: search.expansions,
    }
}

/// Held-Karp style subset dynamic program. Returns `None` when the graph is
/// too large for the table (`|V| > 20`); otherwise an exact yes/no answer
/// computed by a different algorithm family than the backtracker.
pub fn subset_dp_hamiltonian(g: &Graph) -> Option<bool> {
    let n = g.vertex_count() as usize;
    if n > 20 {
        return None;
    }
    if n < 3 || !g.is_connected() || g.min_degree() < 2 {
        return Some(false);
    }
    let mut adj = vec![0u32; n];
    for &(u, v) in g.edges() {
        let (iu, iv) = (u as usize - 1, v as usize - 1);
        adj[iu] |= 1 << iv;
        adj[iv] |= 1 << iu;
    }
    // reach[mask] = endpoints of simple paths that start at vertex 0 and
    // cover exactly `mask`.
    let full = (1u32 << n) - 1;
    let mut reach = vec![0u32; 1 << n];
    reach[1] = 1;
    for mask in 1u32..=full {
        if mask & 1 == 0 {
            continue;
        }
        let ends = reach[mask as usize];
        if ends == 0 {
            continue;
        }
        let mut es = ends;
        while es != 0 {
            let e = es.trailing_zeros() as usize;
            es &= es - 1;
            let mut nexts = adj[e] & !mask;
            while nexts != 0 {
                let v = nexts.trailing_zeros();
                nexts &= nexts - 1;
                reach[(mask | (1 << v)) as usize] |= 1 << v;
            }
        }
    }
    Some(reach[full as usize] & adj[0] != 0)
}

/// Checks that `seq` is a Hamiltonian cycle of `g`: every vertex exactly
/// once, every consecutive pair (including the wrap-around) an edge.
pub fn validate_hamiltonian(g: &Graph, seq: &[VertexId]) -> bool {
    let n = g.vertex_count() as usize;
    if seq.len() != n || n < 3 {
        return false;
    }
    let mut seen = vec![false; n + 1];
    for &v in seq {
        if v == 0 || v > n as u32 || seen[v as usize] {
            return false;
        }
        seen[v as usize] = true;
    }
    (0..n).all(|i| g.has_edge(seq[i], seq[(i + 1) % n]))
}
