//! Minimum cycle basis construction. Candidate cycles come from per-root
//! BFS shortest-path trees (each candidate is two root-to-endpoint paths
//! closed by one edge); a greedy GF(2) elimination over the candidates
//! sorted by weight picks an independent set of full rank. Ties are broken
//! by support order against the canonical edge list, so the result is a
//! deterministic function of the graph.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::bits::{EdgeBits, Gf2Basis};
use crate::cycle::{Cycle, CycleError};
use crate::graph::{Edge, Graph, VertexId};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BasisError {
    #[error("graph is not connected")]
    NotConnected,
    #[error("basis has {got} cycles, cycle space dimension is {expected}")]
    WrongCount { expected: usize, got: usize },
    #[error("cycles are GF(2)-dependent")]
    Dependent,
    #[error("cycle edge {0} {1} is not in the graph")]
    ForeignEdge(VertexId, VertexId),
    #[error("line {line}: malformed vertex list: {text:?}")]
    BadLine { line: usize, text: String },
    #[error(transparent)]
    Cycle(#[from] CycleError),
}

/// Dimension of the GF(2) cycle space: `|E| - |V| + 1` for a connected
/// graph.
pub fn cycle_space_dimension(g: &Graph) -> Result<usize, BasisError> {
    if !g.is_connected() {
        return Err(BasisError::NotConnected);
    }
    Ok(g.edge_count() + 1 - g.vertex_count() as usize)
}

/// The cycle's incidence vector over the canonical edge list of `g`.
pub fn cycle_bits(g: &Graph, c: &Cycle) -> Result<EdgeBits, BasisError> {
    let mut bits = EdgeBits::zeros(g.edge_count());
    for &(u, v) in c.edges() {
        let id = g.edge_id(u, v).ok_or(BasisError::ForeignEdge(u, v))?;
        bits.set(id);
    }
    Ok(bits)
}

/// An ordered set of independent cycles spanning the cycle space of one
/// graph. Construction re-derives and checks the invariants: every member
/// lives in the graph, the count equals the dimension, and the members are
/// GF(2)-independent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleBasis {
    cycles: Vec<Cycle>,
    histogram: BTreeMap<usize, usize>,
    weight: usize,
}

impl CycleBasis {
    pub fn new(g: &Graph, cycles: Vec<Cycle>) -> Result<Self, BasisError> {
        let dim = cycle_space_dimension(g)?;
        if cycles.len() != dim {
            return Err(BasisError::WrongCount {
                expected: dim,
                got: cycles.len(),
            });
        }
        let mut rank = Gf2Basis::new();
        for c in &cycles {
            if !rank.insert(&cycle_bits(g, c)?) {
                return Err(BasisError::Dependent);
            }
        }
        let mut cycles = cycles;
        cycles.sort_by(|a, b| a.selection_key().cmp(&b.selection_key()));
        let mut histogram = BTreeMap::new();
        let mut weight = 0;
        for c in &cycles {
            *histogram.entry(c.order()).or_insert(0) += 1;
            weight += c.order();
        }
        Ok(CycleBasis {
            cycles,
            histogram,
            weight,
        })
    }

    pub fn dimension(&self) -> usize {
        self.cycles.len()
    }

    /// Members sorted by (order, vertex list).
    pub fn cycles(&self) -> &[Cycle] {
        &self.cycles
    }

    /// Count of basis cycles per order.
    pub fn order_histogram(&self) -> &BTreeMap<usize, usize> {
        &self.histogram
    }

    /// Total edge count over all members.
    pub fn weight(&self) -> usize {
        self.weight
    }
}

/// All Horton candidate cycles of `g`, deduplicated and sorted by
/// (weight, support order). The minimum cycle basis is a subset.
pub fn horton_candidates(g: &Graph) -> Result<Vec<Cycle>, BasisError> {
    if !g.is_connected() {
        return Err(BasisError::NotConnected);
    }
    let n = g.vertex_count() as usize;
    let mut seen: BTreeSet<Vec<Edge>> = BTreeSet::new();
    let mut out: Vec<(Cycle, EdgeBits)> = Vec::new();
    for root in g.vertices() {
        let parent = bfs_parents(g, root);
        let path_to = |end: VertexId| -> (Vec<VertexId>, Vec<Edge>) {
            let mut vs = vec![end];
            let mut es = Vec::new();
            let mut cur = end;
            while cur != root {
                let p = parent[cur as usize];
                es.push(crate::graph::edge(cur, p));
                vs.push(p);
                cur = p;
            }
            (vs, es)
        };
        for &(x, y) in g.edges() {
            let (px_v, px_e) = path_to(x);
            let (py_v, py_e) = path_to(y);
            // The two paths must meet only at the root, otherwise the
            // closed walk is not a simple cycle.
            let mut marks = vec![false; n + 1];
            for &v in &px_v {
                marks[v as usize] = true;
            }
            if py_v.iter().filter(|&&v| marks[v as usize]).count() != 1 {
                continue;
            }
            let mut edges: Vec<Edge> = px_e;
            edges.extend(py_e);
            if edges.contains(&(x, y)) {
                continue;
            }
            edges.push((x, y));
            edges.sort_unstable();
            if edges.len() < 3 || !seen.insert(edges.clone()) {
                continue;
            }
            let cycle = Cycle::from_edges(edges).expect(
                "root-disjoint shortest paths plus a closing edge form a cycle",
            );
            let bits = cycle_bits(g, &cycle)?;
            out.push((cycle, bits));
        }
    }
    out.sort_by(|(a, ab), (b, bb)| {
        a.order()
            .cmp(&b.order())
            .then_with(|| ab.support_cmp(bb))
    });
    Ok(out.into_iter().map(|(c, _)| c).collect())
}

fn bfs_parents(g: &Graph, root: VertexId) -> Vec<VertexId> {
    let mut parent = vec![0u32; g.vertex_count() as usize + 1];
    let mut seen = vec![false; g.vertex_count() as usize + 1];
    seen[root as usize] = true;
    let mut queue = std::collections::VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if !seen[w as usize] {
                seen[w as usize] = true;
                parent[w as usize] = v;
                queue.push_back(w);
            }
        }
    }
    parent
}

/// Minimum cycle basis by greedy GF(2) elimination over the sorted Horton
/// candidates.
pub fn horton_mcb(g: &Graph) -> Result<CycleBasis, BasisError> {
    let dim = cycle_space_dimension(g)?;
    let mut rank = Gf2Basis::new();
    let mut picked = Vec::with_capacity(dim);
    for cand in horton_candidates(g)? {
        if rank.rank() == dim {
            break;
        }
        let bits = cycle_bits(g, &cand)?;
        if rank.insert(&bits) {
            picked.push(cand);
        }
    }
    CycleBasis::new(g, picked)
}

/// Independent check that `cycles` is a basis of the cycle space of `g`:
/// every member is a cycle of `g`, the count matches the dimension, and the
/// members are independent.
pub fn verify_basis(g: &Graph, cycles: &[Cycle]) -> bool {
    let Ok(dim) = cycle_space_dimension(g) else {
        return false;
    };
    if cycles.len() != dim {
        return false;
    }
    let mut rank = Gf2Basis::new();
    for c in cycles {
        let Ok(bits) = cycle_bits(g, c) else {
            return false;
        };
        if !rank.insert(&bits) {
            return false;
        }
    }
    true
}

/// One cycle per line as its sorted vertex list.
pub fn dump_basis(basis: &CycleBasis) -> String {
    let mut out = String::new();
    for c in basis.cycles() {
        let words: Vec<String> = c.vertices().iter().map(|v| v.to_string()).collect();
        out.push_str(&words.join(" "));
        out.push('\n');
    }
    out
}

/// Reads the `dump_basis` format back against a host graph. Each line's
/// vertex set must span a unique cycle of `g`.
pub fn parse_basis(g: &Graph, text: &str) -> Result<CycleBasis, BasisError> {
    let mut cycles = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let vs: Result<Vec<VertexId>, _> = line.split_whitespace().map(|w| w.parse()).collect();
        let vs = vs.map_err(|_| BasisError::BadLine {
            line: i + 1,
            text: line.to_string(),
        })?;
        cycles.push(Cycle::from_vertex_set(g, &vs)?);
    }
    CycleBasis::new(g, cycles)
}
