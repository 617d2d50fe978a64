//! Simple cycles represented as edge sets. A cycle stores its sorted edge
//! list and sorted vertex list; it is identified by vertex pairs rather than
//! edge indices so it stays meaningful across graph rebuilds.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::graph::{edge, Edge, Graph, VertexId};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CycleError {
    #[error("empty edge set is not a cycle")]
    Empty,
    #[error("vertex {0} has degree {1} in the edge set, every cycle vertex has degree 2")]
    BadDegree(VertexId, usize),
    #[error("edge set is a disjoint union of cycles, not a single cycle")]
    Disconnected,
    #[error("edge {0} {1} is not in the graph")]
    MissingEdge(VertexId, VertexId),
    #[error("vertex set {0:?} does not span a unique cycle: {1}")]
    AmbiguousVertexSet(Vec<VertexId>, String),
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
}

/// A simple cycle. Invariants enforced at construction: every incident
/// vertex has degree exactly 2 and the edge set is connected, so
/// `edges.len() == vertices.len()`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cycle {
    vertices: Vec<VertexId>,
    edges: Vec<Edge>,
}

impl Cycle {
    pub fn from_edges(raw: impl IntoIterator<Item = (VertexId, VertexId)>) -> Result<Self, CycleError> {
        let mut edges = BTreeSet::new();
        for (u, v) in raw {
            if u == v {
                return Err(CycleError::SelfLoop(u));
            }
            edges.insert(edge(u, v));
        }
        Self::from_edge_set(&edges)
    }

    pub fn from_edge_set(edges: &BTreeSet<Edge>) -> Result<Self, CycleError> {
        if edges.is_empty() {
            return Err(CycleError::Empty);
        }
        let mut incident: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
        for &(u, v) in edges {
            incident.entry(u).or_default().push(v);
            incident.entry(v).or_default().push(u);
        }
        for (&v, nbrs) in &incident {
            if nbrs.len() != 2 {
                return Err(CycleError::BadDegree(v, nbrs.len()));
            }
        }
        // Walk from the smallest vertex; a single cycle visits everything.
        let (&start, _) = incident.iter().next().expect("nonempty");
        let mut visited = BTreeSet::from([start]);
        let mut prev = start;
        let mut cur = incident[&start][0];
        while cur != start {
            visited.insert(cur);
            let nbrs = &incident[&cur];
            let next = if nbrs[0] == prev { nbrs[1] } else { nbrs[0] };
            prev = cur;
            cur = next;
        }
        if visited.len() != incident.len() {
            return Err(CycleError::Disconnected);
        }
        Ok(Cycle {
            vertices: incident.keys().copied().collect(),
            edges: edges.iter().copied().collect(),
        })
    }

    /// The unique cycle in `g` spanning exactly `vs`, if one exists. Used to
    /// reconstruct cycles from dumped vertex lists; errors if the induced
    /// structure is not a single spanning cycle or has extra chords making
    /// the cycle ambiguous.
    pub fn from_vertex_set(g: &Graph, vs: &[VertexId]) -> Result<Self, CycleError> {
        let set: BTreeSet<VertexId> = vs.iter().copied().collect();
        let induced: BTreeSet<Edge> = g
            .edges()
            .iter()
            .copied()
            .filter(|&(u, v)| set.contains(&u) && set.contains(&v))
            .collect();
        let sorted: Vec<VertexId> = set.iter().copied().collect();
        if induced.len() != set.len() {
            return Err(CycleError::AmbiguousVertexSet(
                sorted,
                format!("{} induced edges for {} vertices", induced.len(), set.len()),
            ));
        }
        let cycle = Self::from_edge_set(&induced).map_err(|e| {
            CycleError::AmbiguousVertexSet(sorted.clone(), e.to_string())
        })?;
        Ok(cycle)
    }

    /// Number of vertices (equivalently edges); the cycle's order.
    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    /// Sorted vertex list.
    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    /// Sorted edge list.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn contains_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.edges.binary_search(&edge(u, v)).is_ok()
    }

    pub fn shares_vertex(&self, other: &Cycle) -> bool {
        let (small, large) = if self.order() <= other.order() {
            (self, other)
        } else {
            (other, self)
        };
        small.vertices.iter().any(|&v| large.contains_vertex(v))
    }

    pub fn edge_set(&self) -> BTreeSet<Edge> {
        self.edges.iter().copied().collect()
    }

    /// Traversal order starting at the smallest vertex, toward its smaller
    /// neighbor. Canonical, so equal cycles render identically.
    pub fn tour(&self) -> Vec<VertexId> {
        let start = self.vertices[0];
        let mut nbrs = Vec::new();
        for &(u, v) in &self.edges {
            if u == start {
                nbrs.push(v);
            } else if v == start {
                nbrs.push(u);
            }
        }
        nbrs.sort_unstable();
        let mut out = vec![start];
        let mut prev = start;
        let mut cur = nbrs[0];
        while cur != start {
            out.push(cur);
            let mut step = Vec::new();
            for &(u, v) in &self.edges {
                if u == cur {
                    step.push(v);
                } else if v == cur {
                    step.push(u);
                }
            }
            let next = if step[0] == prev { step[1] } else { step[0] };
            prev = cur;
            cur = next;
        }
        out
    }

    /// Key for the selection order used everywhere a cycle list must be
    /// walked deterministically: smallest order first, then smallest sorted
    /// vertex list.
    pub fn selection_key(&self) -> (usize, &[VertexId], &[Edge]) {
        (self.order(), &self.vertices, &self.edges)
    }
}

/// GF(2) sum of two edge sets (symmetric difference).
pub fn symmetric_difference(a: &BTreeSet<Edge>, b: &BTreeSet<Edge>) -> BTreeSet<Edge> {
    a ^ b
}

/// Result of XOR-ing a family of cycles: the raw edge set, and its decoding
/// as a single simple cycle when it is one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gf2Sum {
    pub edges: BTreeSet<Edge>,
    pub cycle: Option<Cycle>,
}

/// GF(2) sum over any number of cycles. The sum of cycles is always a
/// disjoint union of cycles (possibly empty); `cycle` is set only when it
/// decodes to exactly one.
pub fn gf2_sum<'a>(cycles: impl IntoIterator<Item = &'a Cycle>) -> Gf2Sum {
    let mut acc: BTreeSet<Edge> = BTreeSet::new();
    for c in cycles {
        acc = symmetric_difference(&acc, &c.edge_set());
    }
    let cycle = Cycle::from_edge_set(&acc).ok();
    Gf2Sum { edges: acc, cycle }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::complete_graph;

    fn cyc(edges: &[(u32, u32)]) -> Cycle {
        Cycle::from_edges(edges.iter().copied()).unwrap()
    }

    #[test]
    fn triangle_has_order_three() {
        let t = cyc(&[(2, 1), (3, 2), (1, 3)]);
        assert_eq!(t.order(), 3);
        assert_eq!(t.vertices(), &[1, 2, 3]);
        assert_eq!(t.edges(), &[(1, 2), (1, 3), (2, 3)]);
        assert_eq!(t.tour(), vec![1, 2, 3]);
    }

    #[test]
    fn rejects_non_cycles() {
        assert_eq!(Cycle::from_edges([]), Err(CycleError::Empty));
        assert_eq!(
            Cycle::from_edges([(1, 2), (2, 3)]),
            Err(CycleError::BadDegree(1, 1))
        );
        // Two disjoint triangles: every degree is 2 but it is not one cycle.
        assert_eq!(
            Cycle::from_edges([(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)]),
            Err(CycleError::Disconnected)
        );
        assert_eq!(
            Cycle::from_edges([(1, 2), (2, 3), (1, 3), (3, 4)]),
            Err(CycleError::BadDegree(3, 3))
        );
    }

    #[test]
    fn tour_is_canonical() {
        let square = cyc(&[(2, 4), (1, 2), (3, 4), (1, 3)]);
        assert_eq!(square.tour(), vec![1, 2, 4, 3]);
    }

    #[test]
    fn symmetric_difference_cancels_shared_edges() {
        let t1 = cyc(&[(1, 2), (2, 3), (1, 3)]);
        let t2 = cyc(&[(1, 3), (3, 4), (1, 4)]);
        let sum = gf2_sum([&t1, &t2]);
        assert_eq!(
            sum.edges,
            BTreeSet::from([(1, 2), (2, 3), (3, 4), (1, 4)])
        );
        let c = sum.cycle.expect("two triangles sharing an edge sum to a square");
        assert_eq!(c.tour(), vec![1, 2, 3, 4]);
    }

    #[test]
    fn sum_of_disjoint_cycles_does_not_decode() {
        let t1 = cyc(&[(1, 2), (2, 3), (1, 3)]);
        let t2 = cyc(&[(4, 5), (5, 6), (4, 6)]);
        let sum = gf2_sum([&t1, &t2]);
        assert_eq!(sum.edges.len(), 6);
        assert!(sum.cycle.is_none());
        let empty = gf2_sum([&t1, &t1]);
        assert!(empty.edges.is_empty());
        assert!(empty.cycle.is_none());
    }

    #[test]
    fn vertex_set_reconstruction() {
        let k4 = complete_graph(4).unwrap();
        // All four vertices of K4 induce six edges, not a unique cycle.
        assert!(matches!(
            Cycle::from_vertex_set(&k4, &[1, 2, 3, 4]),
            Err(CycleError::AmbiguousVertexSet(..))
        ));
        let t = Cycle::from_vertex_set(&k4, &[1, 2, 3]).unwrap();
        assert_eq!(t.edges(), &[(1, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn shares_vertex() {
        let t1 = cyc(&[(1, 2), (2, 3), (1, 3)]);
        let t2 = cyc(&[(3, 4), (4, 5), (3, 5)]);
        let t3 = cyc(&[(6, 7), (7, 8), (6, 8)]);
        assert!(t1.shares_vertex(&t2));
        assert!(!t1.shares_vertex(&t3));
    }
}
