//! Edge multiplicity over a basis and everything built on it: vertex and
//! cycle classification, the forced-edge screen, shared-vertex cycle sets,
//! dismantlability, blocking-cycle detection, and the guarded deletion
//! step. All of it is bookkeeping over how many basis cycles pass each
//! edge; `r(e)` below always means that count.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::cycle::Cycle;
use crate::graph::{edge, Edge, Graph, VertexId};
use crate::grinberg::{enumerate_count_solutions, CountVector, OrderHistogram};
use crate::mcb::{BasisError, CycleBasis};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RemovabilityError {
    #[error("cycle edge {0} {1} is not in the graph")]
    ForeignEdge(VertexId, VertexId),
    #[error("cycle is not a member of the basis")]
    NotInBasis,
    #[error("candidate has {0} edges with r=1, need exactly 1")]
    NotCandidate(usize),
    #[error("candidate is irremovable ({0})")]
    IrremovableCandidate(&'static str),
    #[error("deletion left an invalid basis: {0}")]
    BrokenBasis(BasisError),
}

/// How many basis cycles pass each edge. Edges in no cycle are absent and
/// read as 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeMultiplicityMap {
    counts: BTreeMap<Edge, u32>,
}

impl EdgeMultiplicityMap {
    fn from_cycles<'a>(cycles: impl IntoIterator<Item = &'a Cycle>) -> Self {
        let mut counts = BTreeMap::new();
        for c in cycles {
            for &e in c.edges() {
                *counts.entry(e).or_insert(0) += 1;
            }
        }
        EdgeMultiplicityMap { counts }
    }

    pub fn get(&self, u: VertexId, v: VertexId) -> u32 {
        self.counts.get(&edge(u, v)).copied().unwrap_or(0)
    }

    /// Edges with multiplicity exactly `r`, in edge order.
    pub fn edges_with(&self, r: u32) -> impl Iterator<Item = Edge> + '_ {
        self.counts
            .iter()
            .filter(move |&(_, &c)| c == r)
            .map(|(&e, _)| e)
    }

    /// Sum of all multiplicities; equals the total basis weight.
    pub fn total(&self) -> u64 {
        self.counts.values().map(|&c| c as u64).sum()
    }
}

/// Membership counts of basis cycles per edge of `g`.
pub fn compute_r_map(basis: &CycleBasis, g: &Graph) -> Result<EdgeMultiplicityMap, RemovabilityError> {
    for c in basis.cycles() {
        for &(u, v) in c.edges() {
            if !g.has_edge(u, v) {
                return Err(RemovabilityError::ForeignEdge(u, v));
            }
        }
    }
    Ok(EdgeMultiplicityMap::from_cycles(basis.cycles()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexClass {
    /// Exactly two incident edges with r=1.
    Boundary,
    /// Every incident edge has r=2.
    Inner,
    NonBoundary,
}

fn vertex_class_of(incident: impl Iterator<Item = u32>) -> VertexClass {
    let mut unit = 0usize;
    let mut all_two = true;
    let mut any = false;
    for r in incident {
        any = true;
        if r == 1 {
            unit += 1;
        }
        if r != 2 {
            all_two = false;
        }
    }
    if unit == 2 {
        VertexClass::Boundary
    } else if any && all_two {
        VertexClass::Inner
    } else {
        VertexClass::NonBoundary
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexClassification {
    classes: Vec<VertexClass>,
}

impl VertexClassification {
    pub fn get(&self, v: VertexId) -> VertexClass {
        self.classes[v as usize]
    }

    /// Boundary vertices in ascending order.
    pub fn boundary_vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.classes
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, &c)| c == VertexClass::Boundary)
            .map(|(v, _)| v as VertexId)
    }
}

pub fn classify_vertices(g: &Graph, rmap: &EdgeMultiplicityMap) -> VertexClassification {
    let mut classes = vec![VertexClass::NonBoundary; g.vertex_count() as usize + 1];
    for v in g.vertices() {
        classes[v as usize] =
            vertex_class_of(g.neighbors(v).iter().map(|&w| rmap.get(v, w)));
    }
    VertexClassification { classes }
}

/// The disqualifying configurations a basis cycle can be in, and the two
/// configurations the theory leaves undecided.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CycleClass {
    /// Exactly one r=1 edge and at most two non-inner vertices; deleting
    /// the cycle drops exactly that edge.
    Removable,
    /// Two r=1 edges sharing a vertex (case 1).
    AdjacentUnitPair,
    /// Two or more r=1 edges, pairwise vertex-disjoint (case 2).
    SeparatedUnitPair,
    /// One r=1 edge but three or more non-inner vertices (case 3).
    NonInnerExcess,
    /// No r=1 edge and every vertex is boundary (case 5, decided subcase).
    AllBoundary,
    /// No r=1 edge, no boundary vertex (case 4; not decidable here).
    UncertainNoBoundary,
    /// No r=1 edge, boundary and non-boundary vertices mixed (case 5,
    /// undecided subcase).
    UncertainMixed,
}

impl CycleClass {
    pub fn is_removable(&self) -> bool {
        matches!(self, CycleClass::Removable)
    }

    pub fn is_uncertain(&self) -> bool {
        matches!(
            self,
            CycleClass::UncertainNoBoundary | CycleClass::UncertainMixed
        )
    }

    pub fn label(&self) -> &'static str {
        match self {
            CycleClass::Removable => "removable",
            CycleClass::AdjacentUnitPair => "irremovable:adjacent_unit_pair",
            CycleClass::SeparatedUnitPair => "irremovable:separated_unit_pair",
            CycleClass::NonInnerExcess => "irremovable:non_inner_excess",
            CycleClass::AllBoundary => "irremovable:all_boundary",
            CycleClass::UncertainNoBoundary => "uncertain:no_boundary",
            CycleClass::UncertainMixed => "uncertain:mixed_boundary",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleClassification {
    pub class: CycleClass,
    /// The cycle's edges with r=1, in edge order.
    pub unit_edges: Vec<Edge>,
}

fn classify_cycle_with(
    c: &Cycle,
    rmap: &EdgeMultiplicityMap,
    class_of: impl Fn(VertexId) -> VertexClass,
) -> CycleClassification {
    let unit_edges: Vec<Edge> = c
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| rmap.get(u, v) == 1)
        .collect();
    let class = match unit_edges.len() {
        0 => {
            let mut boundary = 0usize;
            for &v in c.vertices() {
                if class_of(v) == VertexClass::Boundary {
                    boundary += 1;
                }
            }
            if boundary == 0 {
                CycleClass::UncertainNoBoundary
            } else if boundary == c.order() {
                CycleClass::AllBoundary
            } else {
                CycleClass::UncertainMixed
            }
        }
        1 => {
            let non_inner = c
                .vertices()
                .iter()
                .filter(|&&v| class_of(v) != VertexClass::Inner)
                .count();
            if non_inner >= 3 {
                CycleClass::NonInnerExcess
            } else {
                CycleClass::Removable
            }
        }
        _ => {
            let adjacent = unit_edges.iter().enumerate().any(|(i, &(a, b))| {
                unit_edges[i + 1..]
                    .iter()
                    .any(|&(x, y)| a == x || a == y || b == x || b == y)
            });
            if adjacent {
                CycleClass::AdjacentUnitPair
            } else {
                CycleClass::SeparatedUnitPair
            }
        }
    };
    CycleClassification { class, unit_edges }
}

pub fn classify_cycle(
    c: &Cycle,
    basis: &CycleBasis,
    rmap: &EdgeMultiplicityMap,
    vclass: &VertexClassification,
) -> Result<CycleClassification, RemovabilityError> {
    if !basis.cycles().contains(c) {
        return Err(RemovabilityError::NotInBasis);
    }
    Ok(classify_cycle_with(c, rmap, |v| vclass.get(v)))
}

/// `|P|` at `v`: incident edges that any Hamiltonian cycle is forced to
/// treat as decided, meaning edges with r=1 or edges whose endpoint has
/// degree 2.
pub fn forced_edge_count(v: VertexId, g: &Graph, rmap: &EdgeMultiplicityMap) -> usize {
    g.neighbors(v)
        .iter()
        .filter(|&&w| rmap.get(v, w) == 1 || g.degree(v) == 2 || g.degree(w) == 2)
        .count()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PScreen {
    /// Some vertex of degree >= 3 carries three or more forced edges; a
    /// Hamiltonian cycle can use only two edges per vertex.
    NotHamiltonianByP { vertex: VertexId, forced: usize },
    Pass,
}

pub fn screen_p(g: &Graph, rmap: &EdgeMultiplicityMap) -> PScreen {
    for v in g.vertices() {
        if g.degree(v) >= 3 {
            let forced = forced_edge_count(v, g, rmap);
            if forced >= 3 {
                return PScreen::NotHamiltonianByP { vertex: v, forced };
            }
        }
    }
    PScreen::Pass
}

/// A center cycle together with every basis cycle sharing at least one
/// vertex with it. Members are in selection order and include the center.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CSet {
    pub center: Cycle,
    pub members: Vec<Cycle>,
}

pub fn build_c_set(center: &Cycle, basis: &CycleBasis) -> CSet {
    let members = basis
        .cycles()
        .iter()
        .filter(|c| c.shares_vertex(center))
        .cloned()
        .collect();
    CSet {
        center: center.clone(),
        members,
    }
}

/// Standalone view of a member family: multiplicities and vertex classes
/// computed over the members alone, ignoring the host basis.
struct Standalone {
    rmap: EdgeMultiplicityMap,
    incident: BTreeMap<VertexId, Vec<VertexId>>,
}

impl Standalone {
    fn new(members: &[Cycle]) -> Self {
        let rmap = EdgeMultiplicityMap::from_cycles(members);
        let mut incident: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
        let mut seen = BTreeSet::new();
        for c in members {
            for &(u, v) in c.edges() {
                if seen.insert((u, v)) {
                    incident.entry(u).or_default().push(v);
                    incident.entry(v).or_default().push(u);
                }
            }
        }
        Standalone { rmap, incident }
    }

    fn vertex_count(&self) -> usize {
        self.incident.len()
    }

    fn class_of(&self, v: VertexId) -> VertexClass {
        match self.incident.get(&v) {
            None => VertexClass::NonBoundary,
            Some(nbrs) => vertex_class_of(nbrs.iter().map(|&w| self.rmap.get(v, w))),
        }
    }

    fn histogram(members: &[Cycle]) -> OrderHistogram {
        let mut h = OrderHistogram::new();
        for c in members {
            *h.entry(c.order()).or_insert(0) += 1;
        }
        h
    }
}

/// Counts ways to pick members matching `target` per order, stopping at
/// `cap`. Returns the count found (saturated at `cap`) and the first
/// realization in selection order.
fn count_realizations(members: &[Cycle], target: &CountVector, cap: usize) -> (usize, Vec<usize>) {
    let mut by_order: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, c) in members.iter().enumerate() {
        by_order.entry(c.order()).or_default().push(i);
    }
    for (&order, &want) in target.counts() {
        if by_order.get(&order).map_or(0, Vec::len) < want {
            return (0, Vec::new());
        }
    }
    let groups: Vec<(Vec<usize>, usize)> = by_order
        .into_iter()
        .map(|(o, idxs)| (idxs, target.get(o)))
        .collect();
    let mut count = 0usize;
    let mut first: Vec<usize> = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    fn choose(
        groups: &[(Vec<usize>, usize)],
        gi: usize,
        start: usize,
        left: usize,
        cap: usize,
        chosen: &mut Vec<usize>,
        count: &mut usize,
        first: &mut Vec<usize>,
    ) {
        if *count >= cap {
            return;
        }
        if left == 0 {
            if gi + 1 == groups.len() {
                *count += 1;
                if first.is_empty() {
                    *first = chosen.clone();
                }
            } else {
                let need = groups[gi + 1].1;
                choose(groups, gi + 1, 0, need, cap, chosen, count, first);
            }
            return;
        }
        let pool = &groups[gi].0;
        for at in start..=pool.len().saturating_sub(left) {
            chosen.push(pool[at]);
            choose(groups, gi, at + 1, left - 1, cap, chosen, count, first);
            chosen.pop();
            if *count >= cap {
                return;
            }
        }
    }
    if groups.is_empty() {
        // Empty member list realizes only the empty vector.
        return if target.total() == 0 { (1, vec![]) } else { (0, vec![]) };
    }
    if groups.iter().any(|(pool, need)| *need > pool.len()) {
        return (0, vec![]);
    }
    let need = groups[0].1;
    choose(&groups, 0, 0, need, cap, &mut chosen, &mut count, &mut first);
    (count, first)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DismantleOutcome {
    pub dismantlable: bool,
    /// Which stage decided, for traces.
    pub rule: &'static str,
}

/// Dismantlability of a shared-vertex cycle set. The members play the
/// basis role over their union subgraph: solve the counting equation with
/// the union's vertex count, then check how many ways the unique count
/// vector can be realized by actual members. A center that is forced into
/// the non-composing side by a unique realization must survive deletion
/// bookkeeping for the set to be declared non-dismantlable.
pub fn check_dismantlable(cs: &CSet) -> DismantleOutcome {
    let standalone = Standalone::new(&cs.members);
    let rhs = standalone.vertex_count() as i64 - 2;
    let hist = Standalone::histogram(&cs.members);
    let solutions = enumerate_count_solutions(&hist, rhs, 2);
    let unique_vector = match (solutions.vectors.len(), solutions.truncated) {
        (1, false) => solutions.vectors.into_iter().next().expect("one vector"),
        _ => {
            return DismantleOutcome {
                dismantlable: true,
                rule: "no_unique_solution",
            }
        }
    };
    let (realizations, first) = count_realizations(&cs.members, &unique_vector, 2);
    if realizations != 1 {
        return DismantleOutcome {
            dismantlable: true,
            rule: "multiple_realizations",
        };
    }
    let center_idx = cs
        .members
        .iter()
        .position(|c| c == &cs.center)
        .expect("center is a member");
    if first.contains(&center_idx) {
        // The unique local solution composes the center itself, so the
        // center is not an irreplaceable co-solution cycle.
        return DismantleOutcome {
            dismantlable: true,
            rule: "center_in_solution",
        };
    }
    // Delete every standalone-removable member simultaneously, then compare
    // the surviving r=1 edge count with the surviving member count.
    let keep: Vec<Cycle> = cs
        .members
        .iter()
        .filter(|c| {
            !classify_cycle_with(c, &standalone.rmap, |v| standalone.class_of(v))
                .class
                .is_removable()
        })
        .cloned()
        .collect();
    let after = EdgeMultiplicityMap::from_cycles(&keep);
    let units = after.edges_with(1).count();
    if units == keep.len() {
        DismantleOutcome {
            dismantlable: true,
            rule: "unit_count_match",
        }
    } else {
        DismantleOutcome {
            dismantlable: false,
            rule: "unit_count_mismatch",
        }
    }
}

/// Whether `c` is a blocking cycle: no r=1 edge, and its shared-vertex set
/// is not dismantlable. Such a cycle sits on the non-composing side of the
/// set's unique local solution and cannot be deleted or replaced.
pub fn is_ck(
    c: &Cycle,
    basis: &CycleBasis,
    rmap: &EdgeMultiplicityMap,
) -> Result<bool, RemovabilityError> {
    if !basis.cycles().contains(c) {
        return Err(RemovabilityError::NotInBasis);
    }
    if c.edges().iter().any(|&(u, v)| rmap.get(u, v) == 1) {
        return Ok(false);
    }
    Ok(!check_dismantlable(&build_c_set(c, basis)).dismantlable)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Removability {
    Removable,
    Irremovable { rule: &'static str },
}

/// The candidate gate run before any deletion. `c` must have exactly one
/// r=1 edge. The checks, in order:
/// 1. a blocking cycle anchored at one of the candidate's boundary
///    vertices of degree >= 4;
/// then at either endpoint of the candidate's r=1 edge (the vertex where
/// the deletion has to splice other cycles together):
/// 2. some other basis cycle passes through with both its edges there at
///    r=1;
/// 3. an incident edge with r >= 3;
/// 4. three or more incident r=1 edges.
pub fn check_removable_candidate(
    c: &Cycle,
    basis: &CycleBasis,
    rmap: &EdgeMultiplicityMap,
    vclass: &VertexClassification,
    g: &Graph,
) -> Result<Removability, RemovabilityError> {
    if !basis.cycles().contains(c) {
        return Err(RemovabilityError::NotInBasis);
    }
    let unit_edges: Vec<Edge> = c
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| rmap.get(u, v) == 1)
        .collect();
    if unit_edges.len() != 1 {
        return Err(RemovabilityError::NotCandidate(unit_edges.len()));
    }
    // 1: a non-dismantlable shared-vertex set anchored at a boundary vertex
    // of the candidate.
    for &k in c.vertices() {
        if vclass.get(k) != VertexClass::Boundary || g.degree(k) < 4 {
            continue;
        }
        for d in basis.cycles() {
            if d == c || !d.contains_vertex(k) {
                continue;
            }
            if d.edges().iter().any(|&(u, v)| rmap.get(u, v) == 1) {
                continue;
            }
            if !check_dismantlable(&build_c_set(d, basis)).dismantlable {
                return Ok(Removability::Irremovable {
                    rule: "blocking_cycle",
                });
            }
        }
    }
    let (a, b) = unit_edges[0];
    for v in [a, b] {
        // 2: another cycle contributes two r=1 edges at this endpoint.
        for d in basis.cycles() {
            if d == c || !d.contains_vertex(v) {
                continue;
            }
            let both_unit = d
                .edges()
                .iter()
                .filter(|&&(x, y)| (x == v || y == v) && rmap.get(x, y) == 1)
                .count()
                == 2;
            if both_unit {
                return Ok(Removability::Irremovable {
                    rule: "unit_pair_on_one_cycle",
                });
            }
        }
        // 3: high multiplicity meets the unit edge.
        if g.neighbors(v).iter().any(|&w| rmap.get(v, w) >= 3) {
            return Ok(Removability::Irremovable {
                rule: "high_multiplicity_edge",
            });
        }
        // 4: three or more r=1 edges concentrate here.
        let units_at = g
            .neighbors(v)
            .iter()
            .filter(|&&w| rmap.get(v, w) == 1)
            .count();
        if units_at >= 3 {
            return Ok(Removability::Irremovable {
                rule: "three_unit_edges",
            });
        }
    }
    Ok(Removability::Removable)
}

/// Deletes a removable cycle: the basis loses the member, the graph loses
/// the member's single r=1 edge. Re-checks the precondition before
/// touching anything and rebuilds the basis afterwards so independence and
/// the dimension drop are re-verified on every deletion.
pub fn remove_cycle(
    basis: &CycleBasis,
    c: &Cycle,
    g: &Graph,
) -> Result<(CycleBasis, Graph), RemovabilityError> {
    let rmap = compute_r_map(basis, g)?;
    let vclass = classify_vertices(g, &rmap);
    match check_removable_candidate(c, basis, &rmap, &vclass, g)? {
        Removability::Removable => {}
        Removability::Irremovable { rule } => {
            return Err(RemovabilityError::IrremovableCandidate(rule))
        }
    }
    let unit: Vec<Edge> = c
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| rmap.get(u, v) == 1)
        .collect();
    debug_assert_eq!(unit.len(), 1, "candidate gate guarantees one unit edge");
    let (u, v) = unit[0];
    let g2 = g
        .without_edge(u, v)
        .map_err(|_| RemovabilityError::ForeignEdge(u, v))?;
    assert_eq!(g2.vertex_count(), g.vertex_count());
    assert_eq!(g2.edge_count() + 1, g.edge_count());
    let rest: Vec<Cycle> = basis.cycles().iter().filter(|&d| d != c).cloned().collect();
    let basis2 = CycleBasis::new(&g2, rest).map_err(RemovabilityError::BrokenBasis)?;
    Ok((basis2, g2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete_graph, cycle_graph, grid_graph};
    use crate::mcb::horton_mcb;

    fn setup(g: &Graph) -> (CycleBasis, EdgeMultiplicityMap, VertexClassification) {
        let basis = horton_mcb(g).unwrap();
        let rmap = compute_r_map(&basis, g).unwrap();
        let vclass = classify_vertices(g, &rmap);
        (basis, rmap, vclass)
    }

    #[test]
    fn r_map_examples() {
        let c6 = cycle_graph(6).unwrap();
        let (_, rmap, _) = setup(&c6);
        for &(u, v) in c6.edges() {
            assert_eq!(rmap.get(u, v), 1);
        }
        assert_eq!(rmap.total(), 6);

        let k4 = complete_graph(4).unwrap();
        let (_, rmap, _) = setup(&k4);
        assert_eq!(rmap.get(1, 2), 2);
        assert_eq!(rmap.get(1, 3), 2);
        assert_eq!(rmap.get(1, 4), 2);
        assert_eq!(rmap.get(2, 3), 1);
        assert_eq!(rmap.get(2, 4), 1);
        assert_eq!(rmap.get(3, 4), 1);
        assert_eq!(rmap.total(), 9);
        assert_eq!(rmap.edges_with(1).collect::<Vec<_>>(), vec![(2, 3), (2, 4), (3, 4)]);
    }

    #[test]
    fn vertex_classes_on_c6_and_k4() {
        let c6 = cycle_graph(6).unwrap();
        let (_, _, vclass) = setup(&c6);
        for v in c6.vertices() {
            assert_eq!(vclass.get(v), VertexClass::Boundary);
        }
        let k4 = complete_graph(4).unwrap();
        let (_, _, vclass) = setup(&k4);
        assert_eq!(vclass.get(1), VertexClass::Inner);
        for v in 2..=4 {
            assert_eq!(vclass.get(v), VertexClass::Boundary);
        }
        assert_eq!(vclass.boundary_vertices().collect::<Vec<_>>(), vec![2, 3, 4]);
    }

    #[test]
    fn k4_triangle_is_removable() {
        let k4 = complete_graph(4).unwrap();
        let (basis, rmap, vclass) = setup(&k4);
        let t123 = basis.cycles()[0].clone();
        assert_eq!(t123.vertices(), &[1, 2, 3]);
        let cc = classify_cycle(&t123, &basis, &rmap, &vclass).unwrap();
        assert_eq!(cc.class, CycleClass::Removable);
        assert_eq!(cc.unit_edges, vec![(2, 3)]);
    }

    #[test]
    fn c6_cycle_is_adjacent_unit_pair() {
        let c6 = cycle_graph(6).unwrap();
        let (basis, rmap, vclass) = setup(&c6);
        let cc = classify_cycle(&basis.cycles()[0], &basis, &rmap, &vclass).unwrap();
        assert_eq!(cc.class, CycleClass::AdjacentUnitPair);
        assert_eq!(cc.unit_edges.len(), 6);
    }

    #[test]
    fn ladder_middle_square_is_separated_unit_pair() {
        // 2x4 grid: the middle square's two r=1 edges are its top and
        // bottom rungs, which share no vertex.
        let g = grid_graph(2, 4).unwrap();
        let (basis, rmap, vclass) = setup(&g);
        assert_eq!(basis.dimension(), 3);
        let middle = basis
            .cycles()
            .iter()
            .find(|c| c.vertices() == [2, 3, 6, 7])
            .expect("middle square in basis");
        let cc = classify_cycle(middle, &basis, &rmap, &vclass).unwrap();
        assert_eq!(cc.class, CycleClass::SeparatedUnitPair);
        assert_eq!(cc.unit_edges, vec![(2, 3), (6, 7)]);
        let end = basis
            .cycles()
            .iter()
            .find(|c| c.vertices() == [1, 2, 5, 6])
            .expect("end square in basis");
        let cc = classify_cycle(end, &basis, &rmap, &vclass).unwrap();
        assert_eq!(cc.class, CycleClass::AdjacentUnitPair);
    }

    #[test]
    fn k5_fan_triangle_is_non_inner_excess() {
        let k5 = complete_graph(5).unwrap();
        let (basis, rmap, vclass) = setup(&k5);
        let t = basis.cycles()[0].clone();
        assert_eq!(t.vertices(), &[1, 2, 3]);
        // Every edge at the fan apex has r=3; nothing is inner.
        assert_eq!(rmap.get(1, 2), 3);
        let cc = classify_cycle(&t, &basis, &rmap, &vclass).unwrap();
        assert_eq!(cc.class, CycleClass::NonInnerExcess);
    }

    #[test]
    fn grid_center_square_is_uncertain_no_boundary() {
        let g = grid_graph(4, 4).unwrap();
        let (basis, rmap, vclass) = setup(&g);
        let center = basis
            .cycles()
            .iter()
            .find(|c| c.vertices() == [6, 7, 10, 11])
            .expect("center square in basis");
        for &(u, v) in center.edges() {
            assert_eq!(rmap.get(u, v), 2);
        }
        for &v in center.vertices() {
            assert_eq!(vclass.get(v), VertexClass::Inner);
        }
        let cc = classify_cycle(center, &basis, &rmap, &vclass).unwrap();
        assert_eq!(cc.class, CycleClass::UncertainNoBoundary);
    }

    #[test]
    fn forced_edges_and_p_screen() {
        let k4 = complete_graph(4).unwrap();
        let (_, rmap, _) = setup(&k4);
        assert_eq!(forced_edge_count(2, &k4, &rmap), 2);
        assert_eq!(forced_edge_count(1, &k4, &rmap), 0);
        assert_eq!(screen_p(&k4, &rmap), PScreen::Pass);

        let c6 = cycle_graph(6).unwrap();
        let (_, rmap6, _) = setup(&c6);
        assert_eq!(forced_edge_count(1, &c6, &rmap6), 2);
        assert_eq!(screen_p(&c6, &rmap6), PScreen::Pass);

        // Bowtie: two triangles sharing vertex 1. Both triangles are basis
        // cycles, every edge has r=1, so the shared degree-4 vertex carries
        // four forced edges.
        let bowtie = Graph::new(5, [(1, 2), (1, 3), (2, 3), (1, 4), (1, 5), (4, 5)]).unwrap();
        let (_, rmap_b, _) = setup(&bowtie);
        assert_eq!(forced_edge_count(1, &bowtie, &rmap_b), 4);
        assert_eq!(
            screen_p(&bowtie, &rmap_b),
            PScreen::NotHamiltonianByP {
                vertex: 1,
                forced: 4
            }
        );

        let k5 = complete_graph(5).unwrap();
        let (_, rmap5, _) = setup(&k5);
        assert_eq!(
            screen_p(&k5, &rmap5),
            PScreen::NotHamiltonianByP {
                vertex: 2,
                forced: 3
            }
        );
    }

    #[test]
    fn c_set_membership() {
        let k4 = complete_graph(4).unwrap();
        let (basis, _, _) = setup(&k4);
        let cs = build_c_set(&basis.cycles()[0], &basis);
        assert_eq!(cs.members.len(), 3);
        assert!(cs.members.contains(&cs.center));

        let c6 = cycle_graph(6).unwrap();
        let (b6, _, _) = setup(&c6);
        let cs6 = build_c_set(&b6.cycles()[0], &b6);
        assert_eq!(cs6.members.len(), 1);
    }

    #[test]
    fn k4_c_set_is_dismantlable_by_realizations() {
        let k4 = complete_graph(4).unwrap();
        let (basis, _, _) = setup(&k4);
        let out = check_dismantlable(&build_c_set(&basis.cycles()[0], &basis));
        assert!(out.dismantlable);
        assert_eq!(out.rule, "multiple_realizations");
    }

    #[test]
    fn single_member_c_set_is_dismantlable() {
        let c6 = cycle_graph(6).unwrap();
        let (basis, _, _) = setup(&c6);
        let out = check_dismantlable(&build_c_set(&basis.cycles()[0], &basis));
        assert!(out.dismantlable);
        assert_eq!(out.rule, "center_in_solution");
    }

    #[test]
    fn unit_edge_cycles_are_never_blocking() {
        let k4 = complete_graph(4).unwrap();
        let (basis, rmap, _) = setup(&k4);
        for c in basis.cycles() {
            assert_eq!(is_ck(c, &basis, &rmap), Ok(false));
        }
    }

    #[test]
    fn k4_candidate_gate_passes() {
        let k4 = complete_graph(4).unwrap();
        let (basis, rmap, vclass) = setup(&k4);
        let t123 = basis.cycles()[0].clone();
        assert_eq!(
            check_removable_candidate(&t123, &basis, &rmap, &vclass, &k4),
            Ok(Removability::Removable)
        );
    }

    #[test]
    fn k5_candidate_gate_hits_high_multiplicity() {
        let k5 = complete_graph(5).unwrap();
        let (basis, rmap, vclass) = setup(&k5);
        let t123 = basis.cycles()[0].clone();
        assert_eq!(
            check_removable_candidate(&t123, &basis, &rmap, &vclass, &k5),
            Ok(Removability::Irremovable {
                rule: "high_multiplicity_edge"
            })
        );
    }

    #[test]
    fn candidate_gate_rejects_wrong_unit_count() {
        let c6 = cycle_graph(6).unwrap();
        let (basis, rmap, vclass) = setup(&c6);
        assert_eq!(
            check_removable_candidate(&basis.cycles()[0], &basis, &rmap, &vclass, &c6),
            Err(RemovabilityError::NotCandidate(6))
        );
    }

    #[test]
    fn k4_deletion_conserves_vertices_and_drops_one_edge() {
        let k4 = complete_graph(4).unwrap();
        let (basis, _, _) = setup(&k4);
        let t123 = basis.cycles()[0].clone();
        let (b2, g2) = remove_cycle(&basis, &t123, &k4).unwrap();
        assert_eq!(g2.vertex_count(), 4);
        assert_eq!(g2.edge_count(), 5);
        assert!(!g2.has_edge(2, 3));
        assert_eq!(b2.dimension(), 2);
        let sets: Vec<&[u32]> = b2.cycles().iter().map(|c| c.vertices()).collect();
        assert_eq!(sets, vec![&[1, 2, 4][..], &[1, 3, 4]]);
    }

    #[test]
    fn second_k4_deletion_is_rejected_before_mutation() {
        // After deleting triangle 123, both 12 and 24 have r=1 on triangle
        // 124, so 124 is no longer a one-unit-edge candidate.
        let k4 = complete_graph(4).unwrap();
        let (basis, _, _) = setup(&k4);
        let t123 = basis.cycles()[0].clone();
        let (b2, g2) = remove_cycle(&basis, &t123, &k4).unwrap();
        let rmap2 = compute_r_map(&b2, &g2).unwrap();
        assert_eq!(rmap2.get(1, 2), 1);
        assert_eq!(rmap2.get(2, 4), 1);
        assert_eq!(rmap2.get(1, 4), 2);
        let t124 = b2.cycles()[0].clone();
        assert_eq!(t124.vertices(), &[1, 2, 4]);
        assert_eq!(
            remove_cycle(&b2, &t124, &g2),
            Err(RemovabilityError::NotCandidate(2))
        );
        assert_eq!(g2.edge_count(), 5, "graph untouched by the rejected call");
    }

    #[test]
    fn removing_a_non_member_fails() {
        let k4 = complete_graph(4).unwrap();
        let (basis, _, _) = setup(&k4);
        let missing = Cycle::from_edges([(5, 6), (6, 7), (5, 7)]).unwrap();
        assert_eq!(
            remove_cycle(&basis, &missing, &k4).unwrap_err(),
            RemovabilityError::NotInBasis
        );
    }

    #[test]
    fn realization_counting() {
        let k4 = complete_graph(4).unwrap();
        let (basis, _, _) = setup(&k4);
        let two_triangles = CountVector::new([(3, 2)].into_iter().collect());
        let (count, first) = count_realizations(basis.cycles(), &two_triangles, 10);
        assert_eq!(count, 3);
        assert_eq!(first, vec![0, 1]);
        let all = CountVector::new([(3, 3)].into_iter().collect());
        assert_eq!(count_realizations(basis.cycles(), &all, 10).0, 1);
        let impossible = CountVector::new([(4, 1)].into_iter().collect());
        assert_eq!(count_realizations(basis.cycles(), &impossible, 10).0, 0);
    }

    #[test]
    fn candidate_gate_hits_unit_pair_on_one_cycle() {
        let g = crate::graph::parse_graph("6 9\n1 2\n1 4\n1 5\n2 3\n2 4\n2 5\n2 6\n3 6\n4 5\n")
            .unwrap();
        let (basis, rmap, vclass) = setup(&g);
        let sets: Vec<&[u32]> = basis.cycles().iter().map(|c| c.vertices()).collect();
        assert_eq!(sets, vec![&[1, 2, 4][..], &[1, 2, 5], &[1, 4, 5], &[2, 3, 6]]);
        let t124 = basis.cycles()[0].clone();
        assert_eq!(
            classify_cycle(&t124, &basis, &rmap, &vclass).unwrap().unit_edges,
            vec![(2, 4)]
        );
        assert_eq!(
            check_removable_candidate(&t124, &basis, &rmap, &vclass, &g),
            Ok(Removability::Irremovable {
                rule: "unit_pair_on_one_cycle"
            })
        );
        let t145 = basis.cycles()[2].clone();
        assert_eq!(
            check_removable_candidate(&t145, &basis, &rmap, &vclass, &g),
            Ok(Removability::Removable)
        );
        let t236 = basis.cycles()[3].clone();
        assert_eq!(
            check_removable_candidate(&t236, &basis, &rmap, &vclass, &g),
            Err(RemovabilityError::NotCandidate(3))
        );
    }

    #[test]
    fn blocking_cycle_with_forced_local_solution() {
        let g = crate::graph::parse_graph(
            "8 11\n1 2\n1 7\n2 3\n2 4\n2 5\n3 6\n4 6\n5 7\n5 8\n6 7\n6 8\n",
        )
        .unwrap();
        let (basis, rmap, vclass) = setup(&g);
        let sets: Vec<&[u32]> = basis.cycles().iter().map(|c| c.vertices()).collect();
        assert_eq!(
            sets,
            vec![&[1, 2, 5, 7][..], &[2, 3, 4, 6], &[5, 6, 7, 8], &[1, 2, 3, 6, 7]]
        );
        let five = basis.cycles()[3].clone();
        for &(u, v) in five.edges() {
            assert_eq!(rmap.get(u, v), 2);
        }
        let cs = build_c_set(&five, &basis);
        assert_eq!(cs.members.len(), 4);
        let out = check_dismantlable(&cs);
        assert!(!out.dismantlable);
        assert_eq!(out.rule, "unit_count_mismatch");
        assert_eq!(is_ck(&five, &basis, &rmap), Ok(true));
        for c in basis.cycles().iter().take(3) {
            assert_eq!(is_ck(c, &basis, &rmap), Ok(false));
        }
        let quad = basis.cycles()[0].clone();
        assert_eq!(
            check_removable_candidate(&quad, &basis, &rmap, &vclass, &g),
            Ok(Removability::Irremovable {
                rule: "blocking_cycle"
            })
        );
    }
}
