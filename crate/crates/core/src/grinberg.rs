//! The counting gate. A Hamiltonian cycle splits a cycle basis into the
//! cycles used to compose it and the rest; counting orders on the composing
//! side must satisfy `sum (order - 2) * count = |V| - 2`. Enumerating the
//! bounded nonnegative solutions of that equation over the basis histogram
//! yields the candidate count vectors the deletion pipeline works through;
//! no solutions at all is a sound non-Hamiltonicity verdict.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::bits::Gf2Decomposer;
use crate::cycle::Cycle;
use crate::graph::Graph;
use crate::mcb::{cycle_bits, BasisError, CycleBasis};

/// Cycle count per order. Keys are orders (at least 3), values are counts.
pub type OrderHistogram = BTreeMap<usize, usize>;

/// Right-hand side of the counting identity: `|V| - 2`.
pub fn grinberg_rhs(g: &Graph) -> i64 {
    g.vertex_count() as i64 - 2
}

/// A choice of how many cycles of each order go on the composing side.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct CountVector {
    counts: OrderHistogram,
}

impl CountVector {
    pub fn new(counts: OrderHistogram) -> Self {
        let counts = counts.into_iter().filter(|&(_, c)| c > 0).collect();
        CountVector { counts }
    }

    pub fn counts(&self) -> &OrderHistogram {
        &self.counts
    }

    pub fn get(&self, order: usize) -> usize {
        self.counts.get(&order).copied().unwrap_or(0)
    }

    /// `sum (order - 2) * count`.
    pub fn value(&self) -> i64 {
        self.counts
            .iter()
            .map(|(&o, &c)| (o as i64 - 2) * c as i64)
            .sum()
    }

    /// Total number of cycles counted.
    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }
}

/// Output of [`enumerate_count_solutions`]: the solutions found, and
/// whether the cap cut the enumeration short.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumeration {
    pub vectors: Vec<CountVector>,
    pub truncated: bool,
}

/// All count vectors `f` with `0 <= f[o] <= histogram[o]` and
/// `sum (o - 2) * f[o] = rhs`, in ascending lexicographic order with the
/// largest order as the most significant position. At most `cap` solutions
/// are returned; `truncated` reports whether more exist.
pub fn enumerate_count_solutions(histogram: &OrderHistogram, rhs: i64, cap: usize) -> Enumeration {
    let mut orders: Vec<(usize, usize)> = histogram
        .iter()
        .filter(|&(&o, &c)| o >= 3 && c > 0)
        .map(|(&o, &c)| (o, c))
        .collect();
    orders.sort_unstable_by(|a, b| b.0.cmp(&a.0));
    // Suffix maxima let the search prune branches that can no longer reach
    // the target.
    let mut suffix_max = vec![0i64; orders.len() + 1];
    for i in (0..orders.len()).rev() {
        let (o, c) = orders[i];
        suffix_max[i] = suffix_max[i + 1] + (o as i64 - 2) * c as i64;
    }
    let mut vectors = Vec::new();
    let mut truncated = false;
    let mut chosen = Vec::with_capacity(orders.len());
    search(
        &orders,
        &suffix_max,
        0,
        rhs,
        cap,
        &mut chosen,
        &mut vectors,
        &mut truncated,
    );
    Enumeration { vectors, truncated }
}

#[allow(clippy::too_many_arguments)]
fn search(
    orders: &[(usize, usize)],
    suffix_max: &[i64],
    at: usize,
    remaining: i64,
    cap: usize,
    chosen: &mut Vec<(usize, usize)>,
    out: &mut Vec<CountVector>,
    truncated: &mut bool,
) {
    if remaining < 0 || remaining > suffix_max[at] {
        return;
    }
    if at == orders.len() {
        debug_assert_eq!(remaining, 0);
        if out.len() == cap {
            *truncated = true;
            return;
        }
        out.push(CountVector::new(chosen.iter().copied().collect()));
        return;
    }
    let (order, bound) = orders[at];
    let per = order as i64 - 2;
    for count in 0..=bound {
        if *truncated {
            return;
        }
        let used = per * count as i64;
        if used > remaining {
            break;
        }
        chosen.push((order, count));
        search(
            orders,
            suffix_max,
            at + 1,
            remaining - used,
            cap,
            chosen,
            out,
            truncated,
        );
        chosen.pop();
    }
}

/// A split of a basis into the cycles composing a candidate Hamiltonian
/// cycle and the rest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrinbergPartition {
    pub solution: Vec<Cycle>,
    pub co_solution: Vec<Cycle>,
}

impl GrinbergPartition {
    /// Splits `basis` by membership of each index in `selected`.
    pub fn from_selection(basis: &CycleBasis, selected: &[usize]) -> Self {
        let mut solution = Vec::new();
        let mut co_solution = Vec::new();
        for (i, c) in basis.cycles().iter().enumerate() {
            if selected.binary_search(&i).is_ok() {
                solution.push(c.clone());
            } else {
                co_solution.push(c.clone());
            }
        }
        GrinbergPartition {
            solution,
            co_solution,
        }
    }

    /// Orders counted over the composing side.
    pub fn count_vector(&self) -> CountVector {
        let mut counts = OrderHistogram::new();
        for c in &self.solution {
            *counts.entry(c.order()).or_insert(0) += 1;
        }
        CountVector::new(counts)
    }
}

/// Whether the partition's composing side satisfies the counting identity
/// `sum (order - 2) = |V| - 2` for `g`.
pub fn check_necessary_condition(partition: &GrinbergPartition, g: &Graph) -> bool {
    partition.count_vector().value() == grinberg_rhs(g)
}

/// Expresses `target` in the basis and returns the induced partition:
/// the cycles with coordinate 1 compose `target`, the rest do not. `None`
/// when `target` is outside the span.
pub fn partition_from_cycle(
    g: &Graph,
    basis: &CycleBasis,
    target: &Cycle,
) -> Result<Option<GrinbergPartition>, BasisError> {
    let mut decomposer = Gf2Decomposer::new();
    for c in basis.cycles() {
        decomposer.insert(&cycle_bits(g, c)?);
    }
    let Some(selected) = decomposer.solve(&cycle_bits(g, target)?) else {
        return Ok(None);
    };
    Ok(Some(GrinbergPartition::from_selection(basis, &selected)))
}

/// Outcome of the no-solution screen over a basis histogram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NoSolutionScreen {
    /// The counting equation has no solutions at all. Exact for face
    /// bases of planar graphs; for a general minimum basis a cycle's
    /// composing side can overshoot the target by an even amount, so an
    /// empty solution set does not rule out a Hamiltonian cycle.
    NoSolutions,
    HasSolutions { count: usize, truncated: bool },
}

/// Runs the counting equation over the basis order histogram.
pub fn screen_no_solution(g: &Graph, basis: &CycleBasis, cap: usize) -> NoSolutionScreen {
    let e = enumerate_count_solutions(basis.order_histogram(), grinberg_rhs(g), cap);
    if e.vectors.is_empty() {
        NoSolutionScreen::NoSolutions
    } else {
        NoSolutionScreen::HasSolutions {
            count: e.vectors.len(),
            truncated: e.truncated,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{cycle_graph, herschel_graph, petersen_graph};
    use crate::mcb::horton_mcb;

    fn hist(pairs: &[(usize, usize)]) -> OrderHistogram {
        pairs.iter().copied().collect()
    }

    fn vectors(e: &Enumeration) -> Vec<Vec<(usize, usize)>> {
        e.vectors
            .iter()
            .map(|v| v.counts().iter().map(|(&o, &c)| (o, c)).collect())
            .collect()
    }

    #[test]
    fn rhs_is_vertex_count_minus_two() {
        assert_eq!(grinberg_rhs(&cycle_graph(5).unwrap()), 3);
        assert_eq!(grinberg_rhs(&petersen_graph()), 8);
        assert_eq!(grinberg_rhs(&herschel_graph()), 9);
    }

    #[test]
    fn enumeration_order_is_lexicographic_by_descending_order() {
        let e = enumerate_count_solutions(&hist(&[(3, 2), (4, 2)]), 4, 100);
        assert!(!e.truncated);
        assert_eq!(vectors(&e), vec![vec![(3, 2), (4, 1)], vec![(4, 2)]]);
    }

    #[test]
    fn enumeration_respects_bounds_and_rhs() {
        let e = enumerate_count_solutions(&hist(&[(3, 3)]), 4, 100);
        assert!(e.vectors.is_empty());
        let e = enumerate_count_solutions(&hist(&[(3, 3)]), 2, 100);
        assert_eq!(vectors(&e), vec![vec![(3, 2)]]);
        let e = enumerate_count_solutions(&hist(&[(5, 6)]), 8, 100);
        assert!(e.vectors.is_empty(), "3 does not divide 8");
        let e = enumerate_count_solutions(&hist(&[(4, 8)]), 9, 100);
        assert!(e.vectors.is_empty(), "2 does not divide 9");
    }

    #[test]
    fn negative_and_zero_rhs() {
        let e = enumerate_count_solutions(&hist(&[(3, 2)]), -1, 100);
        assert!(e.vectors.is_empty());
        let e = enumerate_count_solutions(&hist(&[(3, 2)]), 0, 100);
        assert_eq!(e.vectors.len(), 1);
        assert_eq!(e.vectors[0].total(), 0);
    }

    #[test]
    fn cap_truncates_and_reports() {
        let h = hist(&[(3, 10), (4, 10), (5, 10)]);
        let full = enumerate_count_solutions(&h, 10, 10_000);
        assert!(!full.truncated);
        assert_eq!(full.vectors.len(), 14);
        let capped = enumerate_count_solutions(&h, 10, 5);
        assert!(capped.truncated);
        assert_eq!(capped.vectors.len(), 5);
        assert_eq!(capped.vectors[..], full.vectors[..5]);
    }

    #[test]
    fn brute_force_box_agreement_small() {
        let h = hist(&[(3, 2), (4, 1), (6, 2)]);
        let rhs = 6;
        let fast = enumerate_count_solutions(&h, rhs, 10_000);
        let mut slow = Vec::new();
        for f3 in 0..=2usize {
            for f4 in 0..=1usize {
                for f6 in 0..=2usize {
                    if (f3 + 2 * f4 + 4 * f6) as i64 == rhs {
                        slow.push(CountVector::new(hist(&[(3, f3), (4, f4), (6, f6)])));
                    }
                }
            }
        }
        let mut fast_set = fast.vectors.clone();
        fast_set.sort();
        slow.sort();
        assert_eq!(fast_set, slow);
    }

    #[test]
    fn partition_checks_the_identity() {
        let g = cycle_graph(6).unwrap();
        let basis = horton_mcb(&g).unwrap();
        let all = GrinbergPartition::from_selection(&basis, &[0]);
        assert!(check_necessary_condition(&all, &g));
        let none = GrinbergPartition::from_selection(&basis, &[]);
        assert!(!check_necessary_condition(&none, &g));
        assert_eq!(all.count_vector().get(6), 1);
    }

    #[test]
    fn decomposition_recovers_selection() {
        let g = crate::generate::complete_graph(4).unwrap();
        let basis = horton_mcb(&g).unwrap();
        // XOR of the triangles 123 and 124 is the square 1-3-2-4.
        let sum = crate::cycle::gf2_sum([&basis.cycles()[0], &basis.cycles()[1]]);
        let square = sum.cycle.unwrap();
        let p = partition_from_cycle(&g, &basis, &square).unwrap().unwrap();
        assert_eq!(p.solution.len(), 2);
        assert_eq!(p.co_solution.len(), 1);
        assert_eq!(p.count_vector().get(3), 2);
    }

    #[test]
    fn screens() {
        let g = petersen_graph();
        let basis = horton_mcb(&g).unwrap();
        assert_eq!(
            screen_no_solution(&g, &basis, 10_000),
            NoSolutionScreen::NoSolutions
        );
        let c6 = cycle_graph(6).unwrap();
        let b6 = horton_mcb(&c6).unwrap();
        assert_eq!(
            screen_no_solution(&c6, &b6, 10_000),
            NoSolutionScreen::HasSolutions {
                count: 1,
                truncated: false
            }
        );
    }
}
