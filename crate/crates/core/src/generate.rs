//! Named graph families and a seeded G(n, p) generator. Every generator is
//! deterministic for fixed arguments, the random one for a fixed seed.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenerateError {
    #[error("unknown graph name {0:?}")]
    UnknownName(String),
    #[error("{name} takes {expected} parameter(s), got {got}")]
    BadArity {
        name: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("{name}: parameter out of range: {detail}")]
    BadParameter { name: &'static str, detail: String },
}

pub fn cycle_graph(n: u32) -> Result<Graph, GenerateError> {
    if n < 3 {
        return Err(GenerateError::BadParameter {
            name: "cycle",
            detail: format!("need n >= 3, got {n}"),
        });
    }
    let edges = (1..n).map(|i| (i, i + 1)).chain([(1, n)]);
    Ok(Graph::new(n, edges).expect("cycle edges are valid"))
}

pub fn complete_graph(n: u32) -> Result<Graph, GenerateError> {
    if n < 1 {
        return Err(GenerateError::BadParameter {
            name: "complete",
            detail: "need n >= 1".to_string(),
        });
    }
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            edges.push((u, v));
        }
    }
    Ok(Graph::new(n, edges).expect("complete edges are valid"))
}

/// The Petersen graph: outer pentagon 1..=5, spokes to 6..=10, inner
/// pentagram on 6..=10.
pub fn petersen_graph() -> Graph {
    let edges = [
        (1, 2),
        (2, 3),
        (3, 4),
        (4, 5),
        (1, 5),
        (1, 6),
        (2, 7),
        (3, 8),
        (4, 9),
        (5, 10),
        (6, 8),
        (8, 10),
        (7, 10),
        (7, 9),
        (6, 9),
    ];
    Graph::new(10, edges).expect("petersen edges are valid")
}

/// The Herschel graph: the smallest non-Hamiltonian polyhedral graph.
/// 11 vertices, 18 edges, bipartite with parts of size 6 and 5.
pub fn herschel_graph() -> Graph {
    let edges = [
        (1, 3),
        (1, 4),
        (1, 5),
        (2, 3),
        (2, 4),
        (2, 6),
        (3, 7),
        (3, 9),
        (4, 8),
        (4, 10),
        (5, 9),
        (5, 10),
        (6, 7),
        (6, 8),
        (7, 11),
        (8, 11),
        (9, 11),
        (10, 11),
    ];
    Graph::new(11, edges).expect("herschel edges are valid")
}

/// `rows x cols` grid. Vertex `(r, c)` (0-indexed) is labeled
/// `r * cols + c + 1`.
pub fn grid_graph(rows: u32, cols: u32) -> Result<Graph, GenerateError> {
    if rows < 1 || cols < 1 || rows * cols < 2 {
        return Err(GenerateError::BadParameter {
            name: "grid",
            detail: format!("need at least 2 vertices, got {rows}x{cols}"),
        });
    }
    let label = |r: u32, c: u32| r * cols + c + 1;
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                edges.push((label(r, c), label(r, c + 1)));
            }
            if r + 1 < rows {
                edges.push((label(r, c), label(r + 1, c)));
            }
        }
    }
    Ok(Graph::new(rows * cols, edges).expect("grid edges are valid"))
}

/// G(n, p): each of the `n choose 2` edges is present independently with
/// probability `p`. Same seed, same graph.
pub fn random_gnp(n: u32, p: f64, seed: u64) -> Result<Graph, GenerateError> {
    if n < 1 {
        return Err(GenerateError::BadParameter {
            name: "random_gnp",
            detail: "need n >= 1".to_string(),
        });
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(GenerateError::BadParameter {
            name: "random_gnp",
            detail: format!("need p in [0, 1], got {p}"),
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            if rng.random::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::new(n, edges).expect("gnp edges are valid"))
}

/// Dispatch by name. `params` meaning depends on the family:
/// `cycle [n]`, `complete [n]`, `petersen []`, `herschel []`,
/// `grid [rows, cols]`, `random_gnp [n, p_percent]` (seeded).
pub fn generate_named(name: &str, params: &[u32], seed: u64) -> Result<Graph, GenerateError> {
    let arity = |expected: usize, name: &'static str| {
        if params.len() == expected {
            Ok(())
        } else {
            Err(GenerateError::BadArity {
                name,
                expected,
                got: params.len(),
            })
        }
    };
    match name {
        "cycle" => {
            arity(1, "cycle")?;
            cycle_graph(params[0])
        }
        "complete" => {
            arity(1, "complete")?;
            complete_graph(params[0])
        }
        "petersen" => {
            arity(0, "petersen")?;
            Ok(petersen_graph())
        }
        "herschel" => {
            arity(0, "herschel")?;
            Ok(herschel_graph())
        }
        "grid" => {
            arity(2, "grid")?;
            grid_graph(params[0], params[1])
        }
        "random_gnp" => {
            arity(2, "random_gnp")?;
            random_gnp(params[0], params[1] as f64 / 100.0, seed)
        }
        other => Err(GenerateError::UnknownName(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::validate;

    fn two_coloring(g: &Graph) -> Option<Vec<u8>> {
        let n = g.vertex_count() as usize;
        let mut color = vec![u8::MAX; n + 1];
        color[1] = 0;
        let mut queue = std::collections::VecDeque::from([1u32]);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if color[w as usize] == u8::MAX {
                    color[w as usize] = 1 - color[v as usize];
                    queue.push_back(w);
                } else if color[w as usize] == color[v as usize] {
                    return None;
                }
            }
        }
        Some(color)
    }

    #[test]
    fn cycle_and_complete_shapes() {
        let c5 = cycle_graph(5).unwrap();
        assert_eq!(c5.edge_count(), 5);
        assert!(c5.vertices().all(|v| c5.degree(v) == 2));
        let k4 = complete_graph(4).unwrap();
        assert_eq!(k4.edge_count(), 6);
        assert!(k4.vertices().all(|v| k4.degree(v) == 3));
        assert!(cycle_graph(2).is_err());
    }

    #[test]
    fn petersen_is_cubic_and_triangle_free() {
        let g = petersen_graph();
        assert_eq!(g.vertex_count(), 10);
        assert_eq!(g.edge_count(), 15);
        assert!(g.vertices().all(|v| g.degree(v) == 3));
        for &(u, v) in g.edges() {
            for &w in g.neighbors(u) {
                if w != v {
                    assert!(!g.has_edge(w, v), "triangle {u} {v} {w}");
                }
            }
        }
        assert!(g.is_connected());
    }

    #[test]
    fn herschel_is_bipartite_with_odd_part_sizes() {
        let g = herschel_graph();
        assert_eq!(g.vertex_count(), 11);
        assert_eq!(g.edge_count(), 18);
        assert!(g.is_connected());
        let degrees: Vec<_> = g.vertices().map(|v| g.degree(v)).collect();
        assert_eq!(degrees.iter().filter(|&&d| d == 4).count(), 3);
        assert_eq!(degrees.iter().filter(|&&d| d == 3).count(), 8);
        // Unequal part sizes on 11 vertices rule out a Hamiltonian cycle.
        let color = two_coloring(&g).expect("herschel is bipartite");
        let part0 = g.vertices().filter(|&v| color[v as usize] == 0).count();
        assert!(part0 == 5 || part0 == 6);
    }

    #[test]
    fn grid_shape() {
        let g = grid_graph(3, 4).unwrap();
        assert_eq!(g.vertex_count(), 12);
        assert_eq!(g.edge_count(), 17);
        assert!(g.has_edge(1, 2));
        assert!(g.has_edge(1, 5));
        assert!(!g.has_edge(4, 5));
    }

    #[test]
    fn gnp_is_seed_deterministic() {
        let a = random_gnp(12, 0.4, 7).unwrap();
        let b = random_gnp(12, 0.4, 7).unwrap();
        let c = random_gnp(12, 0.4, 8).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c, "different seeds should give different graphs");
        assert!(validate(&a).simple);
    }

    #[test]
    fn named_dispatch() {
        assert_eq!(
            generate_named("cycle", &[6], 0).unwrap(),
            cycle_graph(6).unwrap()
        );
        assert_eq!(
            generate_named("grid", &[3, 4], 0).unwrap(),
            grid_graph(3, 4).unwrap()
        );
        assert!(matches!(
            generate_named("moebius", &[], 0),
            Err(GenerateError::UnknownName(_))
        ));
        assert!(matches!(
            generate_named("cycle", &[], 0),
            Err(GenerateError::BadArity { .. })
        ));
    }
}
