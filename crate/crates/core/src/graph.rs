//! Undirected simple graphs with 1-indexed vertex labels and a canonical
//! lexicographically sorted edge list. The edge list order is the index
//! space every GF(2) incidence vector in this crate is built over.

use std::fmt::Write as _;

use thiserror::Error;

pub type VertexId = u32;

/// Normalized undirected edge, always `(min, max)`.
pub type Edge = (VertexId, VertexId);

/// Returns the normalized form of an edge.
pub fn edge(u: VertexId, v: VertexId) -> Edge {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex count must be at least 1")]
    NoVertices,
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("vertex {vertex} out of range 1..={max}")]
    VertexOutOfRange { vertex: VertexId, max: VertexId },
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(VertexId, VertexId),
    #[error("no such edge {0} {1}")]
    NoSuchEdge(VertexId, VertexId),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("missing header line \"n m\"")]
    MissingHeader,
    #[error("line {line}: malformed: {text:?}")]
    Malformed { line: usize, text: String },
    #[error("line {line}: {source}")]
    BadEdge { line: usize, source: GraphError },
    #[error("header declares {expected} edges, found {found}")]
    EdgeCountMismatch { expected: usize, found: usize },
}

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: VertexId,
    edges: Vec<Edge>,
    adj: Vec<Vec<VertexId>>,
}

impl Graph {
    /// Builds a graph on vertices `1..=n` from an edge list. Edges are
    /// normalized, deduplication is an error, so is a self-loop.
    pub fn new(n: VertexId, raw: impl IntoIterator<Item = (VertexId, VertexId)>) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        let mut edges = Vec::new();
        for (u, v) in raw {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            for w in [u, v] {
                if w == 0 || w > n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, max: n });
                }
            }
            edges.push(edge(u, v));
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        let mut adj = vec![Vec::new(); n as usize + 1];
        for &(u, v) in &edges {
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { n, edges, adj })
    }

    pub fn vertex_count(&self) -> u32 {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        1..=self.n
    }

    /// Canonical edge list, sorted lexicographically. Position in this slice
    /// is the edge's index in every incidence vector.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v as usize]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v as usize].len()
    }

    pub fn min_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.edge_id(u, v).is_some()
    }

    /// Index of the edge in the canonical list.
    pub fn edge_id(&self, u: VertexId, v: VertexId) -> Option<usize> {
        self.edges.binary_search(&edge(u, v)).ok()
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n as usize + 1];
        let mut queue = std::collections::VecDeque::from([1u32]);
        seen[1] = true;
        let mut count = 0u32;
        while let Some(v) = queue.pop_front() {
            count += 1;
            for &w in self.neighbors(v) {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    queue.push_back(w);
                }
            }
        }
        count == self.n
    }

    /// Copy of the graph with one edge removed. Vertex set is unchanged.
    pub fn without_edge(&self, u: VertexId, v: VertexId) -> Result<Graph, GraphError> {
        let id = self
            .edge_id(u, v)
            .ok_or(GraphError::NoSuchEdge(edge(u, v).0, edge(u, v).1))?;
        let mut edges = self.edges.clone();
        edges.remove(id);
        Graph::new(self.n, edges)
    }

    /// Serializes in the same edge-list format `parse_graph` reads.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.n, self.edges.len());
        for (u, v) in &self.edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={}, {:?})", self.n, self.edges.len(), self.edges)
    }
}

/// Parses the edge-list format: a header line `n m`, then `m` lines `u v`.
/// Blank lines and `#` comment lines are skipped. Errors carry the 1-based
/// line number of the offending line.
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut data = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = data.next().ok_or(ParseError::MissingHeader)?;
    let mut it = header.split_whitespace();
    let (n, m) = match (it.next(), it.next(), it.next()) {
        (Some(n), Some(m), None) => match (n.parse::<u32>(), m.parse::<usize>()) {
            (Ok(n), Ok(m)) => (n, m),
            _ => {
                return Err(ParseError::Malformed {
                    line: header_line,
                    text: header.to_string(),
                })
            }
        },
        _ => {
            return Err(ParseError::Malformed {
                line: header_line,
                text: header.to_string(),
            })
        }
    };
    if n == 0 {
        return Err(ParseError::BadEdge {
            line: header_line,
            source: GraphError::NoVertices,
        });
    }

    let mut edges = Vec::with_capacity(m);
    let mut seen = std::collections::BTreeSet::new();
    for (line, text) in data {
        let mut it = text.split_whitespace();
        let (u, v) = match (it.next(), it.next(), it.next()) {
            (Some(u), Some(v), None) => match (u.parse::<u32>(), v.parse::<u32>()) {
                (Ok(u), Ok(v)) => (u, v),
                _ => {
                    return Err(ParseError::Malformed {
                        line,
                        text: text.to_string(),
                    })
                }
            },
            _ => {
                return Err(ParseError::Malformed {
                    line,
                    text: text.to_string(),
                })
            }
        };
        if u == v {
            return Err(ParseError::BadEdge {
                line,
                source: GraphError::SelfLoop(u),
            });
        }
        for w in [u, v] {
            if w == 0 || w > n {
                return Err(ParseError::BadEdge {
                    line,
                    source: GraphError::VertexOutOfRange { vertex: w, max: n },
                });
            }
        }
        let e = edge(u, v);
        if !seen.insert(e) {
            return Err(ParseError::BadEdge {
                line,
                source: GraphError::DuplicateEdge(e.0, e.1),
            });
        }
        edges.push(e);
    }
    if edges.len() != m {
        return Err(ParseError::EdgeCountMismatch {
            expected: m,
            found: edges.len(),
        });
    }
    Graph::new(n, edges).map_err(|source| ParseError::BadEdge { line: 0, source })
}

/// Structural facts about a graph that gate the solver pipeline.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct ValidationReport {
    pub vertex_count: u32,
    pub edge_count: usize,
    pub connected: bool,
    pub min_degree: usize,
    /// Simple by construction; recorded so reports are self-describing.
    pub simple: bool,
}

impl ValidationReport {
    /// A graph can only be Hamiltonian if this holds (3 or more vertices,
    /// connected, minimum degree 2).
    pub fn admissible(&self) -> bool {
        self.vertex_count >= 3 && self.connected && self.min_degree >= 2
    }
}

pub fn validate(g: &Graph) -> ValidationReport {
    ValidationReport {
        vertex_count: g.vertex_count(),
        edge_count: g.edge_count(),
        connected: g.is_connected(),
        min_degree: g.min_degree(),
        simple: true,
    }
}
