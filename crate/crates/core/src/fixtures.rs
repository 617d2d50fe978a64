//! Planar fixtures with hand-supplied interior-face bases.
//!
//! Each fixture pairs a graph with the interior faces of a planar
//! embedding. The face list is itself a cycle basis, which the identity
//! checks exploit: decomposing a Hamiltonian cycle over the faces splits
//! them into inside and outside, and the inside share must account for
//! exactly vertex count minus two. The Herschel fixture is the one
//! non-Hamiltonian member and is kept separate from the Hamiltonian set.

use crate::cycle::Cycle;
use crate::graph::{Graph, VertexId};
use crate::mcb::parse_basis;

#[derive(Debug, Clone)]
pub struct PlanarFixture {
    pub name: String,
    pub graph: Graph,
    pub faces: Vec<Cycle>,
}

fn face(g: &Graph, vs: &[VertexId], name: &str) -> Cycle {
    match Cycle::from_vertex_set(g, vs) {
        Ok(c) => c,
        Err(e) => panic!("fixture {name}: face {vs:?} is not a face: {e}"),
    }
}

/// Hub vertex 1 joined to a rim cycle 2..=rim+1. Interior faces are the
/// rim triangles.
pub fn wheel_fixture(rim: u32) -> PlanarFixture {
    assert!(rim >= 3);
    let name = format!("wheel_{rim}");
    let hub = 1;
    let mut edges = Vec::new();
    for i in 2..=rim + 1 {
        edges.push((hub, i));
    }
    for i in 2..=rim {
        edges.push((i, i + 1));
    }
    edges.push((2, rim + 1));
    let graph = Graph::new(rim + 1, edges).expect("wheel builds");
    let mut faces = Vec::new();
    for i in 2..=rim {
        faces.push(face(&graph, &[hub, i, i + 1], &name));
    }
    faces.push(face(&graph, &[hub, 2, rim + 1], &name));
    PlanarFixture { name, graph, faces }
}

/// Outer cycle 1..=k, inner cycle k+1..=2k, rungs (i, k+i). Interior
/// faces are the inner polygon and the k side quadrilaterals.
pub fn prism_fixture(k: u32) -> PlanarFixture {
    assert!(k >= 3);
    let name = format!("prism_{k}");
    let mut edges = Vec::new();
    for i in 1..=k {
        let next = if i == k { 1 } else { i + 1 };
        edges.push((i, next));
        edges.push((k + i, k + next));
        edges.push((i, k + i));
    }
    let graph = Graph::new(2 * k, edges).expect("prism builds");
    let inner: Vec<VertexId> = (k + 1..=2 * k).collect();
    let mut faces = vec![face(&graph, &inner, &name)];
    for i in 1..=k {
        let next = if i == k { 1 } else { i + 1 };
        faces.push(face(&graph, &[i, next, k + i, k + next], &name));
    }
    PlanarFixture { name, graph, faces }
}

/// Outer cycle 1..=k, inner cycle k+1..=2k, inner vertex k+i joined to
/// outer i and its successor. Interior faces are the inner polygon and
/// the 2k triangles of the zigzag band.
pub fn antiprism_fixture(k: u32) -> PlanarFixture {
    assert!(k >= 3);
    let name = format!("antiprism_{k}");
    let mut edges = Vec::new();
    for i in 1..=k {
        let next = if i == k { 1 } else { i + 1 };
        edges.push((i, next));
        edges.push((k + i, k + next));
        edges.push((i, k + i));
        edges.push((next, k + i));
    }
    let graph = Graph::new(2 * k, edges).expect("antiprism builds");
    let inner: Vec<VertexId> = (k + 1..=2 * k).collect();
    let mut faces = vec![face(&graph, &inner, &name)];
    for i in 1..=k {
        let next = if i == k { 1 } else { i + 1 };
        let inner_next = if i == k { k + 1 } else { k + i + 1 };
        faces.push(face(&graph, &[i, next, k + i], &name));
        faces.push(face(&graph, &[next, k + i, inner_next], &name));
    }
    PlanarFixture { name, graph, faces }
}

/// Row-major grid, vertex r*cols+c+1. Interior faces are the unit
/// squares.
pub fn grid_fixture(rows: u32, cols: u32) -> PlanarFixture {
    assert!(rows >= 2 && cols >= 2);
    let name = format!("grid_{rows}x{cols}");
    let graph = crate::generate::grid_graph(rows, cols).expect("grid builds");
    let at = |r: u32, c: u32| r * cols + c + 1;
    let mut faces = Vec::new();
    for r in 0..rows - 1 {
        for c in 0..cols - 1 {
            faces.push(face(
                &graph,
                &[at(r, c), at(r, c + 1), at(r + 1, c), at(r + 1, c + 1)],
                &name,
            ));
        }
    }
    PlanarFixture { name, graph, faces }
}

/// Central hexagon 1..=6 with six disjoint hexagonal petals, each petal
/// sharing one hexagon edge and adding a four-vertex outer path. The
/// petals' outer boundary is the graph's unique Hamiltonian cycle.
pub fn flower_fixture() -> PlanarFixture {
    let name = "flower".to_string();
    let mut edges = Vec::new();
    for i in 0..6u32 {
        edges.push((i + 1, (i + 1) % 6 + 1));
    }
    for i in 0..6u32 {
        let u = i + 1;
        let w = (i + 1) % 6 + 1;
        let a = 7 + 4 * i;
        edges.push((u, a));
        edges.push((a, a + 1));
        edges.push((a + 1, a + 2));
        edges.push((a + 2, a + 3));
        edges.push((a + 3, w));
    }
    let graph = Graph::new(30, edges).expect("flower builds");
    let mut faces = vec![face(&graph, &[1, 2, 3, 4, 5, 6], &name)];
    for i in 0..6u32 {
        let u = i + 1;
        let w = (i + 1) % 6 + 1;
        let a = 7 + 4 * i;
        faces.push(face(&graph, &[u, w, a, a + 1, a + 2, a + 3], &name));
    }
    PlanarFixture { name, graph, faces }
}

/// The Herschel graph with its eight quadrilateral interior faces. The
/// only fixture here that is not Hamiltonian.
pub fn herschel_fixture() -> PlanarFixture {
    let graph = crate::generate::herschel_graph();
    let basis = parse_basis(&graph, include_str!("../fixtures/herschel_faces.txt"))
        .expect("committed face list is a basis");
    PlanarFixture {
        name: "herschel".to_string(),
        graph,
        faces: basis.cycles().to_vec(),
    }
}

/// The Hamiltonian face-basis corpus: wheels, prisms, antiprisms, grids,
/// and the flower.
pub fn planar_fixtures() -> Vec<PlanarFixture> {
    let mut out = Vec::new();
    for rim in 4..=9 {
        out.push(wheel_fixture(rim));
    }
    for k in 3..=8 {
        out.push(prism_fixture(k));
    }
    for k in 3..=6 {
        out.push(antiprism_fixture(k));
    }
    for cols in 3..=7 {
        out.push(grid_fixture(2, cols));
    }
    out.push(grid_fixture(3, 4));
    out.push(grid_fixture(4, 4));
    out.push(flower_fixture());
    out
}
