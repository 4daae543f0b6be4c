//! Named graphs with explicit embeddings, the medial construction, and a
//! small builder for genus-preserving local edits.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::embedding::{trace_faces, EmbeddingError, RotationSystem};
use crate::graph::{Graph, Vertex};

/// A graph together with one of its embeddings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddedGraph {
    pub graph: Graph,
    pub rotation: RotationSystem,
}

impl EmbeddedGraph {
    /// Builds graph and rotation from oriented face walks.
    pub fn from_faces(n: usize, faces: &[Vec<Vertex>]) -> Result<Self, EmbeddingError> {
        let mut adj = vec![Vec::new(); n];
        for f in faces {
            let k = f.len();
            for i in 0..k {
                let (u, v) = (f[i], f[(i + 1) % k]);
                if u == v {
                    return Err(EmbeddingError::BadCorner { vertex: u });
                }
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        let graph = Graph::from_adjacency(adj);
        let rotation = RotationSystem::from_faces(&graph, faces)?;
        Ok(EmbeddedGraph { graph, rotation })
    }
}

fn cyclic_search(
    g: &Graph,
    choices: &[Vec<Vec<Vertex>>],
    want_faces: usize,
) -> Option<RotationSystem> {
    let mut idx = vec![0usize; choices.len()];
    loop {
        let rot = RotationSystem::new(
            idx.iter().enumerate().map(|(v, &i)| choices[v][i].clone()).collect(),
        );
        if trace_faces(g, &rot).map(|f| f.len()) == Ok(want_faces) {
            return Some(rot);
        }
        let mut v = 0;
        loop {
            if v == idx.len() {
                return None;
            }
            idx[v] += 1;
            if idx[v] < choices[v].len() {
                break;
            }
            idx[v] = 0;
            v += 1;
        }
    }
}

/// All cyclic orders of `items`, each starting with `items[0]`.
fn cyclic_orders(items: &[Vertex]) -> Vec<Vec<Vertex>> {
    fn permute(rest: &mut Vec<Vertex>, k: usize, out: &mut Vec<Vec<Vertex>>, head: Vertex) {
        if k == rest.len() {
            let mut v = vec![head];
            v.extend_from_slice(rest);
            out.push(v);
            return;
        }
        for i in k..rest.len() {
            rest.swap(k, i);
            permute(rest, k + 1, out, head);
            rest.swap(k, i);
        }
    }
    let mut out = Vec::new();
    if items.is_empty() {
        out.push(Vec::new());
        return out;
    }
    let mut rest = items[1..].to_vec();
    permute(&mut rest, 0, &mut out, items[0]);
    out
}

/// Searches rotations (first found, in a fixed enumeration order) for an
/// embedding with the requested number of faces.
pub fn find_rotation_with_faces(g: &Graph, faces: usize) -> Option<RotationSystem> {
    let choices: Vec<_> = g.vertices().map(|v| cyclic_orders(g.neighbors(v))).collect();
    cyclic_search(g, &choices, faces)
}

pub fn petersen() -> Graph {
    let mut e = Vec::new();
    for i in 0..5 {
        e.push((i, (i + 1) % 5));
        e.push((i, i + 5));
        e.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::new(10, &e).expect("petersen edges are valid")
}

pub fn complete(n: usize) -> Graph {
    let mut e = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            e.push((u, v));
        }
    }
    Graph::new(n, &e).expect("complete graph edges are valid")
}

/// Petersen graph with a 5-face (toroidal) rotation.
pub fn petersen_torus() -> EmbeddedGraph {
    let graph = petersen();
    let rotation = find_rotation_with_faces(&graph, 5).expect("the Petersen graph is toroidal");
    EmbeddedGraph { graph, rotation }
}

/// K5 with a 5-face (toroidal) rotation.
pub fn k5_torus() -> EmbeddedGraph {
    let graph = complete(5);
    let rotation = find_rotation_with_faces(&graph, 5).expect("K5 is toroidal");
    EmbeddedGraph { graph, rotation }
}

/// The 7-vertex triangulation of the torus (K7).
pub fn k7_torus() -> EmbeddedGraph {
    let mut faces = Vec::new();
    for i in 0..7 {
        faces.push(vec![i, (i + 1) % 7, (i + 3) % 7]);
        faces.push(vec![i, (i + 3) % 7, (i + 2) % 7]);
    }
    EmbeddedGraph::from_faces(7, &faces).expect("K7 triangulates the torus")
}

/// Prism over a `k`-cycle, planar.
pub fn prism(k: usize) -> EmbeddedGraph {
    assert!(k >= 3);
    let mut faces = vec![(0..k).rev().collect::<Vec<_>>(), (k..2 * k).collect()];
    for i in 0..k {
        let j = (i + 1) % k;
        faces.push(vec![i, j, k + j, k + i]);
    }
    EmbeddedGraph::from_faces(2 * k, &faces).expect("prism faces are consistent")
}

pub fn cube() -> EmbeddedGraph {
    prism(4)
}

/// Dodecahedron, planar, girth 5.
pub fn dodecahedron() -> EmbeddedGraph {
    let o = |k: usize| k % 5;
    let a = |k: usize| 5 + k % 5;
    let b = |k: usize| 10 + k % 5;
    let i = |k: usize| 15 + k % 5;
    let mut faces = vec![(0..5).rev().map(o).collect::<Vec<_>>(), (0..5).map(i).collect()];
    for k in 0..5 {
        faces.push(vec![o(k), o(k + 1), a(k + 1), b(k), a(k)]);
        faces.push(vec![b(k), a(k + 1), b(k + 1), i(k + 1), i(k)]);
    }
    EmbeddedGraph::from_faces(20, &faces).expect("dodecahedron faces are consistent")
}

/// Square grid on the torus, `rows x cols`, both at least 3.
pub fn square_torus(rows: usize, cols: usize) -> EmbeddedGraph {
    assert!(rows >= 3 && cols >= 3);
    let at = |r: usize, c: usize| (r % rows) * cols + c % cols;
    let mut faces = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            faces.push(vec![at(r, c), at(r, c + 1), at(r + 1, c + 1), at(r + 1, c)]);
        }
    }
    EmbeddedGraph::from_faces(rows * cols, &faces).expect("square torus is consistent")
}

/// Triangulated square grid on the torus (6-regular), both sides at least 3.
pub fn triangular_torus(rows: usize, cols: usize) -> EmbeddedGraph {
    assert!(rows >= 3 && cols >= 3);
    let at = |r: usize, c: usize| (r % rows) * cols + c % cols;
    let mut faces = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            faces.push(vec![at(r, c), at(r, c + 1), at(r + 1, c + 1)]);
            faces.push(vec![at(r, c), at(r + 1, c + 1), at(r + 1, c)]);
        }
    }
    EmbeddedGraph::from_faces(rows * cols, &faces).expect("triangular torus is consistent")
}

/// Honeycomb on the torus as a brick wall; `rows` and `cols` even,
/// `rows >= 2`, `cols >= 4`.
pub fn hex_torus(rows: usize, cols: usize) -> EmbeddedGraph {
    assert!(rows >= 2 && cols >= 4 && rows.is_multiple_of(2) && cols.is_multiple_of(2));
    let at = |r: usize, c: usize| (r % rows) * cols + c % cols;
    let mut faces = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            if (r + c) % 2 == 0 {
                faces.push(vec![
                    at(r, c),
                    at(r, c + 1),
                    at(r, c + 2),
                    at(r + 1, c + 2),
                    at(r + 1, c + 1),
                    at(r + 1, c),
                ]);
            }
        }
    }
    EmbeddedGraph::from_faces(rows * cols, &faces).expect("hex torus is consistent")
}

/// Planar square grid, `rows x cols`, both at least 2. With `diagonals` every
/// square is split into two triangles.
pub fn planar_grid(rows: usize, cols: usize, diagonals: bool) -> EmbeddedGraph {
    assert!(rows >= 2 && cols >= 2);
    let at = |r: usize, c: usize| r * cols + c;
    let mut faces = Vec::new();
    for r in 0..rows - 1 {
        for c in 0..cols - 1 {
            if diagonals {
                faces.push(vec![at(r, c), at(r, c + 1), at(r + 1, c + 1)]);
                faces.push(vec![at(r, c), at(r + 1, c + 1), at(r + 1, c)]);
            } else {
                faces.push(vec![at(r, c), at(r, c + 1), at(r + 1, c + 1), at(r + 1, c)]);
            }
        }
    }
    // Outer boundary, opposite orientation to the inner faces.
    let mut outer = Vec::new();
    for c in (0..cols).rev() {
        outer.push(at(0, c));
    }
    for r in 1..rows {
        outer.push(at(r, 0));
    }
    for c in 1..cols {
        outer.push(at(rows - 1, c));
    }
    for r in (1..rows - 1).rev() {
        outer.push(at(r, cols - 1));
    }
    faces.push(outer);
    EmbeddedGraph::from_faces(rows * cols, &faces).expect("grid faces are consistent")
}

/// The medial map: one vertex per edge, adjacent when consecutive around a
/// face. Fails when the result would not be simple (vertices of degree
/// below 3).
pub fn medial(m: &EmbeddedGraph) -> Result<EmbeddedGraph, EmbeddingError> {
    let g = &m.graph;
    if let Some(v) = g.vertices().find(|&v| g.degree(v) < 3) {
        return Err(EmbeddingError::BadCorner { vertex: v });
    }
    let index: BTreeMap<(Vertex, Vertex), usize> =
        g.edges().enumerate().map(|(i, e)| (e, i)).collect();
    let edge = |u: Vertex, v: Vertex| index[&(u.min(v), u.max(v))];
    let faces = trace_faces(g, &m.rotation)?;
    let around: Vec<Vec<usize>> = g
        .vertices()
        .map(|v| m.rotation.around(v).iter().map(|&w| edge(v, w)).collect())
        .collect();
    let along: Vec<Vec<usize>> = faces
        .faces()
        .iter()
        .map(|f| (0..f.len()).map(|i| edge(f[i], f[(i + 1) % f.len()])).collect())
        .collect();
    let rev = |fs: &[Vec<usize>]| -> Vec<Vec<usize>> {
        fs.iter().map(|f| f.iter().rev().copied().collect()).collect()
    };
    let n = g.edge_count();
    let mut first: Vec<Vec<usize>> = rev(&around);
    first.extend(along.iter().cloned());
    match EmbeddedGraph::from_faces(n, &first) {
        Ok(e) => Ok(e),
        Err(_) => {
            let mut second = around.clone();
            second.extend(rev(&along));
            EmbeddedGraph::from_faces(n, &second)
        }
    }
}

/// Kagome lattice on the torus: the medial map of the honeycomb.
pub fn kagome_torus(rows: usize, cols: usize) -> EmbeddedGraph {
    medial(&hex_torus(rows, cols)).expect("honeycomb is cubic")
}

/// Icosidodecahedron: the medial map of the dodecahedron. Planar, 4-regular,
/// every vertex on two triangles, no 4-cycles.
pub fn icosidodecahedron() -> EmbeddedGraph {
    medial(&dodecahedron()).expect("dodecahedron is cubic")
}

/// Mutable embedded graph supporting edits that never raise the genus.
#[derive(Clone, Debug)]
pub struct MapBuilder {
    rot: Vec<Vec<Vertex>>,
}

impl MapBuilder {
    pub fn new(m: &EmbeddedGraph) -> Self {
        MapBuilder { rot: m.rotation.rotations().to_vec() }
    }

    pub fn vertex_count(&self) -> usize {
        self.rot.len()
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.rot[v].len()
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.rot[v]
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.rot[u].contains(&v)
    }

    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::new();
        for (u, r) in self.rot.iter().enumerate() {
            for &v in r {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out.sort_unstable();
        out
    }

    fn replace(&mut self, at: Vertex, old: Vertex, new: Vertex) {
        let i = self.rot[at].iter().position(|&x| x == old).expect("edge present");
        self.rot[at][i] = new;
    }

    /// Splits edge `uv` with a new vertex, returned.
    pub fn subdivide(&mut self, u: Vertex, v: Vertex) -> Vertex {
        let w = self.rot.len();
        self.replace(u, v, w);
        self.replace(v, u, w);
        self.rot.push(vec![u, v]);
        w
    }

    /// Adds a new vertex adjacent to both ends of edge `xw`, drawn inside the
    /// face that follows the directed edge `x -> w`. Returns the new vertex.
    pub fn add_ear(&mut self, x: Vertex, w: Vertex) -> Vertex {
        let a = self.rot.len();
        let i = self.rot[w].iter().position(|&y| y == x).expect("edge present");
        self.rot[w].insert(i + 1, a);
        let j = self.rot[x].iter().position(|&y| y == w).expect("edge present");
        self.rot[x].insert(j, a);
        self.rot.push(vec![w, x]);
        a
    }

    pub fn delete_edge(&mut self, u: Vertex, v: Vertex) {
        self.rot[u].retain(|&x| x != v);
        self.rot[v].retain(|&x| x != u);
    }

    /// Copies `other` in (ids shifted by the current vertex count) and joins
    /// `at` to `other_at` with a bridge. Returns the shift.
    pub fn attach(&mut self, other: &EmbeddedGraph, at: Vertex, other_at: Vertex) -> usize {
        let shift = self.rot.len();
        for r in other.rotation.rotations() {
            self.rot.push(r.iter().map(|&v| v + shift).collect());
        }
        self.rot[at].push(other_at + shift);
        self.rot[other_at + shift].push(at);
        shift
    }

    pub fn graph(&self) -> Graph {
        Graph::from_adjacency(self.rot.clone())
    }

    pub fn build(&self) -> EmbeddedGraph {
        EmbeddedGraph { graph: self.graph(), rotation: RotationSystem::new(self.rot.clone()) }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::genus;
    use crate::graph::{find_four_cycle, girth, triangles};

    fn genus_of(m: &EmbeddedGraph) -> usize {
        genus(&m.graph, &m.rotation).unwrap()
    }

    #[test]
    fn named_maps_have_expected_genus() {
        assert_eq!(genus_of(&cube()), 0);
        assert_eq!(genus_of(&prism(5)), 0);
        assert_eq!(genus_of(&dodecahedron()), 0);
        assert_eq!(genus_of(&icosidodecahedron()), 0);
        assert_eq!(genus_of(&planar_grid(3, 4, false)), 0);
        assert_eq!(genus_of(&planar_grid(3, 4, true)), 0);
        assert_eq!(genus_of(&petersen_torus()), 1);
        assert_eq!(genus_of(&k5_torus()), 1);
        assert_eq!(genus_of(&k7_torus()), 1);
        assert_eq!(genus_of(&square_torus(3, 4)), 1);
        assert_eq!(genus_of(&triangular_torus(3, 3)), 1);
        assert_eq!(genus_of(&hex_torus(4, 6)), 1);
        assert_eq!(genus_of(&kagome_torus(4, 6)), 1);
    }

    #[test]
    fn dodecahedron_and_its_medial() {
        let d = dodecahedron();
        assert_eq!(d.graph.edge_count(), 30);
        assert_eq!(girth(&d.graph), Some(5));
        let m = icosidodecahedron();
        assert_eq!(m.graph.vertex_count(), 30);
        assert!(m.graph.vertices().all(|v| m.graph.degree(v) == 4));
        assert_eq!(find_four_cycle(&m.graph), None);
        assert_eq!(triangles(&m.graph).len(), 20);
    }

    #[test]
    fn kagome_is_four_regular_without_four_cycles() {
        let k = kagome_torus(4, 6);
        assert_eq!(k.graph.vertex_count(), 36);
        assert!(k.graph.vertices().all(|v| k.graph.degree(v) == 4));
        assert_eq!(find_four_cycle(&k.graph), None);
    }

    #[test]
    fn k7_is_complete() {
        assert_eq!(k7_torus().graph, complete(7));
    }

    #[test]
    fn builder_edits_keep_genus() {
        let mut b = MapBuilder::new(&petersen_torus());
        let w = b.subdivide(0, 1);
        let a = b.add_ear(0, w);
        let c = b.add_ear(w, 1);
        let m = b.build();
        assert_eq!(genus_of(&m), 1);
        assert_eq!(m.graph.degree(w), 4);
        assert!(m.graph.has_edge(a, 0) && m.graph.has_edge(c, 1));
        let mut b = MapBuilder::new(&m);
        b.attach(&cube(), 3, 0);
        assert_eq!(genus_of(&b.build()), 1);
    }

    #[test]
    fn cyclic_orders_count() {
        assert_eq!(cyclic_orders(&[1, 2, 3, 4]).len(), 6);
        assert_eq!(cyclic_orders(&[1, 2, 3]).len(), 2);
    }
}
