//! Orientable embeddings given as rotation systems: face tracing, genus, and
//! the precondition report the solver and auditor rely on.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{find_four_cycle, Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EmbeddingError {
    #[error("rotation covers {found} vertices, graph has {expected}")]
    VertexCount { expected: usize, found: usize },
    #[error("rotation at vertex {vertex} is not a permutation of its neighbors")]
    NotAPermutation { vertex: Vertex },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("face list uses directed edge {from}->{to} twice")]
    DartReused { from: Vertex, to: Vertex },
    #[error("face list does not determine a single cyclic order at vertex {vertex}")]
    BadCorner { vertex: Vertex },
}

/// Cyclic order of neighbors around every vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RotationSystem {
    rotation: Vec<Vec<Vertex>>,
}

impl RotationSystem {
    pub fn new(rotation: Vec<Vec<Vertex>>) -> Self {
        RotationSystem { rotation }
    }

    /// The sorted adjacency lists read as rotations. Any graph admits it; the
    /// resulting genus is whatever it is.
    pub fn sorted(g: &Graph) -> Self {
        RotationSystem { rotation: g.vertices().map(|v| g.neighbors(v).to_vec()).collect() }
    }

    pub fn vertex_count(&self) -> usize {
        self.rotation.len()
    }

    pub fn around(&self, v: Vertex) -> &[Vertex] {
        &self.rotation[v]
    }

    pub fn rotations(&self) -> &[Vec<Vertex>] {
        &self.rotation
    }

    /// Checks that every list is a permutation of the vertex's neighbors.
    pub fn validate(&self, g: &Graph) -> Result<(), EmbeddingError> {
        if self.rotation.len() != g.vertex_count() {
            return Err(EmbeddingError::VertexCount {
                expected: g.vertex_count(),
                found: self.rotation.len(),
            });
        }
        for v in g.vertices() {
            let mut r = self.rotation[v].clone();
            r.sort_unstable();
            if r != g.neighbors(v) {
                return Err(EmbeddingError::NotAPermutation { vertex: v });
            }
        }
        Ok(())
    }

    /// Recovers the rotation whose traced faces are exactly `faces`. Each face
    /// is a closed vertex walk; consecutive entries must be adjacent and every
    /// directed edge must occur in exactly one walk.
    pub fn from_faces(g: &Graph, faces: &[Vec<Vertex>]) -> Result<Self, EmbeddingError> {
        let n = g.vertex_count();
        // succ[v][i]: successor of neighbors(v)[i] in the rotation at v.
        let mut succ: Vec<Vec<Option<Vertex>>> =
            g.vertices().map(|v| vec![None; g.degree(v)]).collect();
        for face in faces {
            let k = face.len();
            for i in 0..k {
                let prev = face[(i + k - 1) % k];
                let v = face[i];
                let next = face[(i + 1) % k];
                let idx = g
                    .neighbors(v)
                    .binary_search(&prev)
                    .map_err(|_| EmbeddingError::BadCorner { vertex: v })?;
                if !g.has_edge(v, next) {
                    return Err(EmbeddingError::BadCorner { vertex: v });
                }
                if succ[v][idx].replace(next).is_some() {
                    return Err(EmbeddingError::DartReused { from: prev, to: v });
                }
            }
        }
        let mut rotation = Vec::with_capacity(n);
        for v in 0..n {
            let nb = g.neighbors(v);
            if nb.is_empty() {
                rotation.push(Vec::new());
                continue;
            }
            let mut order = Vec::with_capacity(nb.len());
            let mut cur = nb[0];
            for _ in 0..nb.len() {
                order.push(cur);
                let idx = nb.binary_search(&cur).unwrap();
                cur = succ[v][idx].ok_or(EmbeddingError::BadCorner { vertex: v })?;
            }
            if cur != nb[0] {
                return Err(EmbeddingError::BadCorner { vertex: v });
            }
            let mut check = order.clone();
            check.sort_unstable();
            check.dedup();
            if check.len() != nb.len() {
                return Err(EmbeddingError::BadCorner { vertex: v });
            }
            rotation.push(order);
        }
        Ok(RotationSystem { rotation })
    }
}

/// Faces as closed vertex walks. Walk `w` uses the directed edges
/// `(w[i], w[i+1])` cyclically. Each face starts at its lexicographically
/// smallest directed edge and faces are sorted by that edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceSet {
    faces: Vec<Vec<Vertex>>,
}

impl FaceSet {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn faces(&self) -> &[Vec<Vertex>] {
        &self.faces
    }

    pub fn face(&self, i: usize) -> &[Vertex] {
        &self.faces[i]
    }

    /// Walk length `d(f)`.
    pub fn degree(&self, i: usize) -> usize {
        self.faces[i].len()
    }

    pub fn degree_sum(&self) -> usize {
        self.faces.iter().map(Vec::len).sum()
    }
}

/// Traces all faces of the embedding: from the directed edge `(u, v)` the
/// walk continues with `(v, w)` where `w` follows `u` in the rotation at `v`.
pub fn trace_faces(g: &Graph, rot: &RotationSystem) -> Result<FaceSet, EmbeddingError> {
    rot.validate(g)?;
    let n = g.vertex_count();
    // Dart (v, rotation[v][i]) has id offset[v] + i.
    let mut offset = vec![0usize; n + 1];
    for v in 0..n {
        offset[v + 1] = offset[v] + g.degree(v);
    }
    // pos[v][j]: position in rotation[v] of neighbors(v)[j].
    let mut pos: Vec<Vec<usize>> = g.vertices().map(|v| vec![0; g.degree(v)]).collect();
    for v in 0..n {
        for (i, &w) in rot.around(v).iter().enumerate() {
            let j = g.neighbors(v).binary_search(&w).unwrap();
            pos[v][j] = i;
        }
    }
    let position = |v: Vertex, w: Vertex| pos[v][g.neighbors(v).binary_search(&w).unwrap()];

    let mut used = vec![false; offset[n]];
    let mut faces = Vec::new();
    for v0 in 0..n {
        for i0 in 0..g.degree(v0) {
            if used[offset[v0] + i0] {
                continue;
            }
            let mut walk = Vec::new();
            let (mut u, mut i) = (v0, i0);
            loop {
                let id = offset[u] + i;
                if used[id] {
                    // Rotations are permutations, so the walk must return
                    // to its first dart before reusing any other.
                    debug_assert_eq!(id, offset[v0] + i0);
                    break;
                }
                used[id] = true;
                walk.push(u);
                let v = rot.around(u)[i];
                let d = g.degree(v);
                i = (position(v, u) + 1) % d;
                u = v;
            }
            faces.push(canonical_walk(walk));
        }
    }
    faces.sort_by_key(|a| first_dart(a));
    debug_assert_eq!(faces.iter().map(Vec::len).sum::<usize>(), 2 * g.edge_count());
    Ok(FaceSet { faces })
}

fn first_dart(walk: &[Vertex]) -> (Vertex, Vertex) {
    (walk[0], walk[1 % walk.len()])
}

fn canonical_walk(walk: Vec<Vertex>) -> Vec<Vertex> {
    let k = walk.len();
    let start = (0..k)
        .min_by_key(|&i| (walk[i], walk[(i + 1) % k]))
        .unwrap_or(0);
    let mut out = Vec::with_capacity(k);
    out.extend_from_slice(&walk[start..]);
    out.extend_from_slice(&walk[..start]);
    out
}

/// Euler genus of a connected embedding: `(2 - V + E - F) / 2`.
pub fn genus(g: &Graph, rot: &RotationSystem) -> Result<usize, EmbeddingError> {
    let faces = trace_faces(g, rot)?;
    genus_from_faces(g, &faces)
}

pub(crate) fn genus_from_faces(g: &Graph, faces: &FaceSet) -> Result<usize, EmbeddingError> {
    if !g.is_connected() {
        return Err(EmbeddingError::Disconnected);
    }
    if g.edge_count() == 0 {
        return Ok(0);
    }
    let chi = g.vertex_count() as i64 - g.edge_count() as i64 + faces.len() as i64;
    let twice = 2 - chi;
    debug_assert!(twice >= 0 && twice % 2 == 0);
    Ok((twice / 2) as usize)
}

/// What the solver and auditor need to know about an instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingReport {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub connected: bool,
    pub min_degree: Option<usize>,
    pub four_cycle: Option<[Vertex; 4]>,
    /// Present when a valid rotation of a connected graph was supplied.
    pub genus: Option<usize>,
    pub face_count: Option<usize>,
    pub rotation_error: Option<EmbeddingError>,
}

impl EmbeddingReport {
    pub fn has_four_cycle(&self) -> bool {
        self.four_cycle.is_some()
    }

    /// No 4-cycle and, when an embedding was supplied, it is valid with genus
    /// at most one.
    pub fn satisfies_preconditions(&self) -> bool {
        !self.has_four_cycle()
            && self.rotation_error.is_none()
            && self.genus.is_none_or(|g| g <= 1)
    }

    /// Like [`Self::satisfies_preconditions`] but an embedding is required.
    pub fn certifies_toroidal(&self) -> bool {
        self.satisfies_preconditions() && self.genus.is_some()
    }
}

/// Collects genus (when a rotation is given), 4-cycle presence, minimum degree
/// and connectivity. Never fails; problems land in the report.
pub fn check_preconditions(g: &Graph, rot: Option<&RotationSystem>) -> EmbeddingReport {
    let connected = g.is_connected();
    let mut report = EmbeddingReport {
        vertex_count: g.vertex_count(),
        edge_count: g.edge_count(),
        connected,
        min_degree: g.min_degree(),
        four_cycle: find_four_cycle(g),
        genus: None,
        face_count: None,
        rotation_error: None,
    };
    if let Some(rot) = rot {
        match trace_faces(g, rot) {
            Ok(faces) => {
                report.face_count = Some(faces.len());
                match genus_from_faces(g, &faces) {
                    Ok(gen) => report.genus = Some(gen),
                    Err(e) => report.rotation_error = Some(e),
                }
            }
            Err(e) => report.rotation_error = Some(e),
        }
    }
    report
}
