//! Triangle structures: bad vertices, the auxiliary graph `H(G)` whose nodes
//! are triangles and whose edges are bad vertices, and the search for a
//! 4-regular triangular cycle (a cycle of degree-4 vertices with a degree-4
//! apex on one of its edges and no chords).

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{find_four_cycle, triangles, Graph, Vertex};

const NONE: usize = usize::MAX;

/// Default DFS node budget for [`find_triangular_cycle_config`].
pub const DEFAULT_SEARCH_BUDGET: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StructureError {
    #[error("graph has the 4-cycle {0:?}")]
    FourCycle([Vertex; 4]),
    #[error("component is not a tree")]
    NotATree,
    #[error("tree has a node of degree {0}, above 3")]
    DegreeTooLarge(usize),
    #[error("tree has a single node")]
    SingleNode,
}

/// Number of triangles of `g` through `v`.
pub fn triangle_count_at(g: &Graph, v: Vertex) -> usize {
    let nb = g.neighbors(v);
    let mut count = 0;
    for (i, &a) in nb.iter().enumerate() {
        for &b in &nb[i + 1..] {
            if g.has_edge(a, b) {
                count += 1;
            }
        }
    }
    count
}

/// Degree-4 vertices lying on at least two triangles, ascending.
pub fn bad_vertices(g: &Graph) -> Vec<Vertex> {
    g.vertices().filter(|&v| is_bad(g, v)).collect()
}

pub fn is_bad(g: &Graph, v: Vertex) -> bool {
    g.degree(v) == 4 && triangle_count_at(g, v) >= 2
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AuxEdge {
    pub a: usize,
    pub b: usize,
    /// The bad vertex shared by both triangles.
    pub bad: Vertex,
}

/// `H(G)`: nodes are the triangles (sorted triples, lexicographic) touching a
/// bad vertex; each bad vertex joins its two triangles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuxGraph {
    triangles: Vec<[Vertex; 3]>,
    edges: Vec<AuxEdge>,
    incident: Vec<Vec<usize>>,
}

impl AuxGraph {
    pub fn node_count(&self) -> usize {
        self.triangles.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triangles.is_empty()
    }

    pub fn triangle(&self, node: usize) -> [Vertex; 3] {
        self.triangles[node]
    }

    pub fn triangles(&self) -> &[[Vertex; 3]] {
        &self.triangles
    }

    pub fn edges(&self) -> &[AuxEdge] {
        &self.edges
    }

    pub fn node_degree(&self, node: usize) -> usize {
        self.incident[node].len()
    }

    /// Edge ids at `node`.
    pub fn incident(&self, node: usize) -> &[usize] {
        &self.incident[node]
    }

    /// `H` as a plain graph on node ids.
    pub fn as_graph(&self) -> Graph {
        let mut adj = vec![Vec::new(); self.triangles.len()];
        for e in &self.edges {
            adj[e.a].push(e.b);
            adj[e.b].push(e.a);
        }
        Graph::from_adjacency(adj)
    }

    /// Connected components with their edge ids; ordered by smallest node.
    pub fn components(&self) -> Vec<(Vec<usize>, Vec<usize>)> {
        let n = self.triangles.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for root in 0..n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut nodes = vec![root];
            let mut edges = Vec::new();
            let mut queue = VecDeque::from([root]);
            while let Some(x) = queue.pop_front() {
                for &e in &self.incident[x] {
                    let AuxEdge { a, b, .. } = self.edges[e];
                    let y = if a == x { b } else { a };
                    if a == x {
                        edges.push(e);
                    }
                    if !seen[y] {
                        seen[y] = true;
                        nodes.push(y);
                        queue.push_back(y);
                    }
                }
            }
            nodes.sort_unstable();
            edges.sort_unstable();
            out.push((nodes, edges));
        }
        out
    }
}

/// Builds `H(G)`. Inputs with a 4-cycle are rejected: there a degree-4 vertex
/// can sit on triangles sharing an edge and the bad-vertex/edge bijection
/// breaks.
pub fn build_aux_graph(g: &Graph) -> Result<AuxGraph, StructureError> {
    if let Some(c) = find_four_cycle(g) {
        return Err(StructureError::FourCycle(c));
    }
    let bad = bad_vertices(g);
    let mut is_bad = vec![false; g.vertex_count()];
    for &v in &bad {
        is_bad[v] = true;
    }
    let tris: Vec<[Vertex; 3]> =
        triangles(g).into_iter().filter(|t| t.iter().any(|&v| is_bad[v])).collect();
    let mut edges = Vec::with_capacity(bad.len());
    let mut incident = vec![Vec::new(); tris.len()];
    for &v in &bad {
        let mut at: Vec<usize> = (0..tris.len()).filter(|&i| tris[i].contains(&v)).collect();
        // 4-cycle-free: a degree-4 vertex lies on at most two triangles.
        debug_assert_eq!(at.len(), 2);
        at.truncate(2);
        let id = edges.len();
        edges.push(AuxEdge { a: at[0], b: at[1], bad: v });
        incident[at[0]].push(id);
        incident[at[1]].push(id);
    }
    Ok(AuxGraph { triangles: tris, edges, incident })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ComponentKind {
    Cycle,
    Tree,
    /// Neither: contains a cycle plus something else.
    Other,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuxComponent {
    pub nodes: Vec<usize>,
    pub edges: Vec<usize>,
    pub kind: ComponentKind,
}

/// Tags each component of `h` as a cycle, a tree, or neither.
pub fn classify_components(h: &AuxGraph) -> Vec<AuxComponent> {
    h.components()
        .into_iter()
        .map(|(nodes, edges)| {
            let kind = if edges.len() + 1 == nodes.len() {
                ComponentKind::Tree
            } else if edges.len() == nodes.len() && nodes.iter().all(|&x| h.node_degree(x) == 2) {
                ComponentKind::Cycle
            } else {
                ComponentKind::Other
            };
            AuxComponent { nodes, edges, kind }
        })
        .collect()
}

/// Counts of degree-1, -2 and -3 nodes of a tree with maximum degree 3.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DegreeCensus {
    pub z1: usize,
    pub z2: usize,
    pub z3: usize,
}

impl DegreeCensus {
    /// Census of the tree on `node_count` nodes with the given edges.
    pub fn of_tree(node_count: usize, edges: &[(usize, usize)]) -> Result<Self, StructureError> {
        if node_count == 1 {
            return Err(StructureError::SingleNode);
        }
        if edges.len() + 1 != node_count {
            return Err(StructureError::NotATree);
        }
        let mut deg = vec![0usize; node_count];
        let mut adj = vec![Vec::new(); node_count];
        for &(a, b) in edges {
            deg[a] += 1;
            deg[b] += 1;
            adj[a].push(b);
            adj[b].push(a);
        }
        // n - 1 edges and connected means tree.
        let mut seen = vec![false; node_count];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    reached += 1;
                    stack.push(y);
                }
            }
        }
        if reached != node_count {
            return Err(StructureError::NotATree);
        }
        let mut census = DegreeCensus::default();
        for d in deg {
            match d {
                1 => census.z1 += 1,
                2 => census.z2 += 1,
                3 => census.z3 += 1,
                _ => return Err(StructureError::DegreeTooLarge(d)),
            }
        }
        Ok(census)
    }

    pub fn node_count(&self) -> usize {
        self.z1 + self.z2 + self.z3
    }
}

/// Census of one component of `h`; rejects components that are not trees.
pub fn degree_census(h: &AuxGraph, component: &AuxComponent) -> Result<DegreeCensus, StructureError> {
    let mut local = vec![NONE; h.node_count()];
    for (i, &x) in component.nodes.iter().enumerate() {
        local[x] = i;
    }
    let edges: Vec<(usize, usize)> = component
        .edges
        .iter()
        .map(|&e| (local[h.edges()[e].a], local[h.edges()[e].b]))
        .collect();
    DegreeCensus::of_tree(component.nodes.len(), &edges)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConfigError {
    #[error("cycle has length {0}, need at least 5")]
    CycleTooShort(usize),
    #[error("vertex {0} repeats or is out of range")]
    BadVertex(Vertex),
    #[error("vertex {vertex} has degree {degree}, not 4")]
    DegreeNotFour { vertex: Vertex, degree: usize },
    #[error("cycle vertices {0} and {1} are not adjacent")]
    MissingCycleEdge(Vertex, Vertex),
    #[error("apex is not adjacent to both v1 and v2")]
    MissingApexEdge,
    #[error("the configuration's vertex set induces {found} edges, expected {expected}")]
    Chord { found: usize, expected: usize },
    #[error("recorded external neighbors of {0} are wrong")]
    ExternalMismatch(Vertex),
}

/// A set `S = {v1..vs, u}` of degree-4 vertices inducing exactly the cycle
/// `v1..vs` plus the edges `u v1`, `u v2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TriangularCycleConfig {
    pub cycle: Vec<Vertex>,
    pub apex: Vertex,
    /// `external[i] = N(cycle[i]) \ S`: one vertex for `i < 2`, two otherwise.
    pub external: Vec<Vec<Vertex>>,
    /// `N(u) \ {v1, v2}`.
    pub apex_external: Vec<Vertex>,
}

impl TriangularCycleConfig {
    /// Fills in the external neighbor lists and validates.
    pub fn from_cycle(g: &Graph, cycle: Vec<Vertex>, apex: Vertex) -> Result<Self, ConfigError> {
        let mut in_s = vec![false; g.vertex_count()];
        for &v in cycle.iter().chain([&apex]) {
            if v >= g.vertex_count() || in_s[v] {
                return Err(ConfigError::BadVertex(v));
            }
            in_s[v] = true;
        }
        let outside = |v: Vertex| -> Vec<Vertex> {
            g.neighbors(v).iter().copied().filter(|&w| !in_s[w]).collect()
        };
        let cfg = TriangularCycleConfig {
            external: cycle.iter().map(|&v| outside(v)).collect(),
            apex_external: outside(apex),
            cycle,
            apex,
        };
        cfg.validate(g)?;
        Ok(cfg)
    }

    pub fn s(&self) -> usize {
        self.cycle.len()
    }

    /// `S`, sorted.
    pub fn vertex_set(&self) -> Vec<Vertex> {
        let mut s = self.cycle.clone();
        s.push(self.apex);
        s.sort_unstable();
        s
    }

    /// Checks every structural invariant against `g`.
    pub fn validate(&self, g: &Graph) -> Result<(), ConfigError> {
        let s = self.cycle.len();
        if s < 5 {
            return Err(ConfigError::CycleTooShort(s));
        }
        let mut in_s = vec![false; g.vertex_count()];
        for &v in self.cycle.iter().chain([&self.apex]) {
            if v >= g.vertex_count() || in_s[v] {
                return Err(ConfigError::BadVertex(v));
            }
            in_s[v] = true;
        }
        for &v in self.cycle.iter().chain([&self.apex]) {
            if g.degree(v) != 4 {
                return Err(ConfigError::DegreeNotFour { vertex: v, degree: g.degree(v) });
            }
        }
        for i in 0..s {
            let (a, b) = (self.cycle[i], self.cycle[(i + 1) % s]);
            if !g.has_edge(a, b) {
                return Err(ConfigError::MissingCycleEdge(a, b));
            }
        }
        if !g.has_edge(self.apex, self.cycle[0]) || !g.has_edge(self.apex, self.cycle[1]) {
            return Err(ConfigError::MissingApexEdge);
        }
        let induced: usize = self
            .cycle
            .iter()
            .chain([&self.apex])
            .map(|&v| g.neighbors(v).iter().filter(|&&w| in_s[w]).count())
            .sum::<usize>()
            / 2;
        if induced != s + 2 {
            return Err(ConfigError::Chord { found: induced, expected: s + 2 });
        }
        let outside = |v: Vertex| -> Vec<Vertex> {
            g.neighbors(v).iter().copied().filter(|&w| !in_s[w]).collect()
        };
        if self.external.len() != s {
            return Err(ConfigError::ExternalMismatch(self.cycle[0]));
        }
        for (i, &v) in self.cycle.iter().enumerate() {
            let mut recorded = self.external[i].clone();
            recorded.sort_unstable();
            if recorded != outside(v) {
                return Err(ConfigError::ExternalMismatch(v));
            }
        }
        let mut recorded = self.apex_external.clone();
        recorded.sort_unstable();
        if recorded != outside(self.apex) {
            return Err(ConfigError::ExternalMismatch(self.apex));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConfigSearch {
    Found(TriangularCycleConfig),
    /// The search was exhaustive and found nothing.
    NotFound,
    /// The DFS node budget ran out before the search finished.
    BudgetExhausted,
}

impl ConfigSearch {
    pub fn found(self) -> Option<TriangularCycleConfig> {
        match self {
            ConfigSearch::Found(c) => Some(c),
            _ => None,
        }
    }
}

struct Search<'a> {
    g: &'a Graph,
    budget: u64,
    nodes: u64,
    on_path: Vec<bool>,
    path: Vec<Vertex>,
}

enum Step {
    Found,
    Exhausted,
    Continue,
}

impl Search<'_> {
    /// Extends `path` (which starts `v1 v2`) to a chordless cycle of length
    /// `s` through vertices flagged in `allowed`.
    fn dfs(&mut self, s: usize, allowed: &[bool], dist: &[usize]) -> Step {
        let k = self.path.len();
        let last = self.path[k - 1];
        let v1 = self.path[0];
        if k == s {
            return if self.g.has_edge(last, v1) { Step::Found } else { Step::Continue };
        }
        for &w in self.g.neighbors(last) {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Step::Exhausted;
            }
            if !allowed[w] || self.on_path[w] {
                continue;
            }
            // From position k+1 the walk still needs s-k edges to close.
            if dist[w] == NONE || dist[w] > s - k {
                continue;
            }
            let closes = self.g.has_edge(w, v1);
            if closes != (k + 1 == s) {
                continue;
            }
            if self.path[1..k - 1].iter().any(|&p| self.g.has_edge(w, p)) {
                continue;
            }
            self.path.push(w);
            self.on_path[w] = true;
            match self.dfs(s, allowed, dist) {
                Step::Continue => {}
                done => return done,
            }
            self.on_path[w] = false;
            self.path.pop();
        }
        Step::Continue
    }
}

/// [`find_triangular_cycle_config_with`] under [`DEFAULT_SEARCH_BUDGET`].
pub fn find_triangular_cycle_config(g: &Graph) -> ConfigSearch {
    find_triangular_cycle_config_with(g, DEFAULT_SEARCH_BUDGET)
}

/// Exhaustive search for a [`TriangularCycleConfig`], shortest cycle first,
/// edges `v1 v2` in lexicographic order, apexes ascending. `budget` caps the
/// number of DFS steps.
pub fn find_triangular_cycle_config_with(g: &Graph, budget: u64) -> ConfigSearch {
    let n = g.vertex_count();
    let deg4: Vec<bool> = g.vertices().map(|v| g.degree(v) == 4).collect();
    let mut triples = Vec::new();
    for (a, b) in g.edges() {
        if deg4[a] && deg4[b] {
            for u in g.common_neighbors(a, b) {
                if deg4[u] {
                    triples.push((a, b, u));
                }
            }
        }
    }
    let four_count = deg4.iter().filter(|&&d| d).count();
    if triples.is_empty() || four_count < 6 {
        return ConfigSearch::NotFound;
    }
    // Per triple: which vertices may appear as v3..vs, and BFS distance to v1
    // through them (a lower bound used for pruning).
    let prepared: Vec<(Vec<bool>, Vec<usize>)> = triples
        .iter()
        .map(|&(v1, v2, u)| {
            let mut allowed = deg4.clone();
            allowed[u] = false;
            allowed[v1] = false;
            allowed[v2] = false;
            for &w in g.neighbors(u) {
                allowed[w] = false;
            }
            let mut dist = vec![NONE; n];
            dist[v1] = 0;
            let mut queue = VecDeque::from([v1]);
            while let Some(x) = queue.pop_front() {
                for &y in g.neighbors(x) {
                    if allowed[y] && dist[y] == NONE {
                        dist[y] = dist[x] + 1;
                        queue.push_back(y);
                    }
                }
            }
            (allowed, dist)
        })
        .collect();

    let mut search = Search { g, budget, nodes: 0, on_path: vec![false; n], path: Vec::new() };
    for s in 5..four_count {
        for (t, &(v1, v2, u)) in triples.iter().enumerate() {
            let (allowed, dist) = &prepared[t];
            search.path.clear();
            search.path.extend([v1, v2]);
            search.on_path.iter_mut().for_each(|x| *x = false);
            search.on_path[v1] = true;
            search.on_path[v2] = true;
            match search.dfs(s, allowed, dist) {
                Step::Found => {
                    let cfg = TriangularCycleConfig::from_cycle(g, search.path.clone(), u)
                        .expect("search only emits valid configurations");
                    return ConfigSearch::Found(cfg);
                }
                Step::Exhausted => return ConfigSearch::BudgetExhausted,
                Step::Continue => {}
            }
        }
    }
    ConfigSearch::NotFound
}
