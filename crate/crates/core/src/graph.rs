//! Simple undirected graphs with dense vertex ids and the structural queries
//! the rest of the crate is built on.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Vertex id, dense in `0..n`.
pub type Vertex = usize;

const NONE: usize = usize::MAX;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("edge #{index}: loop at vertex {vertex}")]
    Loop { index: usize, vertex: Vertex },
    #[error("edge #{index}: vertex {vertex} out of range (graph has {vertex_count} vertices)")]
    OutOfRange { index: usize, vertex: Vertex, vertex_count: usize },
    #[error("edge #{index}: duplicate edge {u}-{v}")]
    Duplicate { index: usize, u: Vertex, v: Vertex },
}

/// A finite simple graph. Adjacency lists are kept sorted, so every
/// traversal in the crate is deterministic.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting loops, out-of-range ids and
    /// repeated edges (in either orientation).
    pub fn new(vertex_count: usize, edges: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); vertex_count];
        for (index, &(u, v)) in edges.iter().enumerate() {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(GraphError::OutOfRange { index, vertex: w, vertex_count });
                }
            }
            if u == v {
                return Err(GraphError::Loop { index, vertex: u });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in adj.iter_mut() {
            list.sort_unstable();
        }
        // Find the first duplicate in input order so the error names it.
        if adj.iter().any(|l| l.windows(2).any(|w| w[0] == w[1])) {
            let mut seen = BTreeMap::new();
            for (index, &(u, v)) in edges.iter().enumerate() {
                let key = (u.min(v), u.max(v));
                if seen.insert(key, index).is_some() {
                    return Err(GraphError::Duplicate { index, u, v });
                }
            }
        }
        Ok(Graph { adj, edge_count: edges.len() })
    }

    /// A graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], edge_count: 0 }
    }

    /// Builds from adjacency lists that are already symmetric and loop-free.
    /// Lists are sorted and de-duplicated here.
    pub(crate) fn from_adjacency(mut adj: Vec<Vec<Vertex>>) -> Self {
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
        }
        let edge_count = adj.iter().map(Vec::len).sum::<usize>() / 2;
        debug_assert!(adj
            .iter()
            .enumerate()
            .all(|(v, l)| l.iter().all(|&w| w != v && adj[w].binary_search(&v).is_ok())));
        Graph { adj, edge_count }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> core::ops::Range<Vertex> {
        0..self.adj.len()
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.adj.len() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, l)| l.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.adj.iter().map(Vec::len).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.adj.iter().map(Vec::len).max()
    }

    /// Number of common neighbors of `u` and `v`.
    pub fn common_neighbors(&self, u: Vertex, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        let (a, b) = (&self.adj[u], &self.adj[v]);
        a.iter().copied().filter(move |w| b.binary_search(w).is_ok())
    }

    /// Subgraph induced by `keep` (sorted, distinct). Vertex `i` of the result
    /// is `keep[i]` of `self`.
    pub fn induced(&self, keep: &[Vertex]) -> Graph {
        debug_assert!(keep.windows(2).all(|w| w[0] < w[1]));
        let mut index = vec![NONE; self.adj.len()];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let adj = keep
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter_map(|&w| (index[w] != NONE).then_some(index[w]))
                    .collect()
            })
            .collect();
        Graph::from_adjacency(adj)
    }

    /// Deletes the vertices flagged in `removed`; returns the remaining graph
    /// and the old id of every new vertex.
    pub fn without(&self, removed: &[bool]) -> (Graph, Vec<Vertex>) {
        let keep: Vec<Vertex> = self.vertices().filter(|&v| !removed[v]).collect();
        (self.induced(&keep), keep)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let n = self.adj.len();
        let mut comp = vec![NONE; n];
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for root in 0..n {
            if comp[root] != NONE {
                continue;
            }
            let id = out.len();
            let mut members = vec![root];
            comp[root] = id;
            stack.push(root);
            while let Some(v) = stack.pop() {
                for &w in &self.adj[v] {
                    if comp[w] == NONE {
                        comp[w] = id;
                        members.push(w);
                        stack.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.adj.len() <= 1 || self.components().len() == 1
    }

    /// True when the graph has no cycle.
    pub fn is_forest(&self) -> bool {
        self.edge_count + self.components().len() == self.adj.len()
    }
}

/// One of the two forest classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Color {
    One,
    Two,
}

impl Color {
    pub const BOTH: [Color; 2] = [Color::One, Color::Two];

    pub fn other(self) -> Color {
        match self {
            Color::One => Color::Two,
            Color::Two => Color::One,
        }
    }

    /// `1` or `2`.
    pub fn number(self) -> u8 {
        match self {
            Color::One => 1,
            Color::Two => 2,
        }
    }

    pub fn from_number(c: u8) -> Option<Color> {
        match c {
            1 => Some(Color::One),
            2 => Some(Color::Two),
            _ => None,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

/// A partial map from vertices to {1, 2}. It is good when neither color
/// class induces a cycle; see [`find_monochromatic_cycle`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwoColoring {
    colors: Vec<Option<Color>>,
}

impl TwoColoring {
    /// Uncolored map over `n` vertices.
    pub fn new(n: usize) -> Self {
        TwoColoring { colors: vec![None; n] }
    }

    pub fn from_colors(colors: Vec<Option<Color>>) -> Self {
        TwoColoring { colors }
    }

    /// Number of vertices the map ranges over (colored or not).
    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn get(&self, v: Vertex) -> Option<Color> {
        self.colors.get(v).copied().flatten()
    }

    pub fn set(&mut self, v: Vertex, c: Color) {
        self.colors[v] = Some(c);
    }

    pub fn clear(&mut self, v: Vertex) {
        self.colors[v] = None;
    }

    pub fn is_colored(&self, v: Vertex) -> bool {
        self.get(v).is_some()
    }

    pub fn is_total(&self) -> bool {
        self.colors.iter().all(Option::is_some)
    }

    pub fn colored_count(&self) -> usize {
        self.colors.iter().filter(|c| c.is_some()).count()
    }

    pub fn colors(&self) -> &[Option<Color>] {
        &self.colors
    }

    /// Vertices of color `c`, ascending.
    pub fn class(&self, c: Color) -> Vec<Vertex> {
        (0..self.colors.len()).filter(|&v| self.colors[v] == Some(c)).collect()
    }

    /// Swaps the two colors everywhere. Goodness is preserved.
    pub fn swap_colors(&mut self) {
        for c in self.colors.iter_mut().flatten() {
            *c = c.other();
        }
    }

    pub fn swapped(&self) -> Self {
        let mut out = self.clone();
        out.swap_colors();
        out
    }
}

/// A cycle whose vertices all carry the same color.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonochromaticCycle {
    pub color: Color,
    pub cycle: Vec<Vertex>,
}

/// Builds a graph; see [`Graph::new`].
pub fn build_graph(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Graph, GraphError> {
    Graph::new(n, edges)
}

/// Some 4-cycle `[a, w, b, w']` (consecutive vertices adjacent, closing
/// `w'`-`a`), or `None`. Two vertices with two common neighbors certify one.
pub fn find_four_cycle(g: &Graph) -> Option<[Vertex; 4]> {
    let mut middle: BTreeMap<(Vertex, Vertex), Vertex> = BTreeMap::new();
    for w in g.vertices() {
        let nb = g.neighbors(w);
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                if let Some(&w2) = middle.get(&(a, b)) {
                    return Some([a, w, b, w2]);
                }
                middle.insert((a, b), w);
            }
        }
    }
    None
}

/// Length of a shortest cycle, `None` for forests.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.vertex_count();
    let mut best: Option<usize> = None;
    let mut dist = vec![NONE; n];
    let mut parent = vec![NONE; n];
    let mut queue = Vec::with_capacity(n);
    for root in 0..n {
        for &v in &queue {
            dist[v] = NONE;
            parent[v] = NONE;
        }
        queue.clear();
        dist[root] = 0;
        queue.push(root);
        let mut head = 0;
        'bfs: while head < queue.len() {
            let v = queue[head];
            head += 1;
            if let Some(b) = best {
                // No shorter cycle can close beyond this depth.
                if 2 * dist[v] + 1 >= b {
                    break 'bfs;
                }
            }
            for &w in g.neighbors(v) {
                if dist[w] == NONE {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push(w);
                } else if parent[v] != w {
                    let len = dist[v] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

/// All triangles as sorted triples, in lexicographic order.
pub fn triangles(g: &Graph) -> Vec<[Vertex; 3]> {
    let mut out = Vec::new();
    for u in g.vertices() {
        let nb = g.neighbors(u);
        let start = nb.partition_point(|&v| v <= u);
        for (i, &v) in nb[start..].iter().enumerate() {
            for &w in &nb[start + i + 1..] {
                if g.has_edge(v, w) {
                    out.push([u, v, w]);
                }
            }
        }
    }
    out
}

/// A cycle in the subgraph induced by one color class, if any. The coloring
/// is good exactly when this returns `None`. Uncolored vertices are ignored.
pub fn find_monochromatic_cycle(g: &Graph, f: &TwoColoring) -> Option<MonochromaticCycle> {
    let n = g.vertex_count();
    let mut parent = vec![NONE; n];
    let mut visited = vec![false; n];
    let mut stack: Vec<(Vertex, usize)> = Vec::new();
    for color in Color::BOTH {
        let in_class = |v: Vertex| f.get(v) == Some(color);
        for root in 0..n {
            if visited[root] || !in_class(root) {
                continue;
            }
            visited[root] = true;
            stack.push((root, 0));
            while let Some(top) = stack.last_mut() {
                let (v, idx) = *top;
                let nb = g.neighbors(v);
                if idx == nb.len() {
                    stack.pop();
                    continue;
                }
                top.1 += 1;
                let w = nb[idx];
                if !in_class(w) || w == parent[v] {
                    continue;
                }
                if visited[w] {
                    // Undirected DFS has no cross edges: w is an ancestor.
                    let mut cycle = vec![v];
                    let mut x = v;
                    while x != w {
                        x = parent[x];
                        cycle.push(x);
                    }
                    cycle.reverse();
                    return Some(MonochromaticCycle { color, cycle });
                }
                visited[w] = true;
                parent[w] = v;
                stack.push((w, 0));
            }
        }
    }
    None
}

/// Whether `f` is good on `g`.
pub fn is_good(g: &Graph, f: &TwoColoring) -> bool {
    find_monochromatic_cycle(g, f).is_none()
}

/// Maximal 2-connected subgraphs (and bridges, and isolated vertices) with
/// the cut vertices joining them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Each block sorted; blocks in lexicographic order.
    pub blocks: Vec<Vec<Vertex>>,
    /// Sorted.
    pub cut_vertices: Vec<Vertex>,
}

impl BlockDecomposition {
    /// Indices of the blocks containing `v`.
    pub fn blocks_containing(&self, v: Vertex) -> Vec<usize> {
        (0..self.blocks.len())
            .filter(|&b| self.blocks[b].binary_search(&v).is_ok())
            .collect()
    }
}

/// Biconnected decomposition (Hopcroft–Tarjan, iterative).
pub fn block_decomposition(g: &Graph) -> BlockDecomposition {
    let n = g.vertex_count();
    let mut disc = vec![NONE; n];
    let mut low = vec![0usize; n];
    let mut time = 0usize;
    let mut blocks: Vec<Vec<Vertex>> = Vec::new();
    let mut edge_stack: Vec<(Vertex, Vertex)> = Vec::new();
    // (vertex, parent, next neighbor index)
    let mut stack: Vec<(Vertex, Vertex, usize)> = Vec::new();

    for root in 0..n {
        if disc[root] != NONE {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        if g.degree(root) == 0 {
            blocks.push(vec![root]);
            continue;
        }
        stack.push((root, NONE, 0));
        while let Some(top) = stack.last_mut() {
            let (v, p, idx) = *top;
            if idx < g.degree(v) {
                top.2 += 1;
                let w = g.neighbors(v)[idx];
                if disc[w] == NONE {
                    edge_stack.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, v, 0));
                } else if w != p && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
                continue;
            }
            stack.pop();
            if p == NONE {
                continue;
            }
            low[p] = low[p].min(low[v]);
            if low[v] >= disc[p] {
                let mut block = Vec::new();
                while let Some((a, b)) = edge_stack.pop() {
                    block.push(a);
                    block.push(b);
                    if (a, b) == (p, v) {
                        break;
                    }
                }
                block.sort_unstable();
                block.dedup();
                blocks.push(block);
            }
        }
    }
    blocks.sort();
    let mut membership = vec![0usize; n];
    for b in &blocks {
        for &v in b {
            membership[v] += 1;
        }
    }
    let cut_vertices = (0..n).filter(|&v| membership[v] >= 2).collect();
    BlockDecomposition { blocks, cut_vertices }
}

/// Vertices in the order a min-degree peeling removes them, and the largest
/// degree seen at removal time (the degeneracy).
pub fn degeneracy_order(g: &Graph) -> (Vec<Vertex>, usize) {
    let n = g.vertex_count();
    let mut deg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut worst = 0;
    // Buckets keyed by current degree; stale entries are skipped.
    let maxd = g.max_degree().unwrap_or(0);
    let mut buckets: Vec<Vec<Vertex>> = vec![Vec::new(); maxd + 1];
    for v in (0..n).rev() {
        buckets[deg[v]].push(v);
    }
    let mut d = 0;
    while order.len() < n {
        d = d.min(maxd);
        let Some(v) = buckets[d].pop() else {
            d += 1;
            continue;
        };
        if removed[v] || deg[v] != d {
            continue;
        }
        removed[v] = true;
        worst = worst.max(d);
        order.push(v);
        for &w in g.neighbors(v) {
            if !removed[w] {
                deg[w] -= 1;
                buckets[deg[w]].push(w);
            }
        }
        d = d.saturating_sub(1);
    }
    (order, worst)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn petersen() -> Graph {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::new(10, &e).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut e = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                e.push((u, v));
            }
        }
        Graph::new(n, &e).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &e).unwrap()
    }

    #[test]
    fn triangle_degrees() {
        let g = build_graph(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(g.vertices().all(|v| g.degree(v) == 2));
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn rejects_malformed_edges() {
        assert_eq!(build_graph(2, &[(0, 0)]), Err(GraphError::Loop { index: 0, vertex: 0 }));
        assert!(matches!(
            build_graph(2, &[(0, 2)]),
            Err(GraphError::OutOfRange { vertex: 2, .. })
        ));
        assert_eq!(
            build_graph(3, &[(0, 1), (1, 2), (1, 0)]),
            Err(GraphError::Duplicate { index: 2, u: 1, v: 0 })
        );
    }

    #[test]
    fn petersen_census() {
        let g = petersen();
        assert_eq!(g.edge_count(), 15);
        assert!(g.vertices().all(|v| g.degree(v) == 3));
        assert_eq!(find_four_cycle(&g), None);
        assert_eq!(girth(&g), Some(5));
        assert!(triangles(&g).is_empty());
    }

    #[test]
    fn four_cycles() {
        let c4 = cycle(4);
        let w = find_four_cycle(&c4).unwrap();
        let mut sorted = w;
        sorted.sort();
        assert_eq!(sorted, [0, 1, 2, 3]);
        for i in 0..4 {
            assert!(c4.has_edge(w[i], w[(i + 1) % 4]));
        }
        assert!(find_four_cycle(&complete(5)).is_some());
        assert_eq!(find_four_cycle(&cycle(5)), None);
    }

    #[test]
    fn girth_small_cases() {
        let tree = Graph::new(5, &[(0, 1), (0, 2), (2, 3), (2, 4)]).unwrap();
        assert_eq!(girth(&tree), None);
        assert_eq!(girth(&cycle(3)), Some(3));
        assert_eq!(girth(&cycle(7)), Some(7));
        assert_eq!(girth(&complete(4)), Some(3));
    }

    #[test]
    fn triangle_lists() {
        assert!(triangles(&cycle(5)).is_empty());
        assert_eq!(triangles(&complete(4)).len(), 4);
        assert_eq!(triangles(&complete(5)).len(), 10);
        assert_eq!(triangles(&complete(4))[0], [0, 1, 2]);
    }

    #[test]
    fn monochromatic_triangle() {
        let g = cycle(3);
        let mut f = TwoColoring::new(3);
        for v in 0..3 {
            f.set(v, Color::One);
        }
        let m = find_monochromatic_cycle(&g, &f).unwrap();
        assert_eq!(m.color, Color::One);
        assert_eq!(m.cycle.len(), 3);
        f.set(2, Color::Two);
        assert_eq!(find_monochromatic_cycle(&g, &f), None);
    }

    #[test]
    fn uncolored_vertices_break_cycles() {
        let g = cycle(5);
        let mut f = TwoColoring::new(5);
        for v in 0..4 {
            f.set(v, Color::Two);
        }
        assert!(is_good(&g, &f));
        f.set(4, Color::Two);
        assert_eq!(find_monochromatic_cycle(&g, &f).unwrap().cycle.len(), 5);
    }

    #[test]
    fn blocks_of_bowtie() {
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        let d = block_decomposition(&g);
        assert_eq!(d.blocks, vec![vec![0, 1, 2], vec![2, 3, 4]]);
        assert_eq!(d.cut_vertices, vec![2]);
    }

    #[test]
    fn blocks_of_cycle_and_path() {
        let d = block_decomposition(&cycle(6));
        assert_eq!(d.blocks.len(), 1);
        assert!(d.cut_vertices.is_empty());

        let p4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let d = block_decomposition(&p4);
        assert_eq!(d.blocks, vec![vec![0, 1], vec![1, 2], vec![2, 3]]);
        assert_eq!(d.cut_vertices, vec![1, 2]);
    }

    #[test]
    fn isolated_vertex_is_its_own_block() {
        let g = Graph::new(3, &[(0, 1)]).unwrap();
        let d = block_decomposition(&g);
        assert_eq!(d.blocks, vec![vec![0, 1], vec![2]]);
    }

    #[test]
    fn induced_relabels() {
        let g = petersen();
        let h = g.induced(&[0, 1, 2, 5]);
        assert_eq!(h.vertex_count(), 4);
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 3), (1, 2)]);
    }

    #[test]
    fn degeneracy_of_known_graphs() {
        assert_eq!(degeneracy_order(&petersen()).1, 3);
        assert_eq!(degeneracy_order(&cycle(9)).1, 2);
        assert_eq!(degeneracy_order(&complete(6)).1, 5);
        let (order, d) = degeneracy_order(&Graph::new(4, &[(0, 1), (1, 2)]).unwrap());
        assert_eq!(d, 1);
        assert_eq!(order.len(), 4);
    }

    #[test]
    fn swap_preserves_goodness() {
        let g = petersen();
        let mut f = TwoColoring::new(10);
        for v in 0..10 {
            f.set(v, if v < 5 { Color::One } else { Color::Two });
        }
        assert_eq!(is_good(&g, &f), is_good(&g, &f.swapped()));
    }
}
