//! Exhaustive vertex-arboricity decisions for small graphs.
//!
//! Backtracking over vertices in BFS order, one rollback union-find per color.
//! Colors are introduced in order (a vertex may only open color `c` once
//! `c - 1` is in use), which among other things fixes the first vertex.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Color, Graph, TwoColoring, Vertex};

/// Largest vertex count accepted for `k >= 2`.
pub const ORACLE_LIMIT: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("graph has {0} vertices, the exhaustive oracle accepts at most {ORACLE_LIMIT}")]
    TooLarge(usize),
}

struct Dsu {
    parent: Vec<usize>,
    size: Vec<usize>,
    log: Vec<(usize, usize)>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu { parent: (0..n).collect(), size: vec![1; n], log: Vec::new() }
    }

    fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return;
        }
        if self.size[a] < self.size[b] {
            core::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        self.log.push((a, b));
    }

    fn rollback(&mut self, mark: usize) {
        while self.log.len() > mark {
            let (a, b) = self.log.pop().unwrap();
            self.parent[b] = b;
            self.size[a] -= self.size[b];
        }
    }
}

struct Solver<'a> {
    g: &'a Graph,
    k: usize,
    order: Vec<Vertex>,
    color: Vec<usize>,
    dsu: Vec<Dsu>,
}

const UNSET: usize = usize::MAX;

impl Solver<'_> {
    /// Tries to give `v` color `c`; on success the union-find is updated and
    /// the log mark to roll back to is returned.
    fn place(&mut self, v: Vertex, c: usize) -> Option<usize> {
        let mut roots: Vec<usize> = Vec::new();
        for &w in self.g.neighbors(v) {
            if self.color[w] == c {
                let r = self.dsu[c].find(w);
                if roots.contains(&r) {
                    return None;
                }
                roots.push(r);
            }
        }
        let mark = self.dsu[c].log.len();
        for r in roots {
            self.dsu[c].union(v, r);
        }
        self.color[v] = c;
        Some(mark)
    }

    fn search(&mut self, i: usize, used: usize) -> bool {
        if i == self.order.len() {
            return true;
        }
        let v = self.order[i];
        for c in 0..self.k.min(used + 1) {
            if let Some(mark) = self.place(v, c) {
                if self.search(i + 1, used.max(c + 1)) {
                    return true;
                }
                self.dsu[c].rollback(mark);
                self.color[v] = UNSET;
            }
        }
        false
    }
}

fn bfs_order(g: &Graph) -> Vec<Vertex> {
    let mut seen = vec![false; g.vertex_count()];
    let mut order = Vec::with_capacity(g.vertex_count());
    for root in g.vertices() {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            order.push(x);
            for &y in g.neighbors(x) {
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
    }
    order
}

/// A partition into at most `k` induced forests as a class index per vertex.
pub fn forest_partition(g: &Graph, k: usize) -> Result<Option<Vec<usize>>, OracleError> {
    let n = g.vertex_count();
    if k >= 2 && n > ORACLE_LIMIT {
        return Err(OracleError::TooLarge(n));
    }
    if n == 0 {
        return Ok(Some(Vec::new()));
    }
    if k == 0 {
        return Ok(None);
    }
    if k == 1 {
        return Ok(g.is_forest().then(|| vec![0; n]));
    }
    let mut solver = Solver {
        g,
        k,
        order: bfs_order(g),
        color: vec![UNSET; n],
        dsu: (0..k).map(|_| Dsu::new(n)).collect(),
    };
    Ok(solver.search(0, 0).then_some(solver.color))
}

/// Whether the vertices split into `k` sets each inducing a forest.
pub fn arboricity_at_most(g: &Graph, k: usize) -> Result<bool, OracleError> {
    Ok(forest_partition(g, k)?.is_some())
}

/// A good total 2-coloring, if one exists.
pub fn two_forest_coloring(g: &Graph) -> Result<Option<TwoColoring>, OracleError> {
    Ok(forest_partition(g, 2)?.map(|classes| {
        TwoColoring::from_colors(
            classes.into_iter().map(|c| Some(if c == 0 { Color::One } else { Color::Two })).collect(),
        )
    }))
}

/// The least `k` with [`arboricity_at_most`]; 0 for the empty graph.
pub fn vertex_arboricity(g: &Graph) -> Result<usize, OracleError> {
    if g.vertex_count() > ORACLE_LIMIT {
        return Err(OracleError::TooLarge(g.vertex_count()));
    }
    let mut k = 0;
    while !arboricity_at_most(g, k)? {
        k += 1;
    }
    Ok(k)
}
