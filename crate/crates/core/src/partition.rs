//! The reduction-based solver: split into components and blocks, peel
//! vertices of degree at most 3, remove the cycle of a triangular-cycle
//! configuration, recurse, and extend the coloring back.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{
    block_decomposition, find_monochromatic_cycle, BlockDecomposition, Color, Graph,
    MonochromaticCycle, TwoColoring, Vertex,
};
use crate::oracle::two_forest_coloring;
use crate::structures::{
    find_triangular_cycle_config_with, ConfigError, ConfigSearch, TriangularCycleConfig,
    DEFAULT_SEARCH_BUDGET,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExtensionError {
    #[error("cycle vertex {vertex} has {found} neighbors off the cycle, expected 2")]
    ExternalCount { vertex: Vertex, found: usize },
    #[error("vertices {0} and {1} are consecutive on the cycle but not adjacent")]
    NotACycle(Vertex, Vertex),
    #[error("the cycle has a chord or a repeated vertex")]
    NotInduced,
    #[error("vertex {0} must be colored before extending")]
    Uncolored(Vertex),
    #[error("vertex {vertex} has degree {degree}, above 3")]
    DegreeTooHigh { vertex: Vertex, degree: usize },
    #[error("configuration is invalid: {0}")]
    Config(#[from] ConfigError),
    #[error("extension produced the monochromatic cycle {0:?}")]
    NotGood(MonochromaticCycle),
    #[error("no candidate coloring in branch {0:?} is good")]
    NoCandidate(TriangularBranch),
    #[error("blocks disagree at cut vertex {0}")]
    BlockConflict(Vertex),
    #[error("block coloring misses vertex {0}")]
    BlockUncolored(Vertex),
}

/// A cycle `v1..vs` whose vertices each have exactly two neighbors `x_i, y_i`
/// outside it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionContext {
    pub cycle: Vec<Vertex>,
    pub external: Vec<[Vertex; 2]>,
    /// Set when built from a triangular configuration; the apex is then one
    /// of the two external neighbors of `v1` and of `v2`.
    pub apex: Option<Vertex>,
}

impl ExtensionContext {
    /// Context for an induced cycle of `g`.
    pub fn from_cycle(g: &Graph, cycle: Vec<Vertex>) -> Result<Self, ExtensionError> {
        let s = cycle.len();
        let mut on = vec![false; g.vertex_count()];
        for &v in &cycle {
            if v >= g.vertex_count() || on[v] {
                return Err(ExtensionError::NotInduced);
            }
            on[v] = true;
        }
        if s < 3 {
            return Err(ExtensionError::NotInduced);
        }
        let mut external = Vec::with_capacity(s);
        for i in 0..s {
            let (v, w) = (cycle[i], cycle[(i + 1) % s]);
            if !g.has_edge(v, w) {
                return Err(ExtensionError::NotACycle(v, w));
            }
            let inside = g.neighbors(v).iter().filter(|&&x| on[x]).count();
            if inside != 2 {
                return Err(ExtensionError::NotInduced);
            }
            let out: Vec<Vertex> = g.neighbors(v).iter().copied().filter(|&x| !on[x]).collect();
            if out.len() != 2 {
                return Err(ExtensionError::ExternalCount { vertex: v, found: out.len() });
            }
            external.push([out[0], out[1]]);
        }
        Ok(ExtensionContext { cycle, external, apex: None })
    }

    /// Context for the cycle of a configuration, the apex counted as an
    /// external neighbor of `v1` and `v2`.
    pub fn for_config(cfg: &TriangularCycleConfig) -> Result<Self, ExtensionError> {
        let mut external = Vec::with_capacity(cfg.s());
        for (i, ext) in cfg.external.iter().enumerate() {
            let pair = match (i, ext.as_slice()) {
                (0 | 1, &[x]) => [x, cfg.apex],
                (2.., &[x, y]) => [x, y],
                _ => {
                    return Err(ExtensionError::ExternalCount {
                        vertex: cfg.cycle[i],
                        found: ext.len() + usize::from(i < 2),
                    })
                }
            };
            external.push(pair);
        }
        Ok(ExtensionContext { cycle: cfg.cycle.clone(), external, apex: Some(cfg.apex) })
    }

    pub fn s(&self) -> usize {
        self.cycle.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExtensionOutcome {
    Extended(TwoColoring),
    /// Every external neighbor has this color.
    CaseOne(Color),
    /// Every pair is bichromatic and the cycle is odd.
    CaseTwo,
}

/// Colors of the external pairs, in cycle order.
fn pair_colors(ctx: &ExtensionContext, f: &TwoColoring) -> Result<Vec<[Color; 2]>, ExtensionError> {
    ctx.external
        .iter()
        .map(|&[x, y]| match (f.get(x), f.get(y)) {
            (Some(a), Some(b)) => Ok([a, b]),
            (None, _) => Err(ExtensionError::Uncolored(x)),
            (_, None) => Err(ExtensionError::Uncolored(y)),
        })
        .collect()
}

/// Colors for `v1..vs`, or the case that blocks the direct extension.
pub fn cycle_colors(pairs: &[[Color; 2]]) -> Result<Vec<Color>, ExtensionOutcome> {
    let s = pairs.len();
    let first = pairs[0][0];
    if pairs.iter().all(|p| p[0] == first && p[1] == first) {
        return Err(ExtensionOutcome::CaseOne(first));
    }
    let mono = |i: usize| pairs[i][0] == pairs[i][1];
    let Some(j) = (0..s).find(|&i| mono(i)) else {
        if s % 2 == 1 {
            return Err(ExtensionOutcome::CaseTwo);
        }
        return Ok((0..s).map(|i| if i % 2 == 0 { Color::One } else { Color::Two }).collect());
    };
    let mut colors = vec![Color::One; s];
    for i in 0..s {
        if mono(i) {
            colors[i] = pairs[i][0].other();
        }
    }
    for k in 1..s {
        let i = (j + k) % s;
        if !mono(i) {
            colors[i] = colors[(i + s - 1) % s].other();
        }
    }
    Ok(colors)
}

fn verified(g: &Graph, f: TwoColoring) -> Result<TwoColoring, ExtensionError> {
    match find_monochromatic_cycle(g, &f) {
        None => Ok(f),
        Some(c) => Err(ExtensionError::NotGood(c)),
    }
}

/// Extends `f` (good on `g` minus the cycle, all external neighbors colored)
/// over the cycle of `ctx`, unless one of the two blocking cases holds.
pub fn extend_over_cycle(
    g: &Graph,
    ctx: &ExtensionContext,
    f: &TwoColoring,
) -> Result<ExtensionOutcome, ExtensionError> {
    let pairs = pair_colors(ctx, f)?;
    match cycle_colors(&pairs) {
        Err(case) => Ok(case),
        Ok(colors) => {
            let mut out = f.clone();
            for (&v, c) in ctx.cycle.iter().zip(colors) {
                out.set(v, c);
            }
            Ok(ExtensionOutcome::Extended(verified(g, out)?))
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TriangularBranch {
    /// The cycle extension applied directly.
    Extended,
    /// All external neighbors shared a color.
    CaseOne { flipped_apex: bool },
    /// Odd cycle with bichromatic pairs.
    CaseTwo { alternation_flipped: bool },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangularExtension {
    pub coloring: TwoColoring,
    pub branch: TriangularBranch,
}

/// Extends `f`, good on `g` minus the configuration's cycle (the apex stays
/// colored and may be recolored), to the whole of `g`.
pub fn extend_triangular_config(
    g: &Graph,
    cfg: &TriangularCycleConfig,
    f: &TwoColoring,
) -> Result<TriangularExtension, ExtensionError> {
    cfg.validate(g)?;
    let ctx = ExtensionContext::for_config(cfg)?;
    let mut base = f.clone();
    for &v in &cfg.cycle {
        base.clear(v);
    }
    let (case, swap) = match extend_over_cycle(g, &ctx, &base)? {
        ExtensionOutcome::Extended(coloring) => {
            return Ok(TriangularExtension { coloring, branch: TriangularBranch::Extended })
        }
        // Normalize to a = 1.
        ExtensionOutcome::CaseOne(a) => (ExtensionOutcome::CaseOne(a), a == Color::Two),
        // Normalize to f(u) = 2, so f(v'1) = f(v'2) = 1.
        ExtensionOutcome::CaseTwo => {
            (ExtensionOutcome::CaseTwo, base.get(cfg.apex) == Some(Color::One))
        }
    };
    if swap {
        base.swap_colors();
    }
    let (u, s) = (cfg.apex, cfg.s());
    let paint = |f: &mut TwoColoring, colors: &dyn Fn(usize) -> Color| {
        for (i, &v) in cfg.cycle.iter().enumerate() {
            f.set(v, colors(i + 1));
        }
    };
    let mut candidates: Vec<(TwoColoring, TriangularBranch)> = Vec::new();
    match case {
        ExtensionOutcome::CaseOne(_) => {
            let mut c = base.clone();
            paint(&mut c, &|i| if i == 1 { Color::One } else { Color::Two });
            candidates.push((c.clone(), TriangularBranch::CaseOne { flipped_apex: false }));
            c.set(u, Color::Two);
            candidates.push((c, TriangularBranch::CaseOne { flipped_apex: true }));
        }
        _ => {
            debug_assert!(s % 2 == 1);
            let mut c = base.clone();
            paint(&mut c, &|i| match i {
                1 => Color::Two,
                _ if i % 2 == 1 => Color::One,
                _ => Color::Two,
            });
            c.set(u, Color::One);
            candidates.push((c, TriangularBranch::CaseTwo { alternation_flipped: false }));
            let mut c = base.clone();
            paint(&mut c, &|i| match i {
                1 => Color::Two,
                _ if i % 2 == 1 => Color::Two,
                _ => Color::One,
            });
            c.set(u, Color::Two);
            candidates.push((c, TriangularBranch::CaseTwo { alternation_flipped: true }));
        }
    }
    let last = candidates.last().map(|c| c.1).unwrap();
    for (mut coloring, branch) in candidates {
        if find_monochromatic_cycle(g, &coloring).is_none() {
            if swap {
                coloring.swap_colors();
            }
            return Ok(TriangularExtension { coloring, branch });
        }
    }
    Err(ExtensionError::NoCandidate(last))
}

/// The color `v` gets from its colored neighbors: 1 unless 1 is used twice.
fn low_degree_color(g: &Graph, f: &TwoColoring, v: Vertex) -> Color {
    let ones = g.neighbors(v).iter().filter(|&&w| f.get(w) == Some(Color::One)).count();
    if ones <= 1 {
        Color::One
    } else {
        Color::Two
    }
}

/// Colors `v` (degree at most 3, all neighbors colored) with a color used at
/// most once around it, preferring 1.
pub fn extend_low_degree(g: &Graph, f: &TwoColoring, v: Vertex) -> Result<TwoColoring, ExtensionError> {
    if g.degree(v) > 3 {
        return Err(ExtensionError::DegreeTooHigh { vertex: v, degree: g.degree(v) });
    }
    if let Some(&w) = g.neighbors(v).iter().find(|&&w| !f.is_colored(w)) {
        return Err(ExtensionError::Uncolored(w));
    }
    let mut out = f.clone();
    out.set(v, low_degree_color(g, f, v));
    verified(g, out)
}

/// Combines per-block colorings (each indexed by vertex of the whole graph)
/// by swapping colors blockwise until cut vertices agree.
pub fn merge_block_colorings(
    decomp: &BlockDecomposition,
    per_block: &[TwoColoring],
) -> Result<TwoColoring, ExtensionError> {
    assert_eq!(decomp.blocks.len(), per_block.len(), "one coloring per block");
    let n = decomp.blocks.iter().flatten().map(|&v| v + 1).max().unwrap_or(0);
    let mut merged = TwoColoring::new(n);
    let mut done = vec![false; decomp.blocks.len()];
    let mut owners: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (b, block) in decomp.blocks.iter().enumerate() {
        for &v in block {
            owners[v].push(b);
        }
    }
    for root in 0..decomp.blocks.len() {
        if done[root] {
            continue;
        }
        let mut queue = VecDeque::from([root]);
        done[root] = true;
        while let Some(b) = queue.pop_front() {
            // The first already-colored vertex fixes the orientation.
            let f = &per_block[b];
            let mut swap = None;
            for &v in &decomp.blocks[b] {
                let Some(mine) = f.get(v) else {
                    return Err(ExtensionError::BlockUncolored(v));
                };
                if let Some(theirs) = merged.get(v) {
                    let want = mine != theirs;
                    if *swap.get_or_insert(want) != want {
                        return Err(ExtensionError::BlockConflict(v));
                    }
                }
            }
            let swap = swap.unwrap_or(false);
            for &v in &decomp.blocks[b] {
                let c = f.get(v).unwrap();
                merged.set(v, if swap { c.other() } else { c });
                for &nb in &owners[v] {
                    if !done[nb] {
                        done[nb] = true;
                        queue.push_back(nb);
                    }
                }
            }
        }
    }
    Ok(merged)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PartitionOptions {
    /// DFS node budget for each configuration search.
    pub budget: u64,
}

impl Default for PartitionOptions {
    fn default() -> Self {
        PartitionOptions { budget: DEFAULT_SEARCH_BUDGET }
    }
}

/// Graphs this small are solved by exhaustive search.
pub const BASE_CASE_SIZE: usize = 8;

/// One reduction step, vertices in the caller's numbering. Steps are logged
/// when their part of the coloring is finished, so the innermost come first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TraceStep {
    BaseCase { vertices: Vec<Vertex> },
    Components { count: usize },
    Blocks { count: usize, cut_vertices: Vec<Vertex> },
    LowDegree { vertex: Vertex, degree: usize },
    Configuration { cycle: Vec<Vertex>, apex: Vertex, branch: TriangularBranch },
}

impl TraceStep {
    pub fn kind(&self) -> &'static str {
        match self {
            TraceStep::BaseCase { .. } => "base_case",
            TraceStep::Components { .. } => "components",
            TraceStep::Blocks { .. } => "blocks",
            TraceStep::LowDegree { .. } => "low_degree",
            TraceStep::Configuration { .. } => "configuration",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    pub coloring: TwoColoring,
    pub trace: Vec<TraceStep>,
}

impl Partition {
    pub fn configuration_steps(&self) -> usize {
        self.trace.iter().filter(|s| matches!(s, TraceStep::Configuration { .. })).count()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PartitionError {
    #[error("no reduction applies to the subgraph on {vertices:?} (minimum degree {min_degree})")]
    NoReduction { vertices: Vec<Vertex>, min_degree: usize },
    #[error("configuration search budget exhausted on the subgraph on {vertices:?}")]
    BudgetExhausted { vertices: Vec<Vertex> },
    #[error("base case on {vertices:?} has no good coloring")]
    BaseCaseInfeasible { vertices: Vec<Vertex> },
    #[error("extension failed: {0}")]
    Extension(#[from] ExtensionError),
}

/// A good total 2-coloring of `g` with the default options.
pub fn partition(g: &Graph) -> Result<Partition, PartitionError> {
    partition_with(g, &PartitionOptions::default())
}

pub fn partition_with(g: &Graph, opts: &PartitionOptions) -> Result<Partition, PartitionError> {
    let labels: Vec<Vertex> = g.vertices().collect();
    let mut trace = Vec::new();
    let coloring = solve(g, &labels, opts, &mut trace)?;
    Ok(Partition { coloring, trace })
}

fn relabel(labels: &[Vertex], local: &[Vertex]) -> Vec<Vertex> {
    local.iter().map(|&v| labels[v]).collect()
}

fn checked(g: &Graph, f: TwoColoring) -> Result<TwoColoring, PartitionError> {
    Ok(verified(g, f)?)
}

fn solve(
    g: &Graph,
    labels: &[Vertex],
    opts: &PartitionOptions,
    trace: &mut Vec<TraceStep>,
) -> Result<TwoColoring, PartitionError> {
    let n = g.vertex_count();
    if n <= BASE_CASE_SIZE {
        let vertices = labels.to_vec();
        let Some(f) = two_forest_coloring(g).expect("base case is within the oracle limit") else {
            return Err(PartitionError::BaseCaseInfeasible { vertices });
        };
        trace.push(TraceStep::BaseCase { vertices });
        return checked(g, f);
    }

    let comps = g.components();
    if comps.len() > 1 {
        trace.push(TraceStep::Components { count: comps.len() });
        let mut f = TwoColoring::new(n);
        for comp in &comps {
            let sub = g.induced(comp);
            let part = solve(&sub, &relabel(labels, comp), opts, trace)?;
            for (i, &v) in comp.iter().enumerate() {
                f.set(v, part.get(i).unwrap());
            }
        }
        return checked(g, f);
    }

    let decomp = block_decomposition(g);
    if !decomp.cut_vertices.is_empty() {
        trace.push(TraceStep::Blocks {
            count: decomp.blocks.len(),
            cut_vertices: relabel(labels, &decomp.cut_vertices),
        });
        let mut per_block = Vec::with_capacity(decomp.blocks.len());
        for block in &decomp.blocks {
            let sub = g.induced(block);
            let part = solve(&sub, &relabel(labels, block), opts, trace)?;
            let mut lifted = TwoColoring::new(n);
            for (i, &v) in block.iter().enumerate() {
                lifted.set(v, part.get(i).unwrap());
            }
            per_block.push(lifted);
        }
        let f = merge_block_colorings(&decomp, &per_block)?;
        return checked(g, f);
    }

    // Peel every vertex whose degree drops to at most 3.
    let mut deg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut peeled: Vec<(Vertex, usize)> = Vec::new();
    let mut queue: VecDeque<Vertex> = g.vertices().filter(|&v| deg[v] <= 3).collect();
    while let Some(v) = queue.pop_front() {
        if removed[v] {
            continue;
        }
        removed[v] = true;
        peeled.push((v, deg[v]));
        for &w in g.neighbors(v) {
            if !removed[w] {
                deg[w] -= 1;
                if deg[w] == 3 {
                    queue.push_back(w);
                }
            }
        }
    }
    if !peeled.is_empty() {
        let (rest, map) = g.without(&removed);
        let part = solve(&rest, &relabel(labels, &map), opts, trace)?;
        let mut f = TwoColoring::new(n);
        for (i, &v) in map.iter().enumerate() {
            f.set(v, part.get(i).unwrap());
        }
        // Reverse peel order: each vertex sees at most 3 colored neighbors.
        for &(v, d) in peeled.iter().rev() {
            f.set(v, low_degree_color(g, &f, v));
            trace.push(TraceStep::LowDegree { vertex: labels[v], degree: d });
        }
        return checked(g, f);
    }

    match find_triangular_cycle_config_with(g, opts.budget) {
        ConfigSearch::Found(cfg) => {
            let mut removed = vec![false; n];
            for &v in &cfg.cycle {
                removed[v] = true;
            }
            let (rest, map) = g.without(&removed);
            let part = solve(&rest, &relabel(labels, &map), opts, trace)?;
            let mut f = TwoColoring::new(n);
            for (i, &v) in map.iter().enumerate() {
                f.set(v, part.get(i).unwrap());
            }
            let ext = extend_triangular_config(g, &cfg, &f)?;
            trace.push(TraceStep::Configuration {
                cycle: relabel(labels, &cfg.cycle),
                apex: labels[cfg.apex],
                branch: ext.branch,
            });
            checked(g, ext.coloring)
        }
        ConfigSearch::NotFound => Err(PartitionError::NoReduction {
            vertices: labels.to_vec(),
            min_degree: g.min_degree().unwrap_or(0),
        }),
        ConfigSearch::BudgetExhausted => {
            Err(PartitionError::BudgetExhausted { vertices: labels.to_vec() })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_good;
    use crate::maps;
    use crate::oracle::arboricity_at_most;

    fn colors(cs: &[u8]) -> Vec<Color> {
        cs.iter().map(|&c| Color::from_number(c).unwrap()).collect()
    }

    fn pairs(cs: &[(u8, u8)]) -> Vec<[Color; 2]> {
        cs.iter()
            .map(|&(a, b)| [Color::from_number(a).unwrap(), Color::from_number(b).unwrap()])
            .collect()
    }

    #[test]
    fn case_one_when_all_externals_agree() {
        assert_eq!(cycle_colors(&pairs(&[(1, 1); 5])), Err(ExtensionOutcome::CaseOne(Color::One)));
        assert_eq!(cycle_colors(&pairs(&[(2, 2); 6])), Err(ExtensionOutcome::CaseOne(Color::Two)));
    }

    #[test]
    fn case_two_on_odd_bichromatic() {
        assert_eq!(cycle_colors(&pairs(&[(1, 2); 5])), Err(ExtensionOutcome::CaseTwo));
        assert_eq!(cycle_colors(&pairs(&[(1, 2), (2, 1), (1, 2), (1, 2), (2, 1)])), Err(ExtensionOutcome::CaseTwo));
    }

    #[test]
    fn even_bichromatic_alternates() {
        assert_eq!(cycle_colors(&pairs(&[(1, 2); 6])).unwrap(), colors(&[1, 2, 1, 2, 1, 2]));
    }

    #[test]
    fn monochromatic_pair_then_cyclic_fill() {
        // v3 sees (1, 1): it takes 2, then v4, v5, v1, v2 alternate from it.
        let p = pairs(&[(1, 2), (1, 2), (1, 1), (1, 2), (2, 1)]);
        assert_eq!(cycle_colors(&p).unwrap(), colors(&[1, 2, 2, 1, 2]));
    }

    /// Cycle 0..s-1; vertex i has external neighbors s+2i, s+2i+1.
    fn hairy_cycle(s: usize) -> (Graph, ExtensionContext) {
        let mut e: Vec<_> = (0..s).map(|i| (i, (i + 1) % s)).collect();
        for i in 0..s {
            e.push((i, s + 2 * i));
            e.push((i, s + 2 * i + 1));
        }
        let g = Graph::new(3 * s, &e).unwrap();
        let ctx = ExtensionContext::from_cycle(&g, (0..s).collect()).unwrap();
        (g, ctx)
    }

    #[test]
    fn extension_outcomes_on_a_hairy_cycle() {
        let (g, ctx) = hairy_cycle(5);
        let mut f = TwoColoring::new(g.vertex_count());
        for v in 5..15 {
            f.set(v, Color::One);
        }
        assert_eq!(extend_over_cycle(&g, &ctx, &f).unwrap(), ExtensionOutcome::CaseOne(Color::One));
        f.set(7, Color::Two);
        match extend_over_cycle(&g, &ctx, &f).unwrap() {
            ExtensionOutcome::Extended(out) => {
                assert!(out.is_total());
                assert!(is_good(&g, &out));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn malformed_contexts_are_rejected() {
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (0, 4)]).unwrap();
        assert!(matches!(
            ExtensionContext::from_cycle(&g, vec![0, 1, 2]),
            Err(ExtensionError::ExternalCount { vertex: 1, found: 0 })
        ));
        let (g, _) = hairy_cycle(5);
        assert!(ExtensionContext::from_cycle(&g, vec![0, 1, 2, 3]).is_err());
    }

    #[test]
    fn low_degree_choices() {
        let g = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let with = |cs: [u8; 3]| {
            let mut f = TwoColoring::new(4);
            for (i, c) in cs.into_iter().enumerate() {
                f.set(i + 1, Color::from_number(c).unwrap());
            }
            extend_low_degree(&g, &f, 0).unwrap().get(0).unwrap()
        };
        assert_eq!(with([1, 1, 2]), Color::Two);
        assert_eq!(with([1, 2, 2]), Color::One);
        assert_eq!(with([2, 2, 2]), Color::One);
        let pair = Graph::new(3, &[(0, 1), (0, 2)]).unwrap();
        let mut f = TwoColoring::new(3);
        f.set(1, Color::One);
        f.set(2, Color::Two);
        assert_eq!(extend_low_degree(&pair, &f, 0).unwrap().get(0), Some(Color::One));
        f.set(2, Color::One);
        assert_eq!(extend_low_degree(&pair, &f, 0).unwrap().get(0), Some(Color::Two));
        f.clear(2);
        assert_eq!(extend_low_degree(&pair, &f, 0), Err(ExtensionError::Uncolored(2)));
        let k5 = maps::complete(5);
        assert!(matches!(
            extend_low_degree(&k5, &TwoColoring::new(5), 0),
            Err(ExtensionError::DegreeTooHigh { .. })
        ));
    }

    #[test]
    fn merge_flips_second_block() {
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        let d = block_decomposition(&g);
        assert_eq!(d.blocks, vec![vec![0, 1, 2], vec![2, 3, 4]]);
        let mut a = TwoColoring::new(5);
        for (v, c) in [(0, 1), (1, 2), (2, 1)] {
            a.set(v, Color::from_number(c).unwrap());
        }
        let mut b = TwoColoring::new(5);
        for (v, c) in [(2, 2), (3, 2), (4, 1)] {
            b.set(v, Color::from_number(c).unwrap());
        }
        let m = merge_block_colorings(&d, &[a.clone(), b]).unwrap();
        assert_eq!(m.get(2), Some(Color::One));
        assert_eq!(m.get(3), Some(Color::One));
        assert_eq!(m.get(4), Some(Color::Two));
        assert!(is_good(&g, &m));
        let single = block_decomposition(&maps::complete(3));
        assert_eq!(merge_block_colorings(&single, &[a.clone()]).unwrap().get(0), a.get(0));
    }

    #[test]
    fn merge_along_a_path_of_blocks() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let d = block_decomposition(&g);
        let per: Vec<TwoColoring> = d
            .blocks
            .iter()
            .map(|b| {
                let mut f = TwoColoring::new(4);
                f.set(b[0], Color::One);
                f.set(b[1], Color::Two);
                f
            })
            .collect();
        let m = merge_block_colorings(&d, &per).unwrap();
        assert!(m.is_total());
        assert!(is_good(&g, &m));
    }

    #[test]
    fn triangle_and_petersen() {
        let t = partition(&maps::complete(3)).unwrap();
        assert!(is_good(&maps::complete(3), &t.coloring));
        let g = maps::petersen();
        let p = partition(&g).unwrap();
        assert!(p.coloring.is_total());
        assert!(is_good(&g, &p.coloring));
        assert_eq!(p.configuration_steps(), 0);
        assert!(arboricity_at_most(&g, 2).unwrap());
    }

    #[test]
    fn kagome_needs_configurations() {
        let g = maps::kagome_torus(4, 6).graph;
        let p = partition(&g).unwrap();
        assert!(is_good(&g, &p.coloring));
        assert!(p.configuration_steps() >= 1);
    }

    #[test]
    fn icosidodecahedron_partition() {
        let g = maps::icosidodecahedron().graph;
        let p = partition(&g).unwrap();
        assert!(p.coloring.is_total());
        assert!(is_good(&g, &p.coloring));
    }

    #[test]
    fn infeasible_inputs_fail() {
        assert!(matches!(
            partition(&maps::complete(5)),
            Err(PartitionError::BaseCaseInfeasible { .. })
        ));
        // K7 on the torus has min degree 6 and no configuration.
        let k7 = maps::complete(7);
        assert!(partition(&k7).is_err());
        let big = maps::triangular_torus(3, 4).graph;
        assert!(matches!(partition(&big), Err(PartitionError::NoReduction { .. })));
    }
}
