//! Seeded instance generators.
//!
//! Embedded families start from a named map of genus 0 or 1 and apply edits
//! that never raise the genus: edge deletions (rejected when they disconnect
//! or change the genus), subdivisions to kill 4-cycles, ears, and bridged
//! gadgets (triangle cacti for tree components of `H`, triangle rings for
//! cycle components). Configuration-bearing graphs are built around a
//! planted triangular-cycle configuration instead.

use alloc::collections::VecDeque;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::embedding::{genus, RotationSystem};
use crate::graph::{
    block_decomposition, degeneracy_order, find_four_cycle, is_good, Color, Graph, TwoColoring, Vertex,
};
use crate::maps::{self, EmbeddedGraph, MapBuilder};
use crate::structures::{
    build_aux_graph, classify_components, find_triangular_cycle_config, ComponentKind, ConfigSearch,
    TriangularCycleConfig,
};

const ATTEMPTS: usize = 500;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    PlanarC4Free,
    ToroidalC4Free,
    /// A planted configuration with a cycle of this length.
    ConfigBearing(usize),
    /// Embedded and 4-cycle-free with a tree component in `H`.
    TreeH,
    /// Embedded and 4-cycle-free with a cycle component in `H`.
    CycleH,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::PlanarC4Free => f.write_str("planar_c4free"),
            Family::ToroidalC4Free => f.write_str("toroidal_c4free"),
            Family::ConfigBearing(s) => write!(f, "config_bearing:{s}"),
            Family::TreeH => f.write_str("tree_H"),
            Family::CycleH => f.write_str("cycle_H"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown family `{0}`")]
pub struct ParseFamilyError(pub String);

impl FromStr for Family {
    type Err = ParseFamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ParseFamilyError(s.into());
        match s.to_ascii_lowercase().as_str() {
            "planar_c4free" => Ok(Family::PlanarC4Free),
            "toroidal_c4free" => Ok(Family::ToroidalC4Free),
            "tree_h" => Ok(Family::TreeH),
            "cycle_h" => Ok(Family::CycleH),
            other => {
                let rest = other.strip_prefix("config_bearing").ok_or_else(bad)?;
                let num = rest
                    .strip_prefix(':')
                    .or_else(|| rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')))
                    .ok_or_else(bad)?;
                num.parse().map(Family::ConfigBearing).map_err(|_| bad())
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GenParams {
    pub seed: u64,
    pub min_vertices: usize,
    pub max_vertices: usize,
    pub family: Family,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GenError {
    #[error("empty size range {min}..={max}")]
    EmptyRange { min: usize, max: usize },
    #[error("cycle length {0} is below 5")]
    CycleTooShort(usize),
    #[error("no {family} instance with {min}..={max} vertices found in {attempts} attempts")]
    Unsatisfiable { family: Family, min: usize, max: usize, attempts: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub graph: Graph,
    pub rotation: Option<RotationSystem>,
}

/// A graph with a planted configuration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfigInstance {
    pub graph: Graph,
    pub config: TriangularCycleConfig,
}

fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn planar_bases() -> Vec<EmbeddedGraph> {
    let mut out = vec![maps::dodecahedron(), maps::icosidodecahedron(), maps::cube()];
    for k in 3..9 {
        out.push(maps::prism(k));
    }
    for r in 2..5 {
        for c in r..6 {
            out.push(maps::planar_grid(r, c, false));
            out.push(maps::planar_grid(r, c, true));
        }
    }
    out
}

fn toroidal_bases() -> Vec<EmbeddedGraph> {
    let mut out = vec![maps::petersen_torus(), maps::k5_torus(), maps::k7_torus()];
    for r in 3..6 {
        for c in r..6 {
            out.push(maps::square_torus(r, c));
            out.push(maps::triangular_torus(r, c));
        }
    }
    for (r, c) in [(4, 4), (4, 6), (4, 8), (6, 6)] {
        out.push(maps::hex_torus(r, c));
        out.push(maps::kagome_torus(r, c));
    }
    out
}

fn embedded_genus(b: &MapBuilder) -> Option<usize> {
    let m = b.build();
    genus(&m.graph, &m.rotation).ok()
}

/// Deletes random edges, keeping the graph connected and the genus fixed.
fn thin(b: &mut MapBuilder, rng: &mut ChaCha8Rng, target_genus: usize) {
    let fraction: f64 = rng.gen_range(0.0..0.35);
    let tries = (fraction * b.edges().len() as f64) as usize;
    for _ in 0..tries {
        let edges = b.edges();
        let &(u, v) = edges.choose(rng).unwrap();
        let mut trial = b.clone();
        trial.delete_edge(u, v);
        if trial.graph().is_connected() && embedded_genus(&trial) == Some(target_genus) {
            *b = trial;
        }
    }
}

/// Subdivides an edge of some 4-cycle until none is left.
fn kill_four_cycles(b: &mut MapBuilder, rng: &mut ChaCha8Rng, max: usize) -> bool {
    while let Some(c) = find_four_cycle(&b.graph()) {
        if b.vertex_count() >= max {
            return false;
        }
        let i = rng.gen_range(0..4);
        b.subdivide(c[i], c[(i + 1) % 4]);
    }
    true
}

/// Turns degree-2 vertices into bad vertices by hanging an ear on both edges.
fn add_ear_pairs(b: &mut MapBuilder, rng: &mut ChaCha8Rng, count: usize, max: usize) {
    for _ in 0..count {
        if b.vertex_count() + 2 > max {
            return;
        }
        let twos: Vec<Vertex> = (0..b.vertex_count())
            .filter(|&v| b.degree(v) == 2 && !b.has_edge(b.neighbors(v)[0], b.neighbors(v)[1]))
            .collect();
        let Some(&v) = twos.choose(rng) else { return };
        let (p, q) = (b.neighbors(v)[0], b.neighbors(v)[1]);
        let mut trial = b.clone();
        trial.add_ear(v, p);
        trial.add_ear(q, v);
        if find_four_cycle(&trial.graph()).is_none() {
            *b = trial;
        }
    }
}

fn single_vertex() -> EmbeddedGraph {
    EmbeddedGraph { graph: Graph::empty(1), rotation: RotationSystem::new(vec![Vec::new()]) }
}

/// A new triangle hanging off `x`; returns the two new vertices.
fn pendant_triangle(b: &mut MapBuilder, x: Vertex) -> (Vertex, Vertex) {
    let y = b.attach(&single_vertex(), x, 0);
    let z = b.add_ear(x, y);
    (y, z)
}

/// Bridges a cactus of `k >= 2` triangles onto `at`. Every vertex shared by
/// two triangles has degree 4, so `H` gains a tree component.
fn attach_cactus(b: &mut MapBuilder, rng: &mut ChaCha8Rng, at: Vertex, k: usize) {
    let root = b.attach(&single_vertex(), at, 0);
    let (y, z) = pendant_triangle(b, root);
    let mut free = vec![y, z];
    for _ in 1..k {
        let i = rng.gen_range(0..free.len());
        let x = free.swap_remove(i);
        let (y, z) = pendant_triangle(b, x);
        free.push(y);
        free.push(z);
    }
}

/// A cycle `c_0..c_{k-1}` with an ear on every edge; `H` of it is a `k`-cycle.
fn triangle_ring(k: usize) -> EmbeddedGraph {
    let fwd: Vec<Vertex> = (0..k).collect();
    let back: Vec<Vertex> = (0..k).rev().collect();
    let cycle = EmbeddedGraph::from_faces(k, &[fwd, back]).expect("a cycle embeds in the plane");
    let mut b = MapBuilder::new(&cycle);
    for i in 0..k {
        b.add_ear(i, (i + 1) % k);
    }
    b.build()
}

fn embedded_attempt(
    rng: &mut ChaCha8Rng,
    planar: bool,
    min: usize,
    max: usize,
) -> Option<EmbeddedGraph> {
    let target_genus = usize::from(!planar);
    let bases: Vec<EmbeddedGraph> = if planar { planar_bases() } else { toroidal_bases() }
        .into_iter()
        .filter(|m| m.graph.vertex_count() <= max)
        .collect();
    let base = bases.choose(rng)?;
    let mut b = MapBuilder::new(base);
    if rng.gen_bool(0.7) {
        thin(&mut b, rng, target_genus);
    }
    if !kill_four_cycles(&mut b, rng, max) {
        return None;
    }
    if rng.gen_bool(0.5) {
        let pairs = rng.gen_range(1..4);
        add_ear_pairs(&mut b, rng, pairs, max);
    }
    while b.vertex_count() < min {
        let edges = b.edges();
        let &(u, v) = edges.choose(rng)?;
        b.subdivide(u, v);
    }
    let m = b.build();
    let ok = m.graph.vertex_count() <= max
        && m.graph.is_connected()
        && find_four_cycle(&m.graph).is_none()
        && genus(&m.graph, &m.rotation) == Ok(target_genus);
    ok.then_some(m)
}

fn has_component(m: &EmbeddedGraph, kind: ComponentKind) -> bool {
    build_aux_graph(&m.graph)
        .map(|h| classify_components(&h).iter().any(|c| c.kind == kind))
        .unwrap_or(false)
}

/// A seeded instance of the requested family.
pub fn gen_instance(p: &GenParams) -> Result<Instance, GenError> {
    let (min, max) = (p.min_vertices, p.max_vertices);
    if min > max || max == 0 {
        return Err(GenError::EmptyRange { min, max });
    }
    let mut rng = rng_for(p.seed);
    let fail = || GenError::Unsatisfiable { family: p.family, min, max, attempts: ATTEMPTS };
    if let Family::ConfigBearing(s) = p.family {
        let c = config_instance(&mut rng, s, min, max)?.ok_or_else(fail)?;
        return Ok(Instance { graph: c.graph, rotation: None });
    }
    for _ in 0..ATTEMPTS {
        let planar = match p.family {
            Family::PlanarC4Free => true,
            Family::ToroidalC4Free => false,
            _ => rng.gen_bool(0.5),
        };
        let found = match p.family {
            Family::TreeH => {
                let k = rng.gen_range(2..8);
                let extra = 1 + 2 * k;
                if max < 5 + extra {
                    continue;
                }
                embedded_attempt(&mut rng, planar, min.saturating_sub(extra), max - extra).map(|m| {
                    let mut b = MapBuilder::new(&m);
                    let at = rng.gen_range(0..m.graph.vertex_count());
                    attach_cactus(&mut b, &mut rng, at, k);
                    b.build()
                })
            }
            Family::CycleH => {
                let k = rng.gen_range(5..10);
                if max < 5 + 2 * k {
                    continue;
                }
                embedded_attempt(&mut rng, planar, min.saturating_sub(2 * k), max - 2 * k).map(|m| {
                    let mut b = MapBuilder::new(&m);
                    let at = rng.gen_range(0..m.graph.vertex_count());
                    let ring = triangle_ring(k);
                    // Bridge from an ear vertex so the ring stays intact.
                    b.attach(&ring, at, k);
                    b.build()
                })
            }
            _ => embedded_attempt(&mut rng, planar, min, max),
        };
        let Some(m) = found else { continue };
        let n = m.graph.vertex_count();
        let ok = (min..=max).contains(&n)
            && find_four_cycle(&m.graph).is_none()
            && genus(&m.graph, &m.rotation).is_ok_and(|g| g <= 1)
            && match p.family {
                Family::TreeH => has_component(&m, ComponentKind::Tree),
                Family::CycleH => has_component(&m, ComponentKind::Cycle),
                _ => true,
            };
        if ok {
            return Ok(Instance { graph: m.graph, rotation: Some(m.rotation) });
        }
    }
    Err(fail())
}

/// Whether adding `pq` would close a 4-cycle.
fn closes_four_cycle(adj: &[Vec<Vertex>], p: Vertex, q: Vertex) -> bool {
    adj[p].iter().any(|&x| x != q && adj[x].iter().any(|&y| y != p && y != x && adj[q].contains(&y)))
}

fn config_instance(
    rng: &mut ChaCha8Rng,
    s: usize,
    min: usize,
    max: usize,
) -> Result<Option<ConfigInstance>, GenError> {
    if s < 5 {
        return Err(GenError::CycleTooShort(s));
    }
    // Cycle, apex and one fresh vertex per external slot.
    let fixed = 3 * s + 1;
    let lo = min.max(fixed + s);
    let hi = max;
    if lo > hi {
        return Ok(None);
    }
    for _ in 0..ATTEMPTS {
        let n = rng.gen_range(lo..=hi.min(lo + 2 * s));
        if let Some(c) = planted(rng, s, n) {
            return Ok(Some(c));
        }
    }
    Ok(None)
}

/// One try at planting a configuration in an `n`-vertex graph.
fn planted(rng: &mut ChaCha8Rng, s: usize, n: usize) -> Option<ConfigInstance> {
    let u = s;
    let mut adj: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    let link = |adj: &mut Vec<Vec<Vertex>>, a: Vertex, b: Vertex| {
        adj[a].push(b);
        adj[b].push(a);
    };
    for i in 0..s {
        link(&mut adj, i, (i + 1) % s);
    }
    link(&mut adj, u, 0);
    link(&mut adj, u, 1);
    // External slots: one each for v1, v2, two for the rest and the apex.
    let mut next = s + 1;
    for (v, slots) in (0..=s).map(|v| (v, if v < 2 { 1 } else { 2 })) {
        for _ in 0..slots {
            link(&mut adj, v, next);
            next += 1;
        }
    }
    debug_assert_eq!(next, 3 * s + 1);
    // The apex's outer neighbors are adjacent, so the apex is a bad vertex.
    link(&mut adj, next - 2, next - 1);
    // Every vertex off S gets at most 3 edges to vertices later in a random
    // order, so the graph minus the cycle is 3-degenerate; degrees are then
    // topped up to 4 where possible.
    let mut order: Vec<Vertex> = (s + 1..n).collect();
    order.shuffle(rng);
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let deficit = |adj: &Vec<Vec<Vertex>>, v: Vertex| 4usize.saturating_sub(adj[v].len());
    for (i, &v) in order.iter().enumerate() {
        let mut later: Vec<Vertex> = order[i + 1..].to_vec();
        later.shuffle(rng);
        later.sort_by_key(|&w| core::cmp::Reverse(deficit(&adj, w)));
        let mut forward = 0;
        for w in later {
            if forward == 3 || (deficit(&adj, v) == 0 && deficit(&adj, w) == 0 && rng.gen_bool(0.7)) {
                break;
            }
            // Cycle externals stay pairwise nonadjacent so that coloring them
            // all alike is possible.
            let slot = |x: Vertex| (s + 1..3 * s - 1).contains(&x);
            if (slot(v) && slot(w)) || adj[v].contains(&w) || closes_four_cycle(&adj, v, w) {
                continue;
            }
            link(&mut adj, v, w);
            forward += 1;
        }
    }
    let graph = Graph::from_adjacency(adj);
    if graph.min_degree() < Some(4) || !graph.is_connected() {
        return None;
    }
    if find_four_cycle(&graph).is_some() || !block_decomposition(&graph).cut_vertices.is_empty() {
        return None;
    }
    let config = TriangularCycleConfig::from_cycle(&graph, (0..s).collect(), u).ok()?;
    // The solver will use whatever the search finds first; make sure that is
    // a cycle of the planted length whose removal leaves nothing to reduce
    // but low-degree vertices.
    let ConfigSearch::Found(found) = find_triangular_cycle_config(&graph) else { return None };
    if found.s() != s {
        return None;
    }
    let mut removed = vec![false; graph.vertex_count()];
    for &v in &found.cycle {
        removed[v] = true;
    }
    let (rest, _) = graph.without(&removed);
    if degeneracy_order(&rest).1 > 3 {
        return None;
    }
    Some(ConfigInstance { graph, config })
}

/// A 4-cycle-free, 2-connected graph of minimum degree 4 with a planted
/// configuration whose cycle has length `s`, and where the first
/// configuration the search reports also has length `s`.
pub fn gen_config_instance(seed: u64, s: usize) -> Result<ConfigInstance, GenError> {
    let (min, max) = (4 * s + 1, 6 * s + 8);
    let mut rng = rng_for(seed);
    config_instance(&mut rng, s, min, max)?.ok_or(GenError::Unsatisfiable {
        family: Family::ConfigBearing(s),
        min,
        max,
        attempts: ATTEMPTS,
    })
}

/// Whether giving `v` color `c` keeps `f` good.
fn can_place(g: &Graph, f: &TwoColoring, v: Vertex, c: Color) -> bool {
    let mut label = vec![usize::MAX; g.vertex_count()];
    for (id, &w) in g.neighbors(v).iter().enumerate() {
        if f.get(w) != Some(c) {
            continue;
        }
        if label[w] != usize::MAX {
            return false;
        }
        label[w] = id;
        let mut queue = VecDeque::from([w]);
        while let Some(x) = queue.pop_front() {
            for &y in g.neighbors(x) {
                if y != v && f.get(y) == Some(c) && label[y] == usize::MAX {
                    label[y] = id;
                    queue.push_back(y);
                }
            }
        }
    }
    true
}

/// Completes `fixed` to a good total coloring by greedy random choices in
/// reverse degeneracy order. `None` when `fixed` is not good or a vertex
/// admits neither color.
pub fn random_good_coloring<R: Rng>(g: &Graph, fixed: &TwoColoring, rng: &mut R) -> Option<TwoColoring> {
    if !is_good(g, fixed) {
        return None;
    }
    let (order, _) = degeneracy_order(g);
    let mut f = fixed.clone();
    for &v in order.iter().rev() {
        if f.is_colored(v) {
            continue;
        }
        let first = if rng.gen_bool(0.5) { Color::One } else { Color::Two };
        let c = [first, first.other()].into_iter().find(|&c| can_place(g, &f, v, c))?;
        f.set(v, c);
    }
    Some(f)
}

/// Which branch of the configuration extension a coloring should drive.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Scenario {
    Any,
    /// All external neighbors share a color; with `force_flip` a path of that
    /// color joins `v1`'s other neighbor to the apex.
    CaseOne { force_flip: bool },
    /// Bichromatic pairs on an odd cycle; with `force_flip` a path joins the
    /// apex's two outer neighbors in the color opposite the apex.
    CaseTwo { force_flip: bool },
}

fn fix(f: &mut TwoColoring, v: Vertex, c: Color) -> bool {
    match f.get(v) {
        Some(d) => d == c,
        None => {
            f.set(v, c);
            true
        }
    }
}

/// Shortest path from `a` to `b` avoiding `blocked`, endpoints included.
fn path_avoiding(g: &Graph, a: Vertex, b: Vertex, blocked: &[bool]) -> Option<Vec<Vertex>> {
    let mut prev = vec![usize::MAX; g.vertex_count()];
    prev[a] = a;
    let mut queue = VecDeque::from([a]);
    while let Some(x) = queue.pop_front() {
        if x == b {
            let mut path = vec![b];
            let mut y = b;
            while y != a {
                y = prev[y];
                path.push(y);
            }
            return Some(path);
        }
        for &y in g.neighbors(x) {
            if !blocked[y] && prev[y] == usize::MAX {
                prev[y] = x;
                queue.push_back(y);
            }
        }
    }
    None
}

/// A good coloring of `g` with the cycle of `cfg` left uncolored, shaped to
/// hit `scenario`. `None` when this attempt could not be completed.
pub fn scenario_coloring<R: Rng>(
    g: &Graph,
    cfg: &TriangularCycleConfig,
    scenario: Scenario,
    rng: &mut R,
) -> Option<TwoColoring> {
    let n = g.vertex_count();
    let mut on_cycle = vec![false; n];
    for &v in &cfg.cycle {
        on_cycle[v] = true;
    }
    let (rest, map) = g.without(&on_cycle);
    let mut local = vec![usize::MAX; n];
    for (i, &v) in map.iter().enumerate() {
        local[v] = i;
    }
    let mut f = TwoColoring::new(n);
    let pick = |rng: &mut R| if rng.gen_bool(0.5) { Color::One } else { Color::Two };
    match scenario {
        Scenario::Any => {}
        Scenario::CaseOne { force_flip } => {
            let a = pick(rng);
            let externals = cfg.external.iter().flatten().chain([&cfg.apex]);
            for &x in externals {
                fix(&mut f, x, a);
            }
            if force_flip {
                let path = path_avoiding(g, cfg.external[0][0], cfg.apex, &on_cycle)?;
                for v in path {
                    if !fix(&mut f, v, a) {
                        return None;
                    }
                }
            }
        }
        Scenario::CaseTwo { force_flip } => {
            if cfg.s().is_multiple_of(2) {
                return None;
            }
            let b = pick(rng);
            let a = b.other();
            fix(&mut f, cfg.apex, b);
            if !(fix(&mut f, cfg.external[0][0], a) && fix(&mut f, cfg.external[1][0], a)) {
                return None;
            }
            if force_flip {
                let mut blocked = on_cycle.clone();
                blocked[cfg.apex] = true;
                let (p, q) = (cfg.apex_external[0], cfg.apex_external[1]);
                for v in path_avoiding(g, p, q, &blocked)? {
                    if !fix(&mut f, v, a) {
                        return None;
                    }
                }
            }
            for pair in &cfg.external[2..] {
                let c = pick(rng);
                if !(fix(&mut f, pair[0], c) && fix(&mut f, pair[1], c.other())) {
                    return None;
                }
            }
        }
    }
    let mut seed = TwoColoring::new(rest.vertex_count());
    for v in 0..n {
        if let Some(c) = f.get(v) {
            seed.set(local[v], c);
        }
    }
    let done = random_good_coloring(&rest, &seed, rng)?;
    let mut out = TwoColoring::new(n);
    for (i, &v) in map.iter().enumerate() {
        out.set(v, done.get(i).unwrap());
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::bad_vertices;

    fn params(seed: u64, family: Family, min: usize, max: usize) -> GenParams {
        GenParams { seed, min_vertices: min, max_vertices: max, family }
    }

    #[test]
    fn bases_are_consistent() {
        for m in planar_bases() {
            assert_eq!(genus(&m.graph, &m.rotation), Ok(0));
        }
        for m in toroidal_bases() {
            assert_eq!(genus(&m.graph, &m.rotation), Ok(1));
        }
    }

    #[test]
    fn family_names_round_trip() {
        for f in [
            Family::PlanarC4Free,
            Family::ToroidalC4Free,
            Family::ConfigBearing(7),
            Family::TreeH,
            Family::CycleH,
        ] {
            assert_eq!(f.to_string().parse::<Family>(), Ok(f));
        }
        assert_eq!("config_bearing(5)".parse::<Family>(), Ok(Family::ConfigBearing(5)));
        assert!("planar".parse::<Family>().is_err());
    }

    #[test]
    fn embedded_families_hold_their_promises() {
        for seed in 0..8 {
            for (family, genus_want) in [(Family::PlanarC4Free, 0), (Family::ToroidalC4Free, 1)] {
                let inst = gen_instance(&params(seed, family, 10, 60)).unwrap();
                let rot = inst.rotation.unwrap();
                assert_eq!(genus(&inst.graph, &rot), Ok(genus_want));
                assert!(find_four_cycle(&inst.graph).is_none());
                assert!((10..=60).contains(&inst.graph.vertex_count()));
            }
        }
    }

    #[test]
    fn gadget_families() {
        for seed in 0..6 {
            let t = gen_instance(&params(seed, Family::TreeH, 10, 60)).unwrap();
            let h = build_aux_graph(&t.graph).unwrap();
            assert!(classify_components(&h).iter().any(|c| c.kind == ComponentKind::Tree));
            let c = gen_instance(&params(seed, Family::CycleH, 10, 60)).unwrap();
            let h = build_aux_graph(&c.graph).unwrap();
            assert!(classify_components(&h).iter().any(|c| c.kind == ComponentKind::Cycle));
        }
    }

    #[test]
    fn generation_is_deterministic() {
        let p = params(42, Family::ToroidalC4Free, 20, 50);
        assert_eq!(gen_instance(&p), gen_instance(&p));
        assert_eq!(gen_config_instance(3, 6), gen_config_instance(3, 6));
    }

    #[test]
    fn config_instances() {
        for s in 5..9 {
            let c = gen_config_instance(s as u64, s).unwrap();
            c.config.validate(&c.graph).unwrap();
            assert_eq!(c.config.s(), s);
            assert!(find_four_cycle(&c.graph).is_none());
            assert!(c.graph.min_degree() >= Some(4));
            assert!(bad_vertices(&c.graph).contains(&c.config.apex));
            let found = find_triangular_cycle_config(&c.graph).found().unwrap();
            assert_eq!(found.vertex_set().len(), s + 1);
        }
        assert_eq!(gen_config_instance(0, 4), Err(GenError::CycleTooShort(4)));
    }

    #[test]
    fn empty_range_is_rejected() {
        assert!(matches!(
            gen_instance(&params(0, Family::PlanarC4Free, 10, 5)),
            Err(GenError::EmptyRange { .. })
        ));
        assert!(matches!(
            gen_instance(&params(0, Family::PlanarC4Free, 1, 3)),
            Err(GenError::Unsatisfiable { .. })
        ));
    }

    #[test]
    fn scenarios_produce_good_partial_colorings() {
        let c = gen_config_instance(11, 5).unwrap();
        let mut rng = rng_for(5);
        let mut hits = 0;
        for _ in 0..50 {
            if let Some(f) = scenario_coloring(&c.graph, &c.config, Scenario::CaseOne { force_flip: true }, &mut rng) {
                assert!(is_good(&c.graph, &f));
                assert!(c.config.cycle.iter().all(|&v| !f.is_colored(v)));
                hits += 1;
            }
        }
        assert!(hits > 0);
    }
}
