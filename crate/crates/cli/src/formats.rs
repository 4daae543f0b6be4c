//! Text formats shared by every subcommand.
//!
//! All readers accept `#` comments and blank lines and report 1-based line
//! numbers. Writers are canonical, so output is byte-stable.

use std::fmt::Write as _;

use arbor::discharging::{AuditReport, ChargeLedger, Element, Witness};
use arbor::embedding::EmbeddingReport;
use arbor::generate::GenParams;
use arbor::graph::{Color, Graph, GraphError, TwoColoring, Vertex};
use arbor::partition::{TraceStep, TriangularBranch};
use arbor::structures::AuxGraph;
use arbor::RotationSystem;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    /// 1-based; 0 when the problem is the file as a whole.
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, message: message.into() }
}

/// Non-empty lines with comments stripped, paired with their line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn parse_num(tok: &str, line: usize, what: &str) -> Result<usize, ParseError> {
    tok.parse().map_err(|_| err(line, format!("{what} `{tok}` is not a nonnegative integer")))
}

/// `n m`, then exactly `m` lines `u v`.
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or_else(|| err(0, "missing `n m` header"))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 2 {
        return Err(err(hline, "header must be `n m`"));
    }
    let n = parse_num(toks[0], hline, "vertex count")?;
    let m = parse_num(toks[1], hline, "edge count")?;
    let mut edges = Vec::with_capacity(m);
    let mut at = Vec::with_capacity(m);
    for (line, body) in lines {
        let toks: Vec<&str> = body.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(err(line, "edge line must be `u v`"));
        }
        if edges.len() == m {
            return Err(err(line, format!("more than the {m} edges announced in the header")));
        }
        edges.push((parse_num(toks[0], line, "vertex")?, parse_num(toks[1], line, "vertex")?));
        at.push(line);
    }
    if edges.len() < m {
        return Err(err(0, format!("header announces {m} edges, found {}", edges.len())));
    }
    Graph::new(n, &edges).map_err(|e| {
        let index = match e {
            GraphError::Loop { index, .. }
            | GraphError::OutOfRange { index, .. }
            | GraphError::Duplicate { index, .. } => index,
        };
        let message = match e {
            GraphError::Loop { vertex, .. } => format!("loop at vertex {vertex}"),
            GraphError::OutOfRange { vertex, vertex_count, .. } => {
                format!("vertex {vertex} out of range (graph has {vertex_count} vertices)")
            }
            GraphError::Duplicate { u, v, .. } => format!("duplicate edge {u} {v}"),
        };
        err(at[index], message)
    })
}

pub fn write_graph(g: &Graph) -> String {
    let mut edges: Vec<(Vertex, Vertex)> = g.edges().map(|(u, v)| (u.min(v), u.max(v))).collect();
    edges.sort_unstable();
    let mut out = format!("{} {}\n", g.vertex_count(), edges.len());
    for (u, v) in edges {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// One `v: a b c ...` line per vertex of `g`, checked against its neighbors.
pub fn parse_rotation(text: &str, g: &Graph) -> Result<RotationSystem, ParseError> {
    let n = g.vertex_count();
    let mut rot: Vec<Option<Vec<Vertex>>> = vec![None; n];
    for (line, body) in content_lines(text) {
        let (head, rest) = body.split_once(':').ok_or_else(|| err(line, "expected `v: a b c ...`"))?;
        let v = parse_num(head.trim(), line, "vertex")?;
        if v >= n {
            return Err(err(line, format!("vertex {v} out of range (graph has {n} vertices)")));
        }
        if rot[v].is_some() {
            return Err(err(line, format!("vertex {v} listed twice")));
        }
        let order = rest
            .split_whitespace()
            .map(|t| parse_num(t, line, "neighbor"))
            .collect::<Result<Vec<_>, _>>()?;
        let mut sorted = order.clone();
        sorted.sort_unstable();
        if sorted != g.neighbors(v) {
            return Err(err(line, format!("rotation at vertex {v} is not a permutation of its neighbors")));
        }
        rot[v] = Some(order);
    }
    let mut full = Vec::with_capacity(n);
    for (v, r) in rot.into_iter().enumerate() {
        full.push(r.ok_or_else(|| err(0, format!("vertex {v} has no rotation line")))?);
    }
    Ok(RotationSystem::new(full))
}

pub fn write_rotation(rot: &RotationSystem) -> String {
    let mut out = String::new();
    for (v, r) in rot.rotations().iter().enumerate() {
        let _ = write!(out, "{v}:");
        for w in r {
            let _ = write!(out, " {w}");
        }
        out.push('\n');
    }
    out
}

/// `v c` lines with `c` in {1, 2}. Vertices not listed stay uncolored.
pub fn parse_coloring(text: &str, n: usize) -> Result<TwoColoring, ParseError> {
    let mut f = TwoColoring::new(n);
    for (line, body) in content_lines(text) {
        let toks: Vec<&str> = body.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(err(line, "coloring line must be `v c`"));
        }
        let v = parse_num(toks[0], line, "vertex")?;
        if v >= n {
            return Err(err(line, format!("vertex {v} out of range (graph has {n} vertices)")));
        }
        let c = toks[1]
            .parse::<u8>()
            .ok()
            .and_then(Color::from_number)
            .ok_or_else(|| err(line, format!("color `{}` is not 1 or 2", toks[1])))?;
        if f.is_colored(v) {
            return Err(err(line, format!("vertex {v} colored twice")));
        }
        f.set(v, c);
    }
    Ok(f)
}

pub fn write_coloring(f: &TwoColoring) -> String {
    let mut out = String::new();
    for (v, c) in f.colors().iter().enumerate() {
        if let Some(c) = c {
            let _ = writeln!(out, "{v} {}", c.number());
        }
    }
    out
}

fn join(vs: &[Vertex]) -> String {
    vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

fn branch_name(b: TriangularBranch) -> &'static str {
    match b {
        TriangularBranch::Extended => "extended",
        TriangularBranch::CaseOne { flipped_apex: false } => "case_one",
        TriangularBranch::CaseOne { flipped_apex: true } => "case_one_apex_flipped",
        TriangularBranch::CaseTwo { alternation_flipped: false } => "case_two",
        TriangularBranch::CaseTwo { alternation_flipped: true } => "case_two_alternation_flipped",
    }
}

/// `step kind, vertices` per reduction step; extra facts follow a `;`.
pub fn write_trace(trace: &[TraceStep]) -> String {
    let mut out = String::new();
    for (i, step) in trace.iter().enumerate() {
        let kind = step.kind();
        let _ = match step {
            TraceStep::BaseCase { vertices } => writeln!(out, "{i} {kind}, {}", join(vertices)),
            TraceStep::Components { count } => writeln!(out, "{i} {kind}, ; count {count}"),
            TraceStep::Blocks { count, cut_vertices } => {
                writeln!(out, "{i} {kind}, {} ; count {count}", join(cut_vertices))
            }
            TraceStep::LowDegree { vertex, degree } => {
                writeln!(out, "{i} {kind}, {vertex} ; degree {degree}")
            }
            TraceStep::Configuration { cycle, apex, branch } => writeln!(
                out,
                "{i} {kind}, {} {apex} ; apex {apex} ; {}",
                join(cycle),
                branch_name(*branch)
            ),
        };
    }
    out
}

fn element_key(e: Element) -> (&'static str, usize) {
    match e {
        Element::Vertex(v) => ("vertex", v),
        Element::Face(i) => ("face", i),
        Element::Bank(b) => ("bank", b),
        Element::Total(_) => ("total", 0),
    }
}

/// `kind id phase num/den` for every element of the ledger at its phase.
pub fn write_ledger(ledger: &ChargeLedger) -> String {
    let mut out = String::new();
    let phase = ledger.phase();
    for (e, c) in ledger.elements() {
        let (kind, id) = element_key(e);
        let _ = writeln!(out, "{kind} {id} {phase} {c}");
    }
    out
}

pub fn write_total(ledger: &ChargeLedger, genus: Option<usize>) -> String {
    let genus = genus.map_or("?".to_string(), |g| g.to_string());
    format!("TOTAL {} GENUS {genus}\n", ledger.total())
}

fn write_witness(out: &mut String, tag: &str, w: &Witness) {
    match w.element {
        Element::Total(p) => {
            let _ = writeln!(out, "{tag} total {p} {}", w.charge);
        }
        e => {
            let (kind, id) = element_key(e);
            let _ = writeln!(out, "{tag} {kind} {id} {}", w.charge);
        }
    }
}

/// `CLAIM name pass|fail checked` lines, offending elements as `WITNESS`
/// lines, every positive element as `POSITIVE`.
pub fn write_audit(report: &AuditReport) -> String {
    let mut out = String::new();
    for r in &report.claims {
        let verdict = if r.passed() { "pass" } else { "fail" };
        let _ = writeln!(out, "CLAIM {} {verdict} {}", r.claim.name(), r.checked);
        for w in &r.witnesses {
            write_witness(&mut out, &format!("WITNESS {}", r.claim.name()), w);
        }
    }
    let _ = writeln!(out, "INITIAL {}", report.initial_total);
    let _ = writeln!(out, "FINAL {}", report.final_total);
    for w in &report.positive {
        write_witness(&mut out, "POSITIVE", w);
    }
    out
}

/// `H` in the graph format; the legend maps node ids to triangles and edge
/// lines to the bad vertex they stand for.
pub fn write_aux_graph(h: &AuxGraph) -> String {
    let mut out = String::new();
    for t in 0..h.node_count() {
        let [a, b, c] = h.triangle(t);
        let _ = writeln!(out, "# node {t}: triangle {a} {b} {c}");
    }
    let mut edges: Vec<_> = h.edges().iter().map(|e| (e.a.min(e.b), e.a.max(e.b), e.bad)).collect();
    edges.sort_unstable();
    for &(a, b, v) in &edges {
        let _ = writeln!(out, "# edge {a} {b}: bad vertex {v}");
    }
    let _ = writeln!(out, "{} {}", h.node_count(), edges.len());
    for (a, b, _) in edges {
        let _ = writeln!(out, "{a} {b}");
    }
    out
}

fn opt<T: ToString>(x: Option<T>) -> String {
    x.map_or("none".to_string(), |v| v.to_string())
}

pub fn write_embedding_report(r: &EmbeddingReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "vertices {}", r.vertex_count);
    let _ = writeln!(out, "edges {}", r.edge_count);
    let _ = writeln!(out, "connected {}", r.connected);
    let _ = writeln!(out, "min_degree {}", opt(r.min_degree));
    let _ = writeln!(out, "four_cycle {}", r.four_cycle.map_or("none".to_string(), |c| join(&c)));
    let _ = writeln!(out, "genus {}", opt(r.genus));
    let _ = writeln!(out, "faces {}", opt(r.face_count));
    if let Some(e) = &r.rotation_error {
        let _ = writeln!(out, "rotation_error {e}");
    }
    let verdict = if r.satisfies_preconditions() { "ok" } else { "violated" };
    let _ = writeln!(out, "preconditions {verdict}");
    out
}

pub fn manifest_line(p: &GenParams) -> String {
    format!(
        "GEN seed {} family {} size {}..{}\n",
        p.seed, p.family, p.min_vertices, p.max_vertices
    )
}
