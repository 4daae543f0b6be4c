//! Exact charge ledgers over an embedded graph, the three transfer rules and
//! the per-claim audit.
//!
//! Vertices start at `d(v) - 6`, faces at `2 d(f) - 6`, and each component
//! of the auxiliary graph gets a bank starting at zero. Faces spread their
//! charge over incidences (R1), good vertices pay `2/5` to the bank of every
//! auxiliary triangle they lie on (R2), and banks pay `2/5` to each of their
//! bad vertices (R3).

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::embedding::{genus_from_faces, FaceSet};
use crate::graph::{Graph, Vertex};
use crate::rational::Rational;
use crate::structures::{classify_components, degree_census, AuxComponent, AuxGraph, ComponentKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Phase {
    Initial,
    AfterR1,
    AfterR2,
    AfterR3,
}

impl Phase {
    pub fn name(self) -> &'static str {
        match self {
            Phase::Initial => "initial",
            Phase::AfterR1 => "after_R1",
            Phase::AfterR2 => "after_R2",
            Phase::AfterR3 => "after_R3",
        }
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DischargeError {
    #[error("rule needs phase {expected}, ledger is at {found}")]
    WrongPhase { expected: Phase, found: Phase },
    #[error("ledger was built for different inputs")]
    Mismatch,
}

/// The element of the ledger a charge belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Element {
    Vertex(Vertex),
    Face(usize),
    Bank(usize),
    /// The sum over all elements at a phase.
    Total(Phase),
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Vertex(v) => write!(f, "vertex {v}"),
            Element::Face(i) => write!(f, "face {i}"),
            Element::Bank(b) => write!(f, "bank {b}"),
            Element::Total(p) => write!(f, "total {p}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChargeLedger {
    vertex: Vec<Rational>,
    face: Vec<Rational>,
    bank: Vec<Rational>,
    banks: Vec<AuxComponent>,
    phase: Phase,
    history: Vec<(Phase, Rational)>,
}

impl ChargeLedger {
    pub fn phase(&self) -> Phase {
        self.phase
    }

    pub fn vertex_charges(&self) -> &[Rational] {
        &self.vertex
    }

    pub fn face_charges(&self) -> &[Rational] {
        &self.face
    }

    pub fn bank_charges(&self) -> &[Rational] {
        &self.bank
    }

    /// The component of `H` behind each bank.
    pub fn banks(&self) -> &[AuxComponent] {
        &self.banks
    }

    pub fn charge(&self, e: Element) -> Rational {
        match e {
            Element::Vertex(v) => self.vertex[v].clone(),
            Element::Face(i) => self.face[i].clone(),
            Element::Bank(b) => self.bank[b].clone(),
            Element::Total(p) => match self.history.iter().find(|(q, _)| *q == p) {
                Some((_, t)) => t.clone(),
                None => self.total(),
            },
        }
    }

    /// All elements in dump order: vertices, faces, banks.
    pub fn elements(&self) -> impl Iterator<Item = (Element, &Rational)> {
        let v = self.vertex.iter().enumerate().map(|(i, c)| (Element::Vertex(i), c));
        let f = self.face.iter().enumerate().map(|(i, c)| (Element::Face(i), c));
        let b = self.bank.iter().enumerate().map(|(i, c)| (Element::Bank(i), c));
        v.chain(f).chain(b)
    }

    pub fn total(&self) -> Rational {
        self.vertex.iter().chain(&self.face).chain(&self.bank).sum()
    }

    /// Total after each phase reached so far.
    pub fn history(&self) -> &[(Phase, Rational)] {
        &self.history
    }

    fn advance(&mut self, from: Phase, to: Phase) -> Result<(), DischargeError> {
        if self.phase != from {
            return Err(DischargeError::WrongPhase { expected: from, found: self.phase });
        }
        self.phase = to;
        Ok(())
    }

    fn record(&mut self) {
        let t = self.total();
        self.history.push((self.phase, t));
    }
}

fn two_fifths() -> Rational {
    Rational::new(2, 5)
}

/// `d(v) - 6` per vertex, `2 d(f) - 6` per face, zero per bank.
pub fn initial_charges(g: &Graph, faces: &FaceSet, h: &AuxGraph) -> ChargeLedger {
    let vertex = g.vertices().map(|v| Rational::integer(g.degree(v) as i128 - 6)).collect();
    let face = (0..faces.len()).map(|i| Rational::integer(2 * faces.degree(i) as i128 - 6)).collect();
    let banks = classify_components(h);
    let mut ledger = ChargeLedger {
        vertex,
        face,
        bank: vec![Rational::zero(); banks.len()],
        banks,
        phase: Phase::Initial,
        history: Vec::new(),
    };
    ledger.record();
    ledger
}

/// R1: each face splits its charge evenly over its incidences.
pub fn apply_r1(mut ledger: ChargeLedger, faces: &FaceSet) -> Result<ChargeLedger, DischargeError> {
    if faces.len() != ledger.face.len() {
        return Err(DischargeError::Mismatch);
    }
    ledger.advance(Phase::Initial, Phase::AfterR1)?;
    for i in 0..faces.len() {
        let walk = faces.face(i);
        let share = &ledger.face[i] / &Rational::from(walk.len());
        for &v in walk {
            ledger.vertex[v] += &share;
        }
        ledger.face[i] = Rational::zero();
    }
    ledger.record();
    Ok(ledger)
}

/// R2: every good vertex pays `2/5` to a bank for each of the bank's
/// triangles it lies on.
pub fn apply_r2(mut ledger: ChargeLedger, g: &Graph, h: &AuxGraph) -> Result<ChargeLedger, DischargeError> {
    check_inputs(&ledger, g, h)?;
    ledger.advance(Phase::AfterR1, Phase::AfterR2)?;
    let mut bad = vec![false; g.vertex_count()];
    for e in h.edges() {
        bad[e.bad] = true;
    }
    let fee = two_fifths();
    for (b, comp) in ledger.banks.iter().enumerate() {
        for &t in &comp.nodes {
            for v in h.triangle(t) {
                if !bad[v] {
                    ledger.vertex[v] -= &fee;
                    ledger.bank[b] += &fee;
                }
            }
        }
    }
    ledger.record();
    Ok(ledger)
}

/// R3: every bank pays `2/5` to each bad vertex labelling one of its edges.
pub fn apply_r3(mut ledger: ChargeLedger, g: &Graph, h: &AuxGraph) -> Result<ChargeLedger, DischargeError> {
    check_inputs(&ledger, g, h)?;
    ledger.advance(Phase::AfterR2, Phase::AfterR3)?;
    let fee = two_fifths();
    for (b, comp) in ledger.banks.iter().enumerate() {
        for &e in &comp.edges {
            ledger.bank[b] -= &fee;
            ledger.vertex[h.edges()[e].bad] += &fee;
        }
    }
    ledger.record();
    Ok(ledger)
}

fn check_inputs(ledger: &ChargeLedger, g: &Graph, h: &AuxGraph) -> Result<(), DischargeError> {
    let nodes: usize = ledger.banks.iter().map(|c| c.nodes.len()).sum();
    if ledger.vertex.len() != g.vertex_count() || nodes != h.node_count() {
        return Err(DischargeError::Mismatch);
    }
    Ok(())
}

/// Initial charges followed by R1, R2 and R3.
pub fn discharge(g: &Graph, faces: &FaceSet, h: &AuxGraph) -> Result<ChargeLedger, DischargeError> {
    let ledger = initial_charges(g, faces, h);
    let ledger = apply_r1(ledger, faces)?;
    let ledger = apply_r2(ledger, g, h)?;
    apply_r3(ledger, g, h)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Claim {
    /// Every vertex ends nonnegative.
    VertexNonnegative,
    /// Every vertex of degree at least 5 ends positive.
    HighDegreePositive,
    CycleBankNonnegative,
    TreeBankPositive,
    /// `(4/5) z1 + (2/5) z2 = (2/5) n + 4/5` for each tree bank.
    TreeBankIdentity,
    FacesZero,
    /// The total is the same after every rule.
    Conservation,
    /// The initial total is `12 (g - 1)`.
    EulerTotal,
    /// No component of `H` is neither a cycle nor a tree.
    ComponentsCycleOrTree,
}

impl Claim {
    pub const ALL: [Claim; 9] = [
        Claim::VertexNonnegative,
        Claim::HighDegreePositive,
        Claim::CycleBankNonnegative,
        Claim::TreeBankPositive,
        Claim::TreeBankIdentity,
        Claim::FacesZero,
        Claim::Conservation,
        Claim::EulerTotal,
        Claim::ComponentsCycleOrTree,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Claim::VertexNonnegative => "vertex_nonnegative",
            Claim::HighDegreePositive => "degree5_positive",
            Claim::CycleBankNonnegative => "cycle_bank_nonnegative",
            Claim::TreeBankPositive => "tree_bank_positive",
            Claim::TreeBankIdentity => "tree_bank_identity",
            Claim::FacesZero => "faces_zero",
            Claim::Conservation => "conservation",
            Claim::EulerTotal => "euler_total",
            Claim::ComponentsCycleOrTree => "components_cycle_or_tree",
        }
    }
}

/// An offending element and its exact charge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub element: Element,
    pub charge: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimResult {
    pub claim: Claim,
    /// Number of elements the claim was evaluated on.
    pub checked: usize,
    pub witnesses: Vec<Witness>,
}

impl ClaimResult {
    pub fn passed(&self) -> bool {
        self.witnesses.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditReport {
    pub claims: Vec<ClaimResult>,
    pub genus: Option<usize>,
    pub initial_total: Rational,
    pub final_total: Rational,
    /// Every element with positive final charge.
    pub positive: Vec<Witness>,
}

impl AuditReport {
    pub fn claim(&self, c: Claim) -> &ClaimResult {
        self.claims.iter().find(|r| r.claim == c).expect("every claim is evaluated")
    }

    pub fn all_passed(&self) -> bool {
        self.claims.iter().all(ClaimResult::passed)
    }
}

/// Evaluates every claim on a ledger that has been through R3.
pub fn audit(
    ledger: &ChargeLedger,
    g: &Graph,
    faces: &FaceSet,
    h: &AuxGraph,
) -> Result<AuditReport, DischargeError> {
    check_inputs(ledger, g, h)?;
    if ledger.phase != Phase::AfterR3 {
        return Err(DischargeError::WrongPhase { expected: Phase::AfterR3, found: ledger.phase });
    }
    let zero = Rational::zero();
    let mut claims = Vec::new();
    let mut push = |claim: Claim, checked: usize, witnesses: Vec<Witness>| {
        claims.push(ClaimResult { claim, checked, witnesses });
    };
    let witness = |element: Element| Witness { element, charge: ledger.charge(element) };

    let vs: Vec<Vertex> = g.vertices().collect();
    push(
        Claim::VertexNonnegative,
        vs.len(),
        vs.iter().filter(|&&v| ledger.vertex[v] < zero).map(|&v| witness(Element::Vertex(v))).collect(),
    );
    let high: Vec<Vertex> = vs.iter().copied().filter(|&v| g.degree(v) >= 5).collect();
    push(
        Claim::HighDegreePositive,
        high.len(),
        high.iter().filter(|&&v| !ledger.vertex[v].is_positive()).map(|&v| witness(Element::Vertex(v))).collect(),
    );

    let of_kind = |k: ComponentKind| -> Vec<usize> {
        (0..ledger.banks.len()).filter(|&b| ledger.banks[b].kind == k).collect()
    };
    let cycles = of_kind(ComponentKind::Cycle);
    push(
        Claim::CycleBankNonnegative,
        cycles.len(),
        cycles.iter().filter(|&&b| ledger.bank[b] < zero).map(|&b| witness(Element::Bank(b))).collect(),
    );
    let trees = of_kind(ComponentKind::Tree);
    push(
        Claim::TreeBankPositive,
        trees.len(),
        trees.iter().filter(|&&b| !ledger.bank[b].is_positive()).map(|&b| witness(Element::Bank(b))).collect(),
    );
    let identity_fails: Vec<Witness> = trees
        .iter()
        .filter(|&&b| {
            let Ok(c) = degree_census(h, &ledger.banks[b]) else { return true };
            let lhs = Rational::new(4, 5) * Rational::from(c.z1) + Rational::new(2, 5) * Rational::from(c.z2);
            let rhs = Rational::new(2, 5) * Rational::from(c.node_count()) + Rational::new(4, 5);
            lhs != rhs
        })
        .map(|&b| witness(Element::Bank(b)))
        .collect();
    push(Claim::TreeBankIdentity, trees.len(), identity_fails);

    push(
        Claim::FacesZero,
        ledger.face.len(),
        (0..ledger.face.len()).filter(|&i| !ledger.face[i].is_zero()).map(|i| witness(Element::Face(i))).collect(),
    );

    let initial_total = ledger.history[0].1.clone();
    let final_total = ledger.total();
    let drift: Vec<Witness> = ledger
        .history
        .iter()
        .filter(|(_, t)| *t != initial_total)
        .map(|(p, t)| Witness { element: Element::Total(*p), charge: t.clone() })
        .collect();
    push(Claim::Conservation, ledger.history.len(), drift);

    let genus = genus_from_faces(g, faces).ok();
    let euler = match genus {
        Some(gg) if initial_total == Rational::integer(12 * (gg as i128 - 1)) => Vec::new(),
        _ => vec![Witness { element: Element::Total(Phase::Initial), charge: initial_total.clone() }],
    };
    push(Claim::EulerTotal, 1, euler);

    let other = of_kind(ComponentKind::Other);
    push(
        Claim::ComponentsCycleOrTree,
        ledger.banks.len(),
        other.iter().map(|&b| witness(Element::Bank(b))).collect(),
    );

    let positive = ledger
        .elements()
        .filter(|(_, c)| c.is_positive())
        .map(|(element, charge)| Witness { element, charge: charge.clone() })
        .collect();
    Ok(AuditReport { claims, genus, initial_total, final_total, positive })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::trace_faces;
    use crate::maps::{self, EmbeddedGraph};
    use crate::structures::build_aux_graph;

    fn run(m: &EmbeddedGraph) -> (FaceSet, AuxGraph, ChargeLedger) {
        let faces = trace_faces(&m.graph, &m.rotation).unwrap();
        let h = build_aux_graph(&m.graph).unwrap();
        let ledger = discharge(&m.graph, &faces, &h).unwrap();
        (faces, h, ledger)
    }

    #[test]
    fn initial_values() {
        let m = maps::dodecahedron();
        let faces = trace_faces(&m.graph, &m.rotation).unwrap();
        let h = build_aux_graph(&m.graph).unwrap();
        let l = initial_charges(&m.graph, &faces, &h);
        assert!(l.vertex_charges().iter().all(|c| *c == Rational::integer(-3)));
        assert!(l.face_charges().iter().all(|c| *c == Rational::integer(4)));
        assert_eq!(l.total(), Rational::integer(-12));
    }

    #[test]
    fn pentagons_send_four_fifths() {
        let m = maps::dodecahedron();
        let (_, _, l) = run(&m);
        // -3 + 3 * 4/5
        assert!(l.vertex_charges().iter().all(|c| *c == Rational::new(-3, 5)));
        assert!(l.face_charges().iter().all(Rational::is_zero));
    }

    #[test]
    fn kagome_bad_vertices() {
        let m = maps::kagome_torus(4, 6);
        let (faces, h, l) = run(&m);
        assert_eq!(h.edge_count(), m.graph.vertex_count());
        // Two triangles and two hexagons: -2 + 2 * 1 + 2/5.
        assert!(l.vertex_charges().iter().all(|c| *c == Rational::new(2, 5)));
        let report = audit(&l, &m.graph, &faces, &h).unwrap();
        assert_eq!(report.genus, Some(1));
        assert!(report.initial_total.is_zero());
        assert!(report.claim(Claim::EulerTotal).passed());
        assert!(report.claim(Claim::Conservation).passed());
        // One component with every triangle of degree 3.
        assert!(!report.claim(Claim::ComponentsCycleOrTree).passed());
    }

    #[test]
    fn phases_are_enforced() {
        let m = maps::dodecahedron();
        let faces = trace_faces(&m.graph, &m.rotation).unwrap();
        let h = build_aux_graph(&m.graph).unwrap();
        let l = initial_charges(&m.graph, &faces, &h);
        assert_eq!(
            apply_r2(l.clone(), &m.graph, &h).unwrap_err(),
            DischargeError::WrongPhase { expected: Phase::AfterR1, found: Phase::Initial }
        );
        assert!(audit(&l, &m.graph, &faces, &h).is_err());
        let l = apply_r1(l, &faces).unwrap();
        assert!(apply_r1(l, &faces).is_err());
    }

    #[test]
    fn history_is_conserved() {
        let (_, _, l) = run(&maps::petersen_torus());
        let phases: Vec<Phase> = l.history().iter().map(|(p, _)| *p).collect();
        assert_eq!(phases, vec![Phase::Initial, Phase::AfterR1, Phase::AfterR2, Phase::AfterR3]);
        assert!(l.history().iter().all(|(_, t)| t.is_zero()));
    }
}
