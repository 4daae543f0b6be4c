use arbor::discharging::{audit, discharge, Claim, Element};
use arbor::embedding::trace_faces;
use arbor::generate::{gen_instance, Family, GenParams};
use arbor::graph::triangles;
use arbor::structures::{bad_vertices, build_aux_graph, ComponentKind};
use arbor::Rational;

fn q(n: i128, d: i128) -> Rational {
    Rational::new(n, d)
}

#[test]
fn totals_and_banks_on_generated_maps() {
    let families = [Family::PlanarC4Free, Family::ToroidalC4Free, Family::TreeH, Family::CycleH];
    let (mut trees, mut cycles) = (0, 0);
    for seed in 0..80u64 {
        let family = families[seed as usize % 4];
        let p = GenParams { seed, min_vertices: 6, max_vertices: 60, family };
        let inst = gen_instance(&p).unwrap();
        let g = &inst.graph;
        let rot = inst.rotation.as_ref().expect("embedded family");
        let faces = trace_faces(g, rot).unwrap();
        let h = build_aux_graph(g).unwrap();
        let ledger = discharge(g, &faces, &h).unwrap();

        // Euler from the counts alone: n - m + f = 2 - 2 genus.
        let chi = g.vertex_count() as i128 - g.edge_count() as i128 + faces.len() as i128;
        assert_eq!(chi % 2, 0);
        let genus = (2 - chi) / 2;
        assert_eq!(ledger.total(), Rational::integer(12 * (genus - 1)), "seed {seed}");
        assert!(ledger.history().iter().all(|(_, t)| *t == ledger.total()));
        assert!(ledger.face_charges().iter().all(Rational::is_zero));

        let bad = bad_vertices(g);
        for (b, comp) in ledger.banks().iter().enumerate() {
            let good_incidences: usize = comp
                .nodes
                .iter()
                .map(|&t| h.triangle(t).iter().filter(|v| !bad.contains(v)).count())
                .sum();
            let expected = q(2, 5) * Rational::from(good_incidences) - q(2, 5) * Rational::from(comp.edges.len());
            assert_eq!(ledger.charge(Element::Bank(b)), expected);
            match comp.kind {
                ComponentKind::Tree => {
                    trees += 1;
                    assert_eq!(expected, q(6, 5), "seed {seed} bank {b}");
                }
                ComponentKind::Cycle => {
                    cycles += 1;
                    assert!(expected.is_zero());
                }
                ComponentKind::Other => {}
            }
        }

        let report = audit(&ledger, g, &faces, &h).unwrap();
        assert_eq!(report.genus, Some(genus as usize));
        assert!(report.claim(Claim::Conservation).passed());
        assert!(report.claim(Claim::EulerTotal).passed());
        assert!(report.claim(Claim::FacesZero).passed());
        assert!(report.claim(Claim::TreeBankIdentity).passed());
    }
    assert!(trees > 0 && cycles > 0, "trees {trees}, cycles {cycles}");
}

#[test]
fn vertex_charges_match_a_direct_count() {
    for seed in 0..40u64 {
        let family = if seed % 2 == 0 { Family::PlanarC4Free } else { Family::TreeH };
        let p = GenParams { seed, min_vertices: 6, max_vertices: 40, family };
        let inst = gen_instance(&p).unwrap();
        let g = &inst.graph;
        let faces = trace_faces(g, inst.rotation.as_ref().unwrap()).unwrap();
        let h = build_aux_graph(g).unwrap();
        let ledger = discharge(g, &faces, &h).unwrap();
        let bad = bad_vertices(g);
        let tri = triangles(g);
        for v in g.vertices() {
            let mut expect = Rational::integer(g.degree(v) as i128 - 6);
            for walk in faces.faces() {
                let hits = walk.iter().filter(|&&x| x == v).count() as i128;
                let d = walk.len() as i128;
                expect += q(hits * (2 * d - 6), d);
            }
            if bad.contains(&v) {
                // Two triangles, glued into one edge of H.
                expect += q(2, 5);
            } else {
                // Nodes of H are the triangles through some bad vertex.
                let in_h = tri
                    .iter()
                    .filter(|t| t.contains(&v) && t.iter().any(|x| bad.contains(x)))
                    .count();
                expect -= q(2, 5) * Rational::from(in_h);
            }
            assert_eq!(ledger.charge(Element::Vertex(v)), expect, "seed {seed} vertex {v}");
        }
    }
}
