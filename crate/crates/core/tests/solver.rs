use arbor::embedding::check_preconditions;
use arbor::generate::{
    gen_config_instance, gen_instance, scenario_coloring, Family, GenParams, Scenario,
};
use arbor::graph::{find_monochromatic_cycle, is_good, Color, Graph, TwoColoring};
use arbor::oracle::arboricity_at_most;
use arbor::partition::{
    cycle_colors, extend_over_cycle, extend_triangular_config, partition, ExtensionContext,
    ExtensionOutcome, TraceStep, TriangularBranch,
};
use arbor::structures::{
    build_aux_graph, classify_components, find_triangular_cycle_config, ComponentKind, ConfigSearch,
    DegreeCensus,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const FAMILIES: [Family; 4] =
    [Family::PlanarC4Free, Family::ToroidalC4Free, Family::TreeH, Family::CycleH];

#[test]
fn generated_instances_partition() {
    let mut config_steps = 0;
    for seed in 0..60u64 {
        let family = FAMILIES[seed as usize % 4];
        let p = GenParams { seed, min_vertices: 6, max_vertices: 60, family };
        let inst = gen_instance(&p).unwrap();
        let report = check_preconditions(&inst.graph, inst.rotation.as_ref());
        assert!(report.satisfies_preconditions());
        let part = partition(&inst.graph).unwrap_or_else(|e| panic!("seed {seed} {family}: {e}"));
        assert!(part.coloring.is_total());
        assert!(find_monochromatic_cycle(&inst.graph, &part.coloring).is_none());
        config_steps += part.configuration_steps();
    }
    eprintln!("configuration steps over 60 instances: {config_steps}");
}

#[test]
fn small_instances_agree_with_oracle() {
    let mut checked = 0;
    for seed in 0..80u64 {
        let family = FAMILIES[seed as usize % 2];
        let p = GenParams { seed, min_vertices: 4, max_vertices: 16, family };
        let Ok(inst) = gen_instance(&p) else { continue };
        let solved = partition(&inst.graph).is_ok();
        assert_eq!(solved, arboricity_at_most(&inst.graph, 2).unwrap(), "seed {seed}");
        checked += 1;
    }
    assert!(checked >= 40, "only {checked} small instances");
}

#[test]
fn config_instances_fire_the_configuration_step() {
    for s in 5..10 {
        let c = gen_config_instance(100 + s as u64, s).unwrap();
        let part = partition(&c.graph).unwrap();
        assert!(is_good(&c.graph, &part.coloring));
        let fired: Vec<_> = part
            .trace
            .iter()
            .filter_map(|t| match t {
                TraceStep::Configuration { cycle, .. } => Some(cycle.len()),
                _ => None,
            })
            .collect();
        assert_eq!(fired, vec![s]);
    }
}

#[test]
fn every_branch_is_reachable() {
    let mut seen = std::collections::BTreeSet::new();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let scenarios = [
        Scenario::Any,
        Scenario::CaseOne { force_flip: false },
        Scenario::CaseOne { force_flip: true },
        Scenario::CaseTwo { force_flip: false },
        Scenario::CaseTwo { force_flip: true },
    ];
    for seed in 0..20u64 {
        let s = 5 + (seed as usize % 3);
        let c = gen_config_instance(seed, s).unwrap();
        for sc in scenarios {
            for _ in 0..20 {
                let Some(f) = scenario_coloring(&c.graph, &c.config, sc, &mut rng) else { continue };
                let ext = extend_triangular_config(&c.graph, &c.config, &f).unwrap();
                assert!(ext.coloring.is_total());
                assert!(is_good(&c.graph, &ext.coloring));
                seen.insert(format!("{:?}", ext.branch));
                break;
            }
        }
    }
    for b in [
        TriangularBranch::Extended,
        TriangularBranch::CaseOne { flipped_apex: false },
        TriangularBranch::CaseOne { flipped_apex: true },
        TriangularBranch::CaseTwo { alternation_flipped: false },
        TriangularBranch::CaseTwo { alternation_flipped: true },
    ] {
        assert!(seen.contains(&format!("{b:?}")), "missing {b:?}, saw {seen:?}");
    }
}

/// A cycle of length `s` whose vertices get two private external neighbors,
/// plus random edges among the externals kept only while the coloring stays
/// good.
fn random_context(rng: &mut ChaCha8Rng, s: usize) -> (Graph, ExtensionContext, TwoColoring) {
    let pool = rng.gen_range(2 * s / 2 + 2..=2 * s);
    let n = s + pool;
    let mut edges: Vec<(usize, usize)> = (0..s).map(|i| (i.min((i + 1) % s), i.max((i + 1) % s))).collect();
    for i in 0..s {
        let a = s + rng.gen_range(0..pool);
        let mut b = s + rng.gen_range(0..pool);
        while b == a {
            b = s + rng.gen_range(0..pool);
        }
        edges.push((i, a));
        edges.push((i, b));
    }
    let mut f = TwoColoring::new(n);
    for v in s..n {
        f.set(v, if rng.gen_bool(0.5) { Color::One } else { Color::Two });
    }
    for _ in 0..pool {
        let a = s + rng.gen_range(0..pool);
        let b = s + rng.gen_range(0..pool);
        if a == b || edges.contains(&(a.min(b), a.max(b))) {
            continue;
        }
        edges.push((a.min(b), a.max(b)));
        let g = Graph::new(n, &edges).unwrap();
        if !is_good(&g, &f) {
            edges.pop();
        }
    }
    let g = Graph::new(n, &edges).unwrap();
    let ctx = ExtensionContext::from_cycle(&g, (0..s).collect()).unwrap();
    (g, ctx, f)
}

#[test]
fn extension_cases_match_their_definitions() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for trial in 0..2000 {
        let s = 5 + trial % 5;
        let (g, ctx, f) = random_context(&mut rng, s);
        let colors: Vec<Color> = ctx.external.iter().flatten().map(|&x| f.get(x).unwrap()).collect();
        let all_same = colors.iter().all(|&c| c == colors[0]);
        let all_bichromatic = ctx.external.iter().all(|&[x, y]| f.get(x) != f.get(y));
        match extend_over_cycle(&g, &ctx, &f).unwrap() {
            ExtensionOutcome::CaseOne(c) => {
                assert!(all_same);
                assert_eq!(c, colors[0]);
            }
            ExtensionOutcome::CaseTwo => assert!(all_bichromatic && s % 2 == 1),
            ExtensionOutcome::Extended(out) => {
                assert!(!all_same && !(all_bichromatic && s % 2 == 1));
                assert!(out.is_total() && is_good(&g, &out));
            }
        }
    }
}

#[test]
fn worked_cycle_examples() {
    let p = |c: [u8; 2]| [Color::from_number(c[0]).unwrap(), Color::from_number(c[1]).unwrap()];
    assert_eq!(cycle_colors(&[p([1, 1]); 5]), Err(ExtensionOutcome::CaseOne(Color::One)));
    assert_eq!(cycle_colors(&[p([1, 2]); 5]), Err(ExtensionOutcome::CaseTwo));
    let alt = cycle_colors(&[p([1, 2]); 6]).unwrap();
    assert_eq!(alt.iter().map(|c| c.number()).collect::<Vec<_>>(), vec![1, 2, 1, 2, 1, 2]);
}

#[test]
fn valid_min_degree_four_instances_reduce() {
    // Every embedded valid instance with minimum degree at least 4 must hold
    // a configuration, and H then has no component of the third kind unless
    // a configuration exists.
    let mut min_four = 0;
    for seed in 0..200u64 {
        let family = if seed % 2 == 0 { Family::ToroidalC4Free } else { Family::PlanarC4Free };
        let p = GenParams { seed, min_vertices: 6, max_vertices: 60, family };
        let inst = gen_instance(&p).unwrap();
        let g = &inst.graph;
        let search = find_triangular_cycle_config(g);
        assert_ne!(search, ConfigSearch::BudgetExhausted);
        if g.min_degree() >= Some(4) {
            min_four += 1;
            assert!(matches!(search, ConfigSearch::Found(_)), "seed {seed}");
        }
        if search == ConfigSearch::NotFound && g.min_degree() >= Some(4) {
            let h = build_aux_graph(g).unwrap();
            assert!(classify_components(&h).iter().all(|c| c.kind != ComponentKind::Other));
        }
    }
    eprintln!("instances with minimum degree 4: {min_four}");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn tree_census_leaf_count(parents in prop::collection::vec(any::<prop::sample::Index>(), 1..200)) {
        // Attach node i+1 to an earlier node with fewer than 3 neighbors.
        let mut deg = vec![0usize];
        let mut edges = Vec::new();
        for (i, pick) in parents.iter().enumerate() {
            let open: Vec<usize> = (0..=i).filter(|&v| deg[v] < 3).collect();
            let p = open[pick.index(open.len())];
            deg[p] += 1;
            deg.push(1);
            edges.push((p, i + 1));
        }
        let c = DegreeCensus::of_tree(deg.len(), &edges).unwrap();
        prop_assert_eq!(c.z1, c.z3 + 2);
        prop_assert_eq!(c.node_count(), deg.len());
    }
}
