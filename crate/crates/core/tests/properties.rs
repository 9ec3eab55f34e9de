use dyncolor::coloring::{chi, chi_dynamic, colors_used, is_dynamic, respects_lists};
use dyncolor::discharge::{apply_rules, apply_rules_in_order, component_totals, initial_charges, Rule};
use dyncolor::geometry::{random_drawing, RandomDrawingParams};
use dyncolor::reduce::{color_1planar, TraceEvent};
use dyncolor::text::{parse_drawing, parse_graph, write_drawing, write_graph};
use dyncolor::{Graph, ListAssignment, OnePlaneDrawing};
use num_rational::Rational64;
use proptest::prelude::*;

fn drawing(vertices: usize, one_plane: bool, seed: u64) -> OnePlaneDrawing {
    let params = RandomDrawingParams {
        vertices,
        extent: 1000,
        keep: 0.8,
        one_plane,
    };
    random_drawing(params, seed).to_drawing().unwrap()
}

fn small_graph() -> impl Strategy<Value = Graph> {
    (2u32..=7).prop_flat_map(|n| {
        let pairs: Vec<(u32, u32)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        let k = pairs.len();
        proptest::collection::vec(any::<bool>(), k).prop_map(move |mask| {
            let edges: Vec<(u32, u32)> = pairs.iter().zip(&mask).filter(|(_, m)| **m).map(|(e, _)| *e).collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn charge_is_conserved_per_component(n in 3usize..30, one_plane in any::<bool>(), seed in any::<u64>()) {
        let d = drawing(n, one_plane, seed);
        let p = d.associated_plane_graph().unwrap();
        let l = apply_rules(&p, &initial_charges(&p));
        for (init, fin) in component_totals(&p, &l) {
            prop_assert_eq!(init, Rational64::from_integer(-8));
            prop_assert_eq!(fin, init);
        }
    }

    #[test]
    fn rule_order_is_irrelevant(n in 3usize..25, seed in any::<u64>()) {
        let d = drawing(n, true, seed);
        let p = d.associated_plane_graph().unwrap();
        let init = initial_charges(&p);
        let a = apply_rules(&p, &init);
        let b = apply_rules_in_order(&p, &init, [Rule::R3, Rule::R1, Rule::R4, Rule::R2]);
        prop_assert_eq!(a.finals(), b.finals());
    }

    #[test]
    fn colorer_output_is_a_dynamic_list_coloring(n in 2usize..40, one_plane in any::<bool>(), seed in any::<u64>(), shift in 0u32..5) {
        let d = drawing(n, one_plane, seed);
        let g = d.graph();
        // shifted 11-lists so different vertices see different palettes
        let mut lists = ListAssignment::new();
        for v in g.vertices() {
            let off = (v.0 * shift) % 7;
            lists.set(v, (off + 1..=off + 11).collect::<Vec<u32>>());
        }
        let run = color_1planar(&d, &lists).unwrap();
        prop_assert!(is_dynamic(g, &run.coloring).unwrap());
        prop_assert!(respects_lists(g, &run.coloring, &lists).unwrap());
        for t in &run.trace {
            if let TraceEvent::Reduce { .. } = t.event {
                prop_assert!(t.measure_after < t.measure_before);
            }
        }
    }

    #[test]
    fn colorer_never_beats_the_exact_value(n in 2usize..9, seed in any::<u64>()) {
        let d = drawing(n, false, seed);
        let run = color_1planar(&d, &ListAssignment::uniform(d.graph(), 11)).unwrap();
        let exact = chi_dynamic(d.graph()).unwrap().value;
        prop_assert!(colors_used(&run.coloring).len() >= exact);
    }

    #[test]
    fn drawing_text_round_trips(n in 2usize..30, one_plane in any::<bool>(), seed in any::<u64>()) {
        let d = drawing(n, one_plane, seed);
        let text = write_drawing(&d);
        let back = parse_drawing(&text).unwrap();
        prop_assert_eq!(write_drawing(&back), text);
        prop_assert_eq!(back.graph(), d.graph());
    }

    #[test]
    fn graph_text_round_trips(g in small_graph()) {
        prop_assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
    }

    #[test]
    fn chromatic_below_dynamic(g in small_graph()) {
        let x = chi(&g).unwrap().value;
        let xd = chi_dynamic(&g).unwrap().value;
        prop_assert!(x <= xd);
    }
}
