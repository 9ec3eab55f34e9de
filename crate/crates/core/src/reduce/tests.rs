use super::*;
use crate::families;

fn vid(v: u32) -> VertexId {
    VertexId(v)
}

fn plane(g: &Graph) -> OnePlaneDrawing {
    OnePlaneDrawing::from_graph_trivial(g).unwrap()
}

#[test]
fn single_edge_is_min_deg() {
    let d = plane(&families::path(2));
    let cfg = find_reducible_configuration(&d, 11).unwrap();
    assert_eq!(cfg.kind, ConfigKind::MinDeg1);
    assert_eq!(cfg.removed, vec![vid(0)]);
}

#[test]
fn path_endpoint_reduction_and_extension() {
    let d = plane(&families::path(3));
    let cfg = find_reducible_configuration(&d, 11).unwrap();
    assert_eq!(cfg.kind, ConfigKind::MinDeg1);
    let (d2, recipe) = reduce(&d, &cfg).unwrap();
    assert_eq!(d2.graph(), &families::path(3).remove_vertices(&[vid(0)]).unwrap());
    assert_eq!(
        cfg.plan,
        Plan::Sequence(vec![Step {
            vertex: vid(0),
            forbidden: vec![vid(1), vid(2)]
        }])
    );
    let mut c = Coloring::new();
    c.set(vid(1), 1);
    c.set(vid(2), 2);
    let mut lists = ListAssignment::new();
    for v in 0..3 {
        lists.set(vid(v), [1, 2, 3]);
    }
    let full = extend_coloring(&c, &recipe, &lists).unwrap();
    assert_eq!(full.get(vid(0)), Some(3));
}

#[test]
fn six_cycle_is_adjacent_twos() {
    let d = plane(&families::cycle(6));
    let cfg = find_reducible_configuration(&d, 11).unwrap();
    assert_eq!(cfg.kind, ConfigKind::AdjacentTwos);
    let (d2, _) = reduce(&d, &cfg).unwrap();
    assert_eq!(d2.graph().vertex_count(), 4);
    assert_eq!(d2.graph().edge_count(), 3);
    let Plan::Sequence(steps) = &cfg.plan else { panic!() };
    let (x, y) = (cfg.role("x").unwrap(), cfg.role("y").unwrap());
    let (x1, y1) = (cfg.role("x_1").unwrap(), cfg.role("y_1").unwrap());
    let u = cfg.role("u").unwrap();
    let as_set = |v: &[VertexId]| v.iter().copied().collect::<BTreeSet<_>>();
    assert_eq!(as_set(&steps[0].forbidden), as_set(&[x, y, x1]));
    assert_eq!(as_set(&steps[1].forbidden), as_set(&[u, x, y, y1]));
}

#[test]
fn complete_six_is_small_edge_general() {
    let k6 = crate::catalog::fixture("k6").unwrap().drawing;
    let cfg = find_reducible_configuration(&k6, 11).unwrap();
    assert_eq!(cfg.kind, ConfigKind::SmallEdgeGeneral);
}

#[test]
fn stale_configuration_is_rejected() {
    let d = plane(&families::path(3));
    let cfg = find_reducible_configuration(&d, 11).unwrap();
    let other = plane(&families::path(4));
    assert!(matches!(reduce(&other, &cfg), Err(ReduceError::Stale(_))));
}

#[test]
fn split_plan_branches_on_extremes() {
    let plan = Plan::Split {
        u: vid(0),
        v: vid(1),
        u_others: vec![vid(2), vid(3)],
        v_others: vec![vid(4), vid(5)],
    };
    let mut c = Coloring::new();
    for (v, col) in [(2, 1), (3, 2), (4, 3), (5, 3)] {
        c.set(vid(v), col);
    }
    assert_eq!(plan.resolve(&c).unwrap()[0].vertex, vid(0));
    c.set(vid(5), 4);
    assert_eq!(plan.resolve(&c).unwrap()[0].vertex, vid(1));
}

#[test]
fn empty_candidates_are_reported() {
    let g = families::path(3);
    let recipe = ExtensionRecipe {
        kind: ConfigKind::MinDeg1,
        graph: g.clone(),
        plan: Plan::Sequence(vec![Step {
            vertex: vid(0),
            forbidden: vec![vid(1), vid(2)],
        }]),
    };
    let mut c = Coloring::new();
    c.set(vid(1), 1);
    c.set(vid(2), 2);
    let mut lists = ListAssignment::new();
    lists.set(vid(0), [1, 2]);
    assert!(matches!(
        extend_coloring(&c, &recipe, &lists),
        Err(ReduceError::EmptyCandidates { .. })
    ));
}

#[test]
fn every_kind_round_trips_on_small_graphs() {
    for g in crate::catalog::all_graphs(5) {
        let d = plane(&g);
        for cfg in find_all_configurations(&d, 11) {
            let (d2, recipe) = reduce(&d, &cfg).unwrap();
            assert!(d2.measure() < d.measure());
            let lists = ListAssignment::uniform(d.graph(), 11);
            let c2 = crate::coloring::find_list_coloring(d2.graph(), &lists, true)
                .unwrap()
                .unwrap();
            extend_coloring(&c2, &recipe, &lists).unwrap();
        }
    }
}

#[test]
fn six_face_redraw_removes_three_crossings() {
    let d = crate::catalog::fixture("six-face").unwrap().drawing;
    let p = d.associated_plane_graph().unwrap();
    assert_eq!(find_6face_pattern(&p).len(), 1);
    let better = improve_drawing_6face(&d).unwrap();
    assert_eq!(better.crossing_count(), d.crossing_count() - 3);
    assert_eq!(better.graph(), d.graph());
    assert!(better.is_valid());
}

#[test]
fn no_redraw_without_pattern() {
    assert!(improve_drawing_6face(&plane(&families::cycle(6))).is_none());
    let sf = crate::catalog::fixture("special-4-face").unwrap().drawing;
    assert!(improve_drawing_6face(&sf).is_none());
}

#[test]
fn colorer_on_fixtures() {
    for f in crate::catalog::fixtures() {
        let lists = ListAssignment::uniform(f.drawing.graph(), 11);
        let run = color_1planar(&f.drawing, &lists).unwrap();
        assert!(is_dynamic(f.drawing.graph(), &run.coloring).unwrap(), "{}", f.name);
        for w in run.trace.windows(2) {
            if let TraceEvent::Reduce { .. } = w[0].event {
                assert!(w[0].measure_after < w[0].measure_before);
            }
        }
    }
}

#[test]
fn colorer_rejects_short_lists() {
    let d = plane(&families::cycle(6));
    let lists = ListAssignment::uniform(d.graph(), 10);
    assert!(matches!(color_1planar(&d, &lists), Err(ReduceError::Precondition(_))));
}

#[test]
fn colorer_lifts_k7_star() {
    let f = crate::catalog::fixture("k7-star").unwrap();
    let lists = ListAssignment::uniform(f.drawing.graph(), 11);
    let run = color_1planar(&f.drawing, &lists).unwrap();
    let k7 = families::complete(7);
    let sub = k7.two_subdivision();
    assert_eq!(&sub.graph, f.drawing.graph());
    let lifted = crate::coloring::lift_coloring(&k7, &sub, &run.coloring).unwrap();
    assert!(crate::coloring::is_proper(&k7, &lifted).unwrap());
}

#[test]
fn every_fixture_configuration_extends() {
    let mut kinds = BTreeSet::new();
    for f in crate::catalog::fixtures() {
        let d = &f.drawing;
        let lists = ListAssignment::uniform(d.graph(), 11);
        for cfg in find_all_configurations(d, 11) {
            kinds.insert(cfg.kind);
            let (d2, recipe) = reduce(d, &cfg).unwrap();
            assert!(d2.is_valid(), "{}: {cfg}", f.name);
            let c2 = crate::coloring::find_list_coloring(d2.graph(), &lists, true)
                .unwrap()
                .unwrap();
            extend_coloring(&c2, &recipe, &lists).unwrap_or_else(|e| panic!("{}: {cfg}: {e}", f.name));
        }
    }
    assert_eq!(kinds.len(), ConfigKind::ALL.len());
}

/// Two adjacent hubs and ten common neighbors.
fn book() -> OnePlaneDrawing {
    let mut pts = vec![(0, 0), (100, 0)];
    let mut edges = vec![(0, 1)];
    for k in 1..=5 {
        for sign in [1, -1] {
            pts.push((50, sign * 10 * k));
            let s = pts.len() as u32 - 1;
            edges.push((0, s));
            edges.push((1, s));
        }
    }
    crate::geometry::StraightLineDrawing::new(&pts, &edges)
        .to_drawing()
        .unwrap()
}

#[test]
fn book_graph_reduces_a_triangle() {
    let d = book();
    let cfg = find_reducible_configuration(&d, 11).unwrap();
    assert_eq!(cfg.kind, ConfigKind::TriangleSmall);
    assert_eq!(cfg.role("u"), Some(vid(2)));
    let run = color_1planar(&d, &ListAssignment::uniform(d.graph(), 11)).unwrap();
    assert!(!run.fallback);
}
