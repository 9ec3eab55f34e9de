use super::*;
use crate::catalog::fixture;
use crate::drawing::OnePlaneDrawing;
use crate::families;

fn q(n: i64) -> Rational64 {
    Rational64::from_integer(n)
}

fn run(d: &OnePlaneDrawing) -> (AssociatedPlaneGraph, ChargeLedger) {
    let p = d.associated_plane_graph().unwrap();
    let l = apply_rules(&p, &initial_charges(&p));
    (p, l)
}

fn face_final(p: &AssociatedPlaneGraph, l: &ChargeLedger, deg: usize) -> Vec<Rational64> {
    let finals = l.finals();
    p.faces()
        .filter(|(_, f)| f.degree() == deg)
        .map(|(id, _)| finals[&Element::Face(id)])
        .collect()
}

#[test]
fn cross_star_charges() {
    let d = fixture("cross-star").unwrap().drawing;
    let p = d.associated_plane_graph().unwrap();
    let l = initial_charges(&p);
    let mut vs: Vec<Rational64> = p.vertices().iter().map(|v| l.initial(Element::Vertex(*v))).collect();
    vs.sort();
    assert_eq!(vs, vec![q(-3), q(-3), q(-3), q(-3), q(0)]);
    assert_eq!(face_final(&p, &l, 8), vec![q(4)]);
    assert_eq!(l.total_initial(), q(-8));
    let after = apply_rules(&p, &l);
    let neg = negative_elements(&after);
    assert_eq!(neg.len(), 4);
    assert!(neg
        .iter()
        .all(|(e, c)| *c == q(-3) && matches!(e, Element::Vertex(PlaneVertex::True(_)))));
}

#[test]
fn six_cycle_two_vertices_fall_short() {
    let d = fixture("c6").unwrap().drawing;
    let (p, l) = run(&d);
    assert_eq!(l.total_final(), q(-8));
    for v in d.graph().vertices() {
        assert_eq!(
            l.final_charge(Element::Vertex(PlaneVertex::True(v))),
            Rational64::new(-4, 3)
        );
    }
    let claims = audit_claims(&d, &p, &l);
    let two = claims.iter().find(|c| c.claim == Claim::TwoVertexNonneg).unwrap();
    assert!(!two.holds);
    assert_eq!(two.witnesses.len(), 6);
    match &two.witnesses[0].attachment {
        Some(Attachment::Configuration { config }) => {
            assert_eq!(config.kind, crate::reduce::ConfigKind::AdjacentTwos)
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn octahedron_totals() {
    let d = fixture("octahedron").unwrap().drawing;
    let (p, l) = run(&d);
    assert_eq!(l.total_initial(), q(-8));
    assert_eq!(l.total_final(), q(-8));
    assert_eq!(component_totals(&p, &l), vec![(q(-8), q(-8))]);
}

#[test]
fn disconnected_components_each_sum_to_minus_eight() {
    let d = fixture("disconnected").unwrap().drawing;
    let (p, l) = run(&d);
    let totals = component_totals(&p, &l);
    assert_eq!(totals.len(), 3);
    assert!(totals.iter().all(|t| *t == (q(-8), q(-8))));
}

#[test]
fn big_true_triangle_balances() {
    let d = fixture("big-triangle").unwrap().drawing;
    let (p, l) = run(&d);
    assert_eq!(face_final(&p, &l, 3), vec![q(0)]);
}

#[test]
fn special_four_face_balances() {
    let d = fixture("special-4-face").unwrap().drawing;
    let (p, l) = run(&d);
    let sf = p.special_4_faces(BIG_DEGREE);
    assert_eq!(sf.len(), 1);
    let f = Element::Face(sf[0].face);
    assert_eq!(l.net(f, Rule::R3), q(0));
    assert_eq!(l.final_charge(f), q(0));
    assert_eq!(l.net(Element::Vertex(PlaneVertex::True(sf[0].low)), Rule::R3), q(1));
}

#[test]
fn rule_order_does_not_matter() {
    for f in crate::catalog::fixtures() {
        let p = f.drawing.associated_plane_graph().unwrap();
        let init = initial_charges(&p);
        let a = apply_rules(&p, &init);
        let b = apply_rules_in_order(&p, &init, [Rule::R4, Rule::R3, Rule::R2, Rule::R1]);
        assert_eq!(a.finals(), b.finals(), "{}", f.name);
    }
}

#[test]
fn transfers_are_local() {
    for f in crate::catalog::fixtures() {
        let (p, l) = run(&f.drawing);
        for t in l.transfers() {
            let (v, face) = match (t.from, t.to) {
                (Element::Vertex(v), Element::Face(x)) | (Element::Face(x), Element::Vertex(v)) => (v, x),
                _ => panic!("vertex to vertex transfer"),
            };
            assert!(p.face_vertices(face).contains(&v), "{}", f.name);
        }
    }
}

#[test]
fn complete_six_reports_small_edges() {
    let d = fixture("k6").unwrap().drawing;
    let r = discharge_report(&d).unwrap();
    assert_eq!(r.total_final, "-8");
    assert!(!r.negative.is_empty());
    let attached: Vec<_> = r
        .claims
        .iter()
        .flat_map(|c| &c.witnesses)
        .filter_map(|w| match &w.attachment {
            Some(Attachment::Configuration { config }) => Some(config.kind),
            _ => None,
        })
        .collect();
    assert!(attached.contains(&crate::reduce::ConfigKind::SmallEdgeGeneral));
}

#[test]
fn six_face_claim_offers_redraw() {
    let d = fixture("six-face").unwrap().drawing;
    let r = discharge_report(&d).unwrap();
    let c = r.claims.iter().find(|c| c.claim == Claim::SixFaceSpecials).unwrap();
    assert!(!c.holds);
    assert_eq!(
        c.witnesses[0].attachment,
        Some(Attachment::Redraw {
            crossings_before: 3,
            crossings_after: 0
        })
    );
    let adj = r
        .claims
        .iter()
        .find(|c| c.claim == Claim::NoAdjacentSpecial4Faces)
        .unwrap();
    assert!(adj.holds);
}

#[test]
fn alpha_bound_for_eleven_vertex() {
    let h = Rational64::new(1, 2);
    let alpha = [q(1), q(0), q(1), h, h, q(1), h, h, q(1), h, h];
    let omega = consecutive_sums(&alpha);
    assert!(omega.iter().all(|w| *w <= q(2)));
    assert_eq!(alpha_sum_bound(&alpha), alpha.iter().sum::<Rational64>());
    assert_eq!(alpha_sum_bound(&alpha), q(7));
    assert_eq!(q(11) - q(4) - alpha_sum_bound(&alpha), q(0));
}

#[test]
fn path_has_no_faces_to_share() {
    let d = OnePlaneDrawing::from_graph_trivial(&families::path(3)).unwrap();
    let (_, l) = run(&d);
    assert_eq!(l.total_final(), q(-8));
}

#[test]
fn report_renders() {
    let d = fixture("k4-crossed").unwrap().drawing;
    let r = discharge_report(&d).unwrap();
    let text = r.to_text();
    assert!(text.contains("total: initial -8 final -8"), "{text}");
    let json = serde_json::to_value(&r).unwrap();
    assert_eq!(json["total_final"], "-8");
}
