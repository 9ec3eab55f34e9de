//! Candidate enumeration for every configuration kind.

use std::collections::BTreeSet;

use super::{fingerprint, guard, indexed, roles, AddedEdge, ConfigKind, Plan, ReducibleConfig, Step};
use crate::drawing::{AssociatedPlaneGraph, OnePlaneDrawing, PlaneVertex};
use crate::graph::{Graph, VertexId};

/// A configuration before validation. `added` lists alternatives in
/// preference order; an empty list means no edge is added.
struct Candidate {
    kind: ConfigKind,
    roles: Vec<(String, VertexId)>,
    removed: Vec<VertexId>,
    added: Vec<AddedEdge>,
    plan: Plan,
}

fn role(name: &str, v: VertexId) -> (String, VertexId) {
    (name.to_string(), v)
}

fn least_except(g: &Graph, v: VertexId, except: &[VertexId]) -> Option<VertexId> {
    g.neighbors(v).iter().copied().find(|x| !except.contains(x))
}

fn single(vertex: VertexId, forbidden: Vec<VertexId>) -> Plan {
    Plan::Sequence(vec![Step {
        vertex,
        forbidden: super::dedup(forbidden),
    }])
}

/// Deletes `removed` and draws `added`. `None` if the drawing edit fails.
pub(super) fn apply(d: &OnePlaneDrawing, removed: &[VertexId], added: Option<&AddedEdge>) -> Option<OnePlaneDrawing> {
    let d2 = d.delete_vertices(removed).ok()?;
    let d3 = match added {
        None => d2,
        Some(AddedEdge::Plain { u, v }) => d2.insert_edge_anywhere(*u, *v, None).ok()?,
        Some(AddedEdge::Crossing { u, v, crosses }) => d2.insert_edge_across(*u, *v, *crosses, None).ok()?,
    };
    Some(d3)
}

fn min_deg1(g: &Graph) -> Vec<Candidate> {
    let mut out = Vec::new();
    for u in g.vertices() {
        let ns = g.neighbors(u);
        match ns.len() {
            0 => out.push(Candidate {
                kind: ConfigKind::MinDeg1,
                roles: vec![role("u", u)],
                removed: vec![u],
                added: Vec::new(),
                plan: single(u, Vec::new()),
            }),
            1 => {
                let v = *ns.first().unwrap();
                let mut rs = vec![role("u", u), role("v", v)];
                let mut f = vec![v];
                if let Some(v1) = least_except(g, v, &[u]) {
                    rs.push(role("v'", v1));
                    f.push(v1);
                }
                out.push(Candidate {
                    kind: ConfigKind::MinDeg1,
                    roles: rs,
                    removed: vec![u],
                    added: Vec::new(),
                    plan: single(u, f),
                });
            }
            _ => {}
        }
    }
    out
}

fn other(g: &Graph, of: VertexId, not: VertexId) -> Option<VertexId> {
    least_except(g, of, &[not])
}

fn adjacent_twos(g: &Graph) -> Vec<Candidate> {
    let mut out = Vec::new();
    for u in g.vertices().filter(|&u| g.neighbors(u).len() == 2) {
        let Some(v) = g.neighbors(u).iter().copied().find(|&v| g.neighbors(v).len() == 2) else {
            continue;
        };
        let x = other(g, u, v).unwrap();
        let y = other(g, v, u).unwrap();
        let mut rs = vec![role("u", u), role("v", v), role("x", x), role("y", y)];
        let mut fu = vec![x, y];
        let mut fv = vec![u, x, y];
        if let Some(x1) = least_except(g, x, &[u, v]) {
            rs.push(role("x_1", x1));
            fu.push(x1);
        }
        if let Some(y1) = least_except(g, y, &[u, v]) {
            rs.push(role("y_1", y1));
            fv.push(y1);
        }
        out.push(Candidate {
            kind: ConfigKind::AdjacentTwos,
            roles: rs,
            removed: vec![u, v],
            added: Vec::new(),
            plan: Plan::Sequence(vec![
                Step {
                    vertex: u,
                    forbidden: super::dedup(fu),
                },
                Step {
                    vertex: v,
                    forbidden: super::dedup(fv),
                },
            ]),
        });
    }
    out
}

fn small_edge_2(g: &Graph, ell: usize) -> Vec<Candidate> {
    let mut out = Vec::new();
    for u in g.vertices().filter(|&u| g.neighbors(u).len() == 2) {
        for &v in g.neighbors(u) {
            if g.neighbors(v).len() + 1 > ell {
                continue;
            }
            let z = other(g, u, v).unwrap();
            let (xs, ys): (Vec<VertexId>, Vec<VertexId>) = g
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&w| w != u)
                .partition(|&w| g.neighbors(w).len() == 2);
            let xps: Vec<VertexId> = xs.iter().map(|&x| other(g, x, v).unwrap()).collect();
            let mut rs = vec![role("u", u), role("v", v), role("z", z)];
            rs.extend(indexed("x", &xs));
            rs.extend(indexed("x'", &xps));
            rs.extend(indexed("y", &ys));
            let mut fv = vec![z];
            fv.extend(&xps);
            fv.extend(&ys);
            let mut steps = vec![Step {
                vertex: v,
                forbidden: super::dedup(fv),
            }];
            for (x, xp) in xs.iter().zip(&xps) {
                steps.push(Step {
                    vertex: *x,
                    forbidden: super::dedup(vec![v, *xp]),
                });
            }
            let mut fu = vec![z, v];
            fu.extend(xs.first().or(ys.first()));
            steps.push(Step {
                vertex: u,
                forbidden: super::dedup(fu),
            });
            let mut removed = vec![u, v];
            removed.extend(&xs);
            out.push(Candidate {
                kind: ConfigKind::SmallEdge2,
                roles: rs,
                removed,
                added: Vec::new(),
                plan: Plan::Sequence(steps),
            });
        }
    }
    out
}

fn small_edge_general(g: &Graph, ell: usize) -> Vec<Candidate> {
    let mut out = Vec::new();
    for (p, q) in g.edges() {
        let (dp, dq) = (g.neighbors(p).len(), g.neighbors(q).len());
        if dp.max(dq) + 1 > ell {
            continue;
        }
        let (u, v) = if (dp, p) <= (dq, q) { (p, q) } else { (q, p) };
        let u_others: Vec<VertexId> = g.neighbors(u).iter().copied().filter(|&x| x != v).collect();
        let v_others: Vec<VertexId> = g.neighbors(v).iter().copied().filter(|&x| x != u).collect();
        if u_others.len() < 2 || v_others.len() < 2 {
            continue;
        }
        let mut rs = vec![role("u", u), role("v", v)];
        rs.extend(indexed("u", &u_others));
        rs.extend(indexed("v", &v_others));
        out.push(Candidate {
            kind: ConfigKind::SmallEdgeGeneral,
            roles: rs,
            removed: vec![u, v],
            added: Vec::new(),
            plan: Plan::Split {
                u,
                v,
                u_others,
                v_others,
            },
        });
    }
    out.sort_by_key(|c| (c.roles[0].1, c.roles[1].1));
    out
}

fn triangle_small(g: &Graph, ell: usize) -> Vec<Candidate> {
    let mut out = Vec::new();
    for u in g.vertices() {
        let ns: Vec<VertexId> = g.neighbors(u).iter().copied().collect();
        if ns.len() + 1 > ell {
            continue;
        }
        let pair = ns
            .iter()
            .enumerate()
            .flat_map(|(i, &a)| ns[i + 1..].iter().map(move |&b| (a, b)))
            .find(|&(a, b)| g.has_edge(a, b));
        let Some((v, w)) = pair else { continue };
        let xs: Vec<VertexId> = ns.iter().copied().filter(|&x| x != v && x != w).collect();
        let mut rs = vec![role("u", u), role("v", v), role("w", w)];
        rs.extend(indexed("x", &xs));
        out.push(Candidate {
            kind: ConfigKind::TriangleSmall,
            roles: rs,
            removed: vec![u],
            added: Vec::new(),
            plan: single(u, ns),
        });
    }
    out
}

fn plain_if_absent(g: &Graph, a: VertexId, b: VertexId) -> Vec<AddedEdge> {
    if g.has_edge(a, b) {
        Vec::new()
    } else {
        vec![AddedEdge::Plain { u: a, v: b }]
    }
}

fn with_added(g: &Graph, removed: &[VertexId], added: Option<&AddedEdge>) -> Graph {
    let mut r = g.remove_vertices(removed).expect("removed vertices exist");
    if let Some(e) = added {
        let (a, b) = e.ends();
        r.insert_edge(a, b).expect("endpoints survive");
    }
    r
}

fn false_triangle(d: &OnePlaneDrawing, g: &Graph, p: &AssociatedPlaneGraph, ell: usize) -> Vec<Candidate> {
    let mut out = Vec::new();
    for (_, face) in p.faces() {
        let walk = face.walk();
        if walk.len() != 3 {
            continue;
        }
        for k in 0..3 {
            // walk: u -> p -> w -> u
            let (d0, d1) = (walk[k], walk[(k + 1) % 3]);
            let (PlaneVertex::True(u), PlaneVertex::False(_), PlaneVertex::True(w)) =
                (p.tail(d0), p.head(d0), p.head(d1))
            else {
                continue;
            };
            for (u, e_u, w, e_w) in [(u, d0, w, d1), (w, d1, u, d0)] {
                if g.neighbors(u).len() + 3 > ell {
                    continue;
                }
                let Some(v) = far_end(d, p, e_u, u) else { continue };
                let Some(w1) = far_end(d, p, e_w, w) else { continue };
                if !g.has_edge(u, w) || !g.has_edge(u, v) {
                    continue;
                }
                let xs: Vec<VertexId> = g.neighbors(u).iter().copied().filter(|&x| x != v && x != w).collect();
                let added = plain_if_absent(g, v, w);
                let reduced = with_added(g, &[u], added.first());
                let mut rs = vec![role("u", u), role("v", v), role("w", w), role("w'", w1)];
                rs.extend(indexed("x", &xs));
                let mut f = vec![v, w];
                f.extend(&xs);
                if let Some(v1) = least_except(&reduced, v, &[u, w, w1]) {
                    rs.push(role("v'", v1));
                    f.push(v1);
                }
                f.push(w1);
                out.push(Candidate {
                    kind: ConfigKind::FalseTriangleTrueSmall,
                    roles: rs,
                    removed: vec![u],
                    added,
                    plan: single(u, f),
                });
            }
        }
    }
    out.sort_by_key(|c| c.roles[0].1);
    out
}

/// True endpoint of the edge of `dart` other than `x`.
fn far_end(d: &OnePlaneDrawing, p: &AssociatedPlaneGraph, dart: usize, x: VertexId) -> Option<VertexId> {
    let (a, b) = d.edge_ends(p.dart_edge(dart))?;
    match (a == x, b == x) {
        (true, false) => Some(b),
        (false, true) => Some(a),
        _ => None,
    }
}

fn big_face(d: &OnePlaneDrawing, g: &Graph, p: &AssociatedPlaneGraph, ell: usize) -> Vec<Candidate> {
    let mut out = Vec::new();
    for (_, face) in p.faces() {
        let walk = face.walk();
        let n = walk.len();
        if n < 4 {
            continue;
        }
        for k in 0..n {
            let PlaneVertex::True(u) = p.tail(walk[k]) else {
                continue;
            };
            if g.neighbors(u).len() + 3 > ell {
                continue;
            }
            let next = walk[k];
            let prev = walk[(k + n - 1) % n] ^ 1;
            for (dv, dw) in [(next, prev), (prev, next)] {
                let (vv, ww) = (p.head(dv), p.head(dw));
                if vv == ww {
                    continue;
                }
                match (vv, ww) {
                    (PlaneVertex::True(v), PlaneVertex::True(w)) => {
                        out.push(big_face_true(g, u, v, w));
                    }
                    (PlaneVertex::True(v), PlaneVertex::False(c)) => {
                        let e_uu = p.dart_edge(dw);
                        let Some(e2) = c.other(e_uu) else { continue };
                        let Some((a, b)) = d.edge_ends(e_uu) else { continue };
                        let u1 = if a == u { b } else { a };
                        if let Some(cand) = big_face_false(g, u, v, u1, e2) {
                            out.push(cand);
                        }
                    }
                    _ => {}
                }
            }
        }
    }
    out.sort_by_key(|c| c.roles[0].1);
    out
}

fn big_face_true(g: &Graph, u: VertexId, v: VertexId, w: VertexId) -> Candidate {
    let xs: Vec<VertexId> = g.neighbors(u).iter().copied().filter(|&x| x != v && x != w).collect();
    let mut rs = vec![role("u", u), role("v", v), role("w", w)];
    rs.extend(indexed("x", &xs));
    let mut f = xs.clone();
    f.extend([v, w]);
    let mut ex: Vec<VertexId> = xs.clone();
    ex.extend([u, w]);
    let v1 = least_except(g, v, &ex);
    if let Some(v1) = v1 {
        rs.push(role("v'", v1));
        f.push(v1);
    }
    let mut ex: Vec<VertexId> = xs.clone();
    ex.extend([u, v]);
    ex.extend(v1);
    if let Some(w1) = least_except(g, w, &ex) {
        rs.push(role("w'", w1));
        f.push(w1);
    }
    Candidate {
        kind: ConfigKind::BigFaceSmall,
        roles: rs,
        removed: vec![u],
        added: plain_if_absent(g, v, w),
        plan: single(u, f),
    }
}

fn big_face_false(g: &Graph, u: VertexId, v: VertexId, u1: VertexId, e2: crate::drawing::EdgeId) -> Option<Candidate> {
    if u1 == v {
        return None;
    }
    let xs: Vec<VertexId> = g.neighbors(u).iter().copied().filter(|&x| x != v && x != u1).collect();
    let mut rs = vec![role("u", u), role("v", v), role("u'", u1)];
    rs.extend(indexed("x", &xs));
    let mut f = xs.clone();
    f.extend([v, u1]);
    let mut ex: Vec<VertexId> = xs.clone();
    ex.extend([u, v]);
    let u2 = least_except(g, u1, &ex);
    if let Some(u2) = u2 {
        rs.push(role("u''", u2));
        f.push(u2);
    }
    let mut ex: Vec<VertexId> = xs.clone();
    ex.push(u);
    ex.extend(u2);
    if let Some(v1) = least_except(g, v, &ex) {
        rs.push(role("v'", v1));
        f.push(v1);
    }
    let added = if g.has_edge(u1, v) {
        Vec::new()
    } else {
        vec![
            AddedEdge::Crossing { u: u1, v, crosses: e2 },
            AddedEdge::Plain { u: u1, v },
        ]
    };
    Some(Candidate {
        kind: ConfigKind::BigFaceSmall,
        roles: rs,
        removed: vec![u],
        added,
        plan: single(u, f),
    })
}

fn candidates(d: &OnePlaneDrawing, plane: &AssociatedPlaneGraph, kind: ConfigKind, ell: usize) -> Vec<Candidate> {
    let g = d.graph();
    match kind {
        ConfigKind::MinDeg1 => min_deg1(g),
        ConfigKind::AdjacentTwos => adjacent_twos(g),
        ConfigKind::SmallEdge2 => small_edge_2(g, ell),
        ConfigKind::SmallEdgeGeneral => small_edge_general(g, ell),
        ConfigKind::TriangleSmall => triangle_small(g, ell),
        ConfigKind::FalseTriangleTrueSmall => false_triangle(d, g, plane, ell),
        ConfigKind::BigFaceSmall => big_face(d, g, plane, ell),
    }
}

/// Guard and dry run; the first workable alternative for the added edge.
fn validate(d: &OnePlaneDrawing, c: &Candidate, ell: usize, print: u64) -> Option<ReducibleConfig> {
    let g = d.graph();
    let alternatives: Vec<Option<&AddedEdge>> = if c.added.is_empty() {
        vec![None]
    } else {
        c.added.iter().map(Some).collect()
    };
    for added in alternatives {
        let reduced = with_added(g, &c.removed, added);
        if guard::check(g, &reduced, &c.removed, &c.plan, ell).is_err() {
            continue;
        }
        let Some(d2) = apply(d, &c.removed, added) else {
            continue;
        };
        if d2.measure() >= d.measure() {
            continue;
        }
        let mut seen = BTreeSet::new();
        let rs = c.roles.iter().filter(|r| seen.insert(r.0.clone())).cloned();
        return Some(ReducibleConfig {
            kind: c.kind,
            roles: roles(rs),
            removed: c.removed.clone(),
            added: added.copied(),
            plan: c.plan.clone(),
            fingerprint: print,
        });
    }
    None
}

/// The first configuration under the fixed scan order, or `None`.
///
/// Candidates whose plan fails the soundness guard, or whose drawing edit
/// is impossible, are skipped.
pub fn find_reducible_configuration(d: &OnePlaneDrawing, ell: usize) -> Option<ReducibleConfig> {
    let plane = d.associated_plane_graph().ok()?;
    let print = fingerprint(d);
    for kind in ConfigKind::ALL {
        for c in candidates(d, &plane, kind, ell) {
            if let Some(cfg) = validate(d, &c, ell, print) {
                return Some(cfg);
            }
        }
    }
    None
}

/// Every validated configuration, in scan order.
pub fn find_all_configurations(d: &OnePlaneDrawing, ell: usize) -> Vec<ReducibleConfig> {
    let Ok(plane) = d.associated_plane_graph() else {
        return Vec::new();
    };
    let print = fingerprint(d);
    let mut out = Vec::new();
    for kind in ConfigKind::ALL {
        for c in candidates(d, &plane, kind, ell) {
            if let Some(cfg) = validate(d, &c, ell, print) {
                if !out.contains(&cfg) {
                    out.push(cfg);
                }
            }
        }
    }
    out
}
