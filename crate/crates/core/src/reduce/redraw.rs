//! Redrawing a 6-face whose three true vertices are special 2-vertices.

use std::collections::BTreeSet;

use serde::Serialize;

use super::BIG_DEGREE;
use crate::drawing::{AssociatedPlaneGraph, EdgeId, FaceId, OnePlaneDrawing, PlaneVertex};
use crate::graph::VertexId;

/// A 6-face `t0 f0 t1 f1 t2 f2` with `t_i` special 2-vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SixFacePattern {
    pub face: FaceId,
    pub specials: [VertexId; 3],
}

/// Degree-2 low vertices of special 4-faces.
pub(crate) fn special_two_vertices(p: &AssociatedPlaneGraph) -> BTreeSet<VertexId> {
    p.special_4_faces(BIG_DEGREE)
        .into_iter()
        .filter(|s| p.degree(PlaneVertex::True(s.low)) == 2)
        .map(|s| s.low)
        .collect()
}

/// Every 6-face of the pattern, by face id.
pub fn find_6face_pattern(p: &AssociatedPlaneGraph) -> Vec<SixFacePattern> {
    let specials = special_two_vertices(p);
    let mut out = Vec::new();
    for (fid, face) in p.faces() {
        if face.degree() != 6 {
            continue;
        }
        let vs: Vec<PlaneVertex> = face.walk().iter().map(|&d| p.tail(d)).collect();
        for start in 0..2 {
            let t: Vec<VertexId> = (0..3).filter_map(|i| vs[start + 2 * i].as_true()).collect();
            let falses = (0..3).all(|i| vs[(start + 2 * i + 1) % 6].is_false());
            if t.len() == 3 && falses && t.iter().all(|v| specials.contains(v)) {
                let set: BTreeSet<VertexId> = t.iter().copied().collect();
                if set.len() == 3 {
                    out.push(SixFacePattern {
                        face: fid,
                        specials: [t[0], t[1], t[2]],
                    });
                }
            }
        }
    }
    out
}

/// Reattaches degree-2 vertex `a` (already isolated in `d`) along its two
/// old edges without crossings. All ways found.
fn reattach(d: &OnePlaneDrawing, a: VertexId, edges: &[(EdgeId, VertexId); 2]) -> Vec<OnePlaneDrawing> {
    let Ok(first) = d.attach_options(a, edges[0].1, edges[0].0) else {
        return Vec::new();
    };
    first
        .into_iter()
        .filter_map(|d1| d1.insert_edge_anywhere(a, edges[1].1, Some(edges[1].0)).ok())
        .collect()
}

fn edges_at(d: &OnePlaneDrawing, a: VertexId) -> Option<[(EdgeId, VertexId); 2]> {
    let r = d.rotation(a)?;
    if r.len() != 2 {
        return None;
    }
    let end = |e: EdgeId| {
        let (x, y) = d.edge_ends(e).unwrap();
        (e, if x == a { y } else { x })
    };
    Some([end(r[0]), end(r[1])])
}

/// A drawing of the same graph with exactly three fewer crossings, obtained
/// by pulling two of the three special 2-vertices of a 6-face pattern into
/// neighboring faces, or `None` if no pattern exists or no pulling works.
pub fn improve_drawing_6face(d: &OnePlaneDrawing) -> Option<OnePlaneDrawing> {
    let p = d.associated_plane_graph().ok()?;
    let target = d.crossing_count().checked_sub(3)?;
    for pat in find_6face_pattern(&p) {
        let [t0, t1, t2] = pat.specials;
        for (a, b) in [(t1, t2), (t0, t2), (t0, t1)] {
            let (Some(ea), Some(eb)) = (edges_at(d, a), edges_at(d, b)) else {
                continue;
            };
            let Some(base) = d
                .delete_vertices(&[a, b])
                .and_then(|x| x.with_vertex(a))
                .and_then(|x| x.with_vertex(b))
                .ok()
            else {
                continue;
            };
            for da in reattach(&base, a, &ea) {
                for db in reattach(&da, b, &eb) {
                    if db.crossing_count() == target && db.graph() == d.graph() && db.is_valid() {
                        return Some(db);
                    }
                }
            }
        }
    }
    None
}
