//! Value-semantic edits of drawings. Each returns a new validated drawing.

use super::{ends_key, CrossingPair, EdgeId, FaceId, HalfEdge, OnePlaneDrawing, PlaneVertex};
use crate::error::DrawingError;
use crate::graph::VertexId;

impl OnePlaneDrawing {
    /// Removes true vertex `u`, its edges and every crossing on them.
    pub fn delete_vertex(&self, u: VertexId) -> Result<OnePlaneDrawing, DrawingError> {
        self.delete_vertices(&[u])
    }

    pub fn delete_vertices(&self, removed: &[VertexId]) -> Result<OnePlaneDrawing, DrawingError> {
        let mut d = self.clone();
        for &u in removed {
            if !d.graph.contains(u) {
                return Err(DrawingError::UnknownVertex(u));
            }
            let gone: Vec<EdgeId> = d.incident_edges(u).into_iter().collect();
            for e in &gone {
                let (a, b) = d.edges.remove(e).unwrap();
                d.by_ends.remove(&ends_key(a, b));
            }
            d.crossings.retain(|c| !gone.iter().any(|e| c.contains(*e)));
            d.crossing_rotations.retain(|c, _| !gone.iter().any(|e| c.contains(*e)));
            d.rotations.remove(&u);
            for r in d.rotations.values_mut() {
                r.retain(|e| !gone.contains(e));
            }
            d.graph = d.graph.remove_vertices(&[u])?;
        }
        d.validated()
    }

    /// Adds an isolated vertex.
    pub fn with_vertex(&self, v: VertexId) -> Result<OnePlaneDrawing, DrawingError> {
        let mut d = self.clone();
        if !d.graph.insert_vertex(v) {
            return Err(DrawingError::Invalid(format!("vertex {v} already present")));
        }
        d.rotations.insert(v, Vec::new());
        Ok(d)
    }

    fn check_new_edge(&self, u: VertexId, v: VertexId) -> Result<(), DrawingError> {
        for x in [u, v] {
            if !self.graph.contains(x) {
                return Err(DrawingError::UnknownVertex(x));
            }
        }
        if u == v {
            return Err(DrawingError::Invalid(format!("loop at {u}")));
        }
        if self.graph.has_edge(u, v) {
            return Err(DrawingError::EdgeExists(u, v));
        }
        Ok(())
    }

    /// Raw splice of a new edge: enters `u`'s rotation after `after_u`
    /// (front when `None`) and likewise at `v`. Not validated.
    fn splice_edge(
        &self,
        id: EdgeId,
        (u, after_u): (VertexId, Option<EdgeId>),
        (v, after_v): (VertexId, Option<EdgeId>),
    ) -> OnePlaneDrawing {
        let mut d = self.clone();
        d.graph.insert_edge(u, v).expect("checked by caller");
        d.edges.insert(id, (u, v));
        d.by_ends.insert(ends_key(u, v), id);
        for (x, after) in [(u, after_u), (v, after_v)] {
            let r = d.rotations.entry(x).or_default();
            let at = after.and_then(|a| r.iter().position(|e| *e == a)).map_or(0, |p| p + 1);
            r.insert(at, id);
        }
        d
    }

    fn fresh_id(&self, id: Option<EdgeId>) -> Result<EdgeId, DrawingError> {
        let id = id.unwrap_or_else(|| self.next_edge_id());
        if self.edges.contains_key(&id) {
            return Err(DrawingError::Invalid(format!("edge id {id} already used")));
        }
        Ok(id)
    }

    /// Inserts `uv` without crossings inside face `face` of this drawing's
    /// associated plane graph.
    pub fn insert_edge_in_face(&self, face: FaceId, u: VertexId, v: VertexId) -> Result<OnePlaneDrawing, DrawingError> {
        self.insert_edge_in_face_with_id(face, u, v, None)
    }

    pub fn insert_edge_in_face_with_id(
        &self,
        face: FaceId,
        u: VertexId,
        v: VertexId,
        id: Option<EdgeId>,
    ) -> Result<OnePlaneDrawing, DrawingError> {
        self.check_new_edge(u, v)?;
        let id = self.fresh_id(id)?;
        let plane = self.associated_plane_graph()?;
        if face.0 >= plane.face_count() {
            return Err(DrawingError::Invalid(format!("no face {face}")));
        }
        let cu = plane.corners(face, u);
        let cv = plane.corners(face, v);
        if cu.is_empty() || cv.is_empty() {
            return Err(DrawingError::NotOnFace(u, v));
        }
        for &a in &cu {
            for &b in &cv {
                let d = self.splice_edge(id, (u, a), (v, b));
                if d.is_valid() {
                    return Ok(d);
                }
            }
        }
        Err(DrawingError::NoInsertion(u, v))
    }

    /// Inserts `uv` without crossings in the first face (by id) where it
    /// fits; joins components when `u` and `v` lie in different ones.
    pub fn insert_edge_anywhere(
        &self,
        u: VertexId,
        v: VertexId,
        id: Option<EdgeId>,
    ) -> Result<OnePlaneDrawing, DrawingError> {
        self.check_new_edge(u, v)?;
        let id = self.fresh_id(id)?;
        let plane = self.associated_plane_graph()?;
        let fu = plane.faces_containing(u);
        let fv = plane.faces_containing(v);
        for f in fu.iter().filter(|f| fv.contains(f)) {
            for a in plane.corners(*f, u) {
                for b in plane.corners(*f, v) {
                    let d = self.splice_edge(id, (u, a), (v, b));
                    if d.is_valid() {
                        return Ok(d);
                    }
                }
            }
        }
        let comp = plane.component_of();
        if comp[&PlaneVertex::True(u)] != comp[&PlaneVertex::True(v)] {
            let a = plane.corners(fu[0], u)[0];
            let b = plane.corners(fv[0], v)[0];
            let d = self.splice_edge(id, (u, a), (v, b));
            if d.is_valid() {
                return Ok(d);
            }
        }
        Err(DrawingError::NoInsertion(u, v))
    }

    /// Every valid drawing obtained by joining the isolated vertex `a` to
    /// `n` with edge `id`, one per corner of `n`.
    pub fn attach_options(&self, a: VertexId, n: VertexId, id: EdgeId) -> Result<Vec<OnePlaneDrawing>, DrawingError> {
        self.check_new_edge(a, n)?;
        let id = self.fresh_id(Some(id))?;
        if self.graph.degree(a)? != 0 {
            return Err(DrawingError::Invalid(format!("vertex {a} is not isolated")));
        }
        let plane = self.associated_plane_graph()?;
        let mut out = Vec::new();
        for f in plane.faces_containing(n) {
            for c in plane.corners(f, n) {
                let d = self.splice_edge(id, (a, None), (n, c));
                if d.is_valid() && !out.contains(&d) {
                    out.push(d);
                }
            }
        }
        Ok(out)
    }

    /// Inserts `uv` so that it crosses the currently uncrossed edge
    /// `crossed` exactly once and nothing else.
    pub fn insert_edge_across(
        &self,
        u: VertexId,
        v: VertexId,
        crossed: EdgeId,
        id: Option<EdgeId>,
    ) -> Result<OnePlaneDrawing, DrawingError> {
        self.check_new_edge(u, v)?;
        let id = self.fresh_id(id)?;
        let (a, b) = self
            .edge_ends(crossed)
            .ok_or_else(|| DrawingError::Invalid(format!("no edge {crossed}")))?;
        if self.crossing_of(crossed).is_some() {
            return Err(DrawingError::Invalid(format!("edge {crossed} is already crossed")));
        }
        if [a, b].contains(&u) || [a, b].contains(&v) {
            return Err(DrawingError::Invalid(format!(
                "edge {crossed} shares an endpoint with {u}-{v}"
            )));
        }
        let plane = self.associated_plane_graph()?;
        let dart = plane
            .darts_around(PlaneVertex::True(a))
            .iter()
            .copied()
            .find(|&d| plane.dart_edge(d) == crossed)
            .expect("edge present at its endpoint");
        let sides = [plane.face_of_dart(dart), plane.face_of_dart(dart ^ 1)];
        let pair = CrossingPair::new(id, crossed);
        let h = |edge, end| HalfEdge { edge, end };
        for (fu, fv) in [(sides[0], sides[1]), (sides[1], sides[0])] {
            for cu in plane.corners(fu, u) {
                for cv in plane.corners(fv, v) {
                    let base = self.splice_edge(id, (u, cu), (v, cv));
                    for order in [
                        [h(crossed, a), h(id, u), h(crossed, b), h(id, v)],
                        [h(crossed, a), h(id, v), h(crossed, b), h(id, u)],
                    ] {
                        let mut d = base.clone();
                        d.crossings.push(pair);
                        d.crossings.sort();
                        d.crossing_rotations.insert(pair, order.to_vec());
                        if d.is_valid() {
                            return Ok(d);
                        }
                    }
                }
            }
        }
        Err(DrawingError::NoInsertion(u, v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drawing::DrawingBuilder;
    use crate::families;

    fn vid(v: u32) -> VertexId {
        VertexId(v)
    }

    #[test]
    fn diagonal_in_square() {
        let d = OnePlaneDrawing::from_graph_trivial(&families::cycle(4)).unwrap();
        let p = d.associated_plane_graph().unwrap();
        assert_eq!(p.face_count(), 2);
        let d2 = d.insert_edge_in_face(FaceId(0), vid(0), vid(2)).unwrap();
        let p2 = d2.associated_plane_graph().unwrap();
        let mut degs: Vec<usize> = p2.faces().map(|(_, f)| f.degree()).collect();
        degs.sort();
        assert_eq!(degs, vec![3, 3, 4]);
    }

    #[test]
    fn close_path_into_triangle() {
        let d = OnePlaneDrawing::from_graph_trivial(&families::path(3)).unwrap();
        let d2 = d.insert_edge_in_face(FaceId(0), vid(0), vid(2)).unwrap();
        assert_eq!(d2.graph(), &families::cycle(3));
        assert!(matches!(
            d2.insert_edge_in_face(FaceId(0), vid(0), vid(1)),
            Err(DrawingError::EdgeExists(..))
        ));
    }

    #[test]
    fn delete_endpoint_of_crossing() {
        let mut b = DrawingBuilder::new();
        b.edge(EdgeId(0), vid(0), vid(2))
            .edge(EdgeId(1), vid(1), vid(3))
            .crossing(EdgeId(0), EdgeId(1));
        let d = b.build().unwrap().delete_vertex(vid(0)).unwrap();
        assert_eq!(d.crossing_count(), 0);
        assert_eq!(d.graph().vertex_count(), 3);
        assert!(d.graph().has_edge(vid(1), vid(3)));
        let iso = d.delete_vertex(vid(2)).unwrap();
        assert_eq!(iso.graph().vertex_count(), 2);
    }

    #[test]
    fn crossing_insertion_through_square() {
        // C4 with one diagonal 0-2; add 1-3 across it
        let d = OnePlaneDrawing::from_graph_trivial(&families::cycle(4))
            .unwrap()
            .insert_edge_anywhere(vid(0), vid(2), None)
            .unwrap();
        let e = d.edge_between(vid(0), vid(2)).unwrap();
        let d2 = d.insert_edge_across(vid(1), vid(3), e, None).unwrap();
        assert_eq!(d2.crossing_count(), 1);
        let p = d2.associated_plane_graph().unwrap();
        assert_eq!(p.vertex_count(), 5);
        assert_eq!(p.edge_count(), 8);
        assert_eq!(p.face_count(), 5);
    }
}
