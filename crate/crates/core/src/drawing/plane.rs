use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{CrossingPair, EdgeId, HalfEdge, OnePlaneDrawing};
use crate::error::DrawingError;
use crate::graph::VertexId;

/// Vertex of `G^x`: an original vertex or a crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum PlaneVertex {
    True(VertexId),
    False(CrossingPair),
}

impl PlaneVertex {
    pub fn is_false(&self) -> bool {
        matches!(self, PlaneVertex::False(_))
    }

    pub fn as_true(&self) -> Option<VertexId> {
        match self {
            PlaneVertex::True(v) => Some(*v),
            PlaneVertex::False(_) => None,
        }
    }
}

impl fmt::Display for PlaneVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlaneVertex::True(v) => write!(f, "v{v}"),
            PlaneVertex::False(c) => write!(f, "x{c}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FaceId(pub usize);

impl fmt::Display for FaceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "f{}", self.0)
    }
}

/// A traced face: its boundary walk as darts. An isolated vertex gets a
/// face with an empty walk so that Euler's formula holds per component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    walk: Vec<usize>,
    lone: Option<VertexId>,
}

impl Face {
    pub fn walk(&self) -> &[usize] {
        &self.walk
    }

    pub fn degree(&self) -> usize {
        self.walk.len()
    }

    pub fn lone_vertex(&self) -> Option<VertexId> {
        self.lone
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Segment {
    from: PlaneVertex,
    to: PlaneVertex,
    edge: EdgeId,
}

/// A special 4-face `u x v y`: `u` big, `v` the special low vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SpecialFace {
    pub face: FaceId,
    pub big: VertexId,
    pub low: VertexId,
    /// Dart of the walk leaving `big`.
    pub big_dart: usize,
    /// Dart of the walk leaving `low`.
    pub low_dart: usize,
}

/// The planarization `G^x` of a drawing, with traced faces.
///
/// Segments are numbered; segment `s` has darts `2s` (forward) and `2s + 1`
/// (backward). Faces are the orbits of `next`, discovered in dart order.
#[derive(Clone, Debug)]
pub struct AssociatedPlaneGraph {
    vertices: Vec<PlaneVertex>,
    index: BTreeMap<PlaneVertex, usize>,
    segments: Vec<Segment>,
    rotation: Vec<Vec<usize>>,
    position: Vec<usize>,
    faces: Vec<Face>,
    face_of: Vec<FaceId>,
}

impl AssociatedPlaneGraph {
    /// Traces faces of any drawing that passes the structural checks;
    /// sphericity is not required here.
    pub(crate) fn trace(d: &OnePlaneDrawing) -> Result<Self, DrawingError> {
        let mut vertices: Vec<PlaneVertex> = d.graph().vertices().map(PlaneVertex::True).collect();
        vertices.extend(d.crossings().iter().map(|c| PlaneVertex::False(*c)));
        let index: BTreeMap<PlaneVertex, usize> = vertices.iter().enumerate().map(|(i, v)| (*v, i)).collect();

        let mut segments = Vec::new();
        let mut out_true: BTreeMap<(VertexId, EdgeId), usize> = BTreeMap::new();
        let mut out_false: BTreeMap<(CrossingPair, HalfEdge), usize> = BTreeMap::new();
        for (e, u, v) in d.edges() {
            let s = segments.len();
            match d.crossing_of(e) {
                None => {
                    segments.push(Segment {
                        from: PlaneVertex::True(u),
                        to: PlaneVertex::True(v),
                        edge: e,
                    });
                    out_true.insert((u, e), 2 * s);
                    out_true.insert((v, e), 2 * s + 1);
                }
                Some(c) => {
                    let p = PlaneVertex::False(c);
                    segments.push(Segment {
                        from: PlaneVertex::True(u),
                        to: p,
                        edge: e,
                    });
                    segments.push(Segment {
                        from: p,
                        to: PlaneVertex::True(v),
                        edge: e,
                    });
                    out_true.insert((u, e), 2 * s);
                    out_false.insert((c, HalfEdge { edge: e, end: u }), 2 * s + 1);
                    out_false.insert((c, HalfEdge { edge: e, end: v }), 2 * s + 2);
                    out_true.insert((v, e), 2 * s + 3);
                }
            }
        }

        let broken = || DrawingError::Invalid("rotation system does not match the edges".into());
        let mut rotation = vec![Vec::new(); vertices.len()];
        for (i, pv) in vertices.iter().enumerate() {
            rotation[i] = match pv {
                PlaneVertex::True(v) => d
                    .rotation(*v)
                    .ok_or_else(broken)?
                    .iter()
                    .map(|e| out_true.get(&(*v, *e)).copied().ok_or_else(broken))
                    .collect::<Result<_, _>>()?,
                PlaneVertex::False(c) => d
                    .crossing_rotation(*c)
                    .ok_or_else(broken)?
                    .iter()
                    .map(|h| out_false.get(&(*c, *h)).copied().ok_or_else(broken))
                    .collect::<Result<_, _>>()?,
            };
        }
        let ndarts = 2 * segments.len();
        let mut position = vec![usize::MAX; ndarts];
        for rot in &rotation {
            for (k, &dart) in rot.iter().enumerate() {
                if position[dart] != usize::MAX {
                    return Err(broken());
                }
                position[dart] = k;
            }
        }
        if position.contains(&usize::MAX) {
            return Err(broken());
        }

        let mut plane = AssociatedPlaneGraph {
            vertices,
            index,
            segments,
            rotation,
            position,
            faces: Vec::new(),
            face_of: vec![FaceId(usize::MAX); ndarts],
        };
        for start in 0..ndarts {
            if plane.face_of[start].0 != usize::MAX {
                continue;
            }
            let id = FaceId(plane.faces.len());
            let mut walk = Vec::new();
            let mut dart = start;
            loop {
                plane.face_of[dart] = id;
                walk.push(dart);
                dart = plane.next(dart);
                if dart == start {
                    break;
                }
            }
            plane.faces.push(Face { walk, lone: None });
        }
        for (i, pv) in plane.vertices.iter().enumerate() {
            if plane.rotation[i].is_empty() {
                if let PlaneVertex::True(v) = pv {
                    plane.faces.push(Face {
                        walk: Vec::new(),
                        lone: Some(*v),
                    });
                }
            }
        }
        Ok(plane)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Number of segments, `|E^x|`.
    pub fn edge_count(&self) -> usize {
        self.segments.len()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn vertices(&self) -> &[PlaneVertex] {
        &self.vertices
    }

    pub fn faces(&self) -> impl Iterator<Item = (FaceId, &Face)> + '_ {
        self.faces.iter().enumerate().map(|(i, f)| (FaceId(i), f))
    }

    pub fn face(&self, f: FaceId) -> &Face {
        &self.faces[f.0]
    }

    pub fn dart_count(&self) -> usize {
        2 * self.segments.len()
    }

    pub fn reverse(dart: usize) -> usize {
        dart ^ 1
    }

    pub fn tail(&self, dart: usize) -> PlaneVertex {
        let s = &self.segments[dart / 2];
        if dart.is_multiple_of(2) {
            s.from
        } else {
            s.to
        }
    }

    pub fn head(&self, dart: usize) -> PlaneVertex {
        self.tail(dart ^ 1)
    }

    /// Original edge the dart's segment belongs to.
    pub fn dart_edge(&self, dart: usize) -> EdgeId {
        self.segments[dart / 2].edge
    }

    /// Successor of `dart` on its face.
    pub fn next(&self, dart: usize) -> usize {
        let twin = dart ^ 1;
        let at = self.index[&self.head(dart)];
        let rot = &self.rotation[at];
        rot[(self.position[twin] + 1) % rot.len()]
    }

    pub fn face_of_dart(&self, dart: usize) -> FaceId {
        self.face_of[dart]
    }

    /// Degree of a vertex of `G^x` (4 at every false vertex).
    pub fn degree(&self, v: PlaneVertex) -> usize {
        self.index.get(&v).map_or(0, |&i| self.rotation[i].len())
    }

    /// Outgoing darts of `v` in rotation order.
    pub fn darts_around(&self, v: PlaneVertex) -> &[usize] {
        self.index.get(&v).map_or(&[], |&i| self.rotation[i].as_slice())
    }

    /// Faces around `v`; entry `i` is the face of the `i`-th outgoing dart,
    /// so consecutive entries share the edge between them.
    pub fn faces_around(&self, v: PlaneVertex) -> Vec<FaceId> {
        let darts = self.darts_around(v);
        if darts.is_empty() {
            if let PlaneVertex::True(x) = v {
                if let Some(i) = self.faces.iter().position(|f| f.lone == Some(x)) {
                    return vec![FaceId(i)];
                }
            }
        }
        darts.iter().map(|&d| self.face_of[d]).collect()
    }

    /// Vertices on the boundary walk of `f`, with repetitions.
    pub fn face_vertices(&self, f: FaceId) -> Vec<PlaneVertex> {
        let face = &self.faces[f.0];
        match face.lone {
            Some(v) => vec![PlaneVertex::True(v)],
            None => face.walk.iter().map(|&d| self.tail(d)).collect(),
        }
    }

    pub fn is_false_face(&self, f: FaceId) -> bool {
        self.face_vertices(f).iter().any(PlaneVertex::is_false)
    }

    /// `true` for false faces, `false` for true faces.
    pub fn classify_faces(&self) -> BTreeMap<FaceId, bool> {
        (0..self.faces.len())
            .map(|i| (FaceId(i), self.is_false_face(FaceId(i))))
            .collect()
    }

    pub fn has_adjacent_false_vertices(&self) -> bool {
        self.segments.iter().any(|s| s.from.is_false() && s.to.is_false())
    }

    /// Components as vertex lists with their `V - E + F`.
    pub fn component_euler(&self) -> Vec<(Vec<PlaneVertex>, i64)> {
        let n = self.vertices.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for s in &self.segments {
            let a = find(&mut parent, self.index[&s.from]);
            let b = find(&mut parent, self.index[&s.to]);
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut comps: BTreeMap<usize, (Vec<PlaneVertex>, i64)> = BTreeMap::new();
        for i in 0..n {
            let r = find(&mut parent, i);
            let e = comps.entry(r).or_default();
            e.0.push(self.vertices[i]);
            e.1 += 1;
        }
        for s in &self.segments {
            let r = find(&mut parent, self.index[&s.from]);
            comps.get_mut(&r).unwrap().1 -= 1;
        }
        for f in &self.faces {
            let anchor = match f.lone {
                Some(v) => PlaneVertex::True(v),
                None => self.tail(f.walk[0]),
            };
            let r = find(&mut parent, self.index[&anchor]);
            comps.get_mut(&r).unwrap().1 += 1;
        }
        comps.into_values().collect()
    }

    /// Component index (in [`Self::component_euler`] order) of every vertex.
    pub fn component_of(&self) -> BTreeMap<PlaneVertex, usize> {
        let mut out = BTreeMap::new();
        for (k, (vs, _)) in self.component_euler().into_iter().enumerate() {
            for v in vs {
                out.insert(v, k);
            }
        }
        out
    }

    /// Component index of every face.
    pub fn face_components(&self) -> Vec<usize> {
        let comp = self.component_of();
        self.faces
            .iter()
            .map(|f| match f.lone {
                Some(v) => comp[&PlaneVertex::True(v)],
                None => comp[&self.tail(f.walk[0])],
            })
            .collect()
    }

    /// 4-faces `u x v y` with `d(u) >= threshold`, `2 <= d(v) <= 3` and
    /// `x`, `y` false.
    pub fn special_4_faces(&self, threshold: usize) -> Vec<SpecialFace> {
        let mut out = Vec::new();
        for (fid, face) in self.faces() {
            if face.degree() != 4 {
                continue;
            }
            let w = &face.walk;
            for k in 0..4 {
                let (u, x, v, y) = (
                    self.tail(w[k]),
                    self.tail(w[(k + 1) % 4]),
                    self.tail(w[(k + 2) % 4]),
                    self.tail(w[(k + 3) % 4]),
                );
                let (PlaneVertex::True(big), PlaneVertex::True(low)) = (u, v) else {
                    continue;
                };
                if !x.is_false() || !y.is_false() || x == y {
                    continue;
                }
                let dv = self.degree(v);
                if self.degree(u) >= threshold && (2..=3).contains(&dv) {
                    out.push(SpecialFace {
                        face: fid,
                        big,
                        low,
                        big_dart: w[k],
                        low_dart: w[(k + 2) % 4],
                    });
                }
            }
        }
        out
    }

    /// Corners of true vertex `v` on face `f`: for each visit of the walk to
    /// `v`, the edge after which a new edge would enter the face (`None` for
    /// an isolated vertex).
    pub(crate) fn corners(&self, f: FaceId, v: VertexId) -> Vec<Option<EdgeId>> {
        let face = &self.faces[f.0];
        if face.lone == Some(v) {
            return vec![None];
        }
        let w = &face.walk;
        let n = w.len();
        (0..n)
            .filter(|&i| self.tail(w[i]) == PlaneVertex::True(v))
            .map(|i| Some(self.dart_edge(w[(i + n - 1) % n] ^ 1)))
            .collect()
    }

    /// Faces whose boundary visits true vertex `v`.
    pub fn faces_containing(&self, v: VertexId) -> Vec<FaceId> {
        let mut out: Vec<FaceId> = self.faces_around(PlaneVertex::True(v));
        out.sort();
        out.dedup();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drawing::DrawingBuilder;

    fn vid(v: u32) -> VertexId {
        VertexId(v)
    }

    #[test]
    fn star_has_one_face_of_degree_eight() {
        let mut b = DrawingBuilder::new();
        b.edge(EdgeId(0), vid(0), vid(2))
            .edge(EdgeId(1), vid(1), vid(3))
            .crossing(EdgeId(0), EdgeId(1));
        let p = b.build().unwrap().associated_plane_graph().unwrap();
        assert_eq!(p.vertex_count(), 5);
        assert_eq!(p.edge_count(), 4);
        assert_eq!(p.face_count(), 1);
        assert_eq!(p.face(FaceId(0)).degree(), 8);
        assert_eq!(p.degree(PlaneVertex::False(CrossingPair::new(EdgeId(0), EdgeId(1)))), 4);
    }

    #[test]
    fn lone_face_for_isolated_vertex() {
        let mut b = DrawingBuilder::new();
        b.vertex(vid(3));
        let p = b.build().unwrap().associated_plane_graph().unwrap();
        assert_eq!(p.face_count(), 1);
        assert_eq!(p.face(FaceId(0)).lone_vertex(), Some(vid(3)));
        assert_eq!(p.component_euler()[0].1, 2);
    }
}
