//! Combinatorial 1-plane drawings.
//!
//! A drawing is a graph whose edges carry identifiers, a list of crossing
//! pairs and a rotation system of the planarization: the cyclic order of
//! edges around every true vertex and of the four edge halves around every
//! crossing. Geometry never enters; faces come from tracing the rotations.

mod edit;
mod plane;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::DrawingError;
use crate::graph::{Graph, VertexId};

pub use plane::{AssociatedPlaneGraph, Face, FaceId, PlaneVertex, SpecialFace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeId(pub u32);

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Two edges crossing each other. Stored with the smaller id first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CrossingPair(EdgeId, EdgeId);

impl CrossingPair {
    pub fn new(a: EdgeId, b: EdgeId) -> Self {
        if a <= b {
            CrossingPair(a, b)
        } else {
            CrossingPair(b, a)
        }
    }

    pub fn first(&self) -> EdgeId {
        self.0
    }

    pub fn second(&self) -> EdgeId {
        self.1
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.0 == e || self.1 == e
    }

    /// The edge of the pair that is not `e`.
    pub fn other(&self, e: EdgeId) -> Option<EdgeId> {
        if self.0 == e {
            Some(self.1)
        } else if self.1 == e {
            Some(self.0)
        } else {
            None
        }
    }
}

impl fmt::Display for CrossingPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.0, self.1)
    }
}

/// The half of edge `edge` that runs from a crossing towards endpoint `end`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct HalfEdge {
    pub edge: EdgeId,
    pub end: VertexId,
}

impl fmt::Display for HalfEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.edge, self.end)
    }
}

/// A structural problem found by [`OnePlaneDrawing::validate`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Violation {
    UnknownEdgeInCrossing { crossing: CrossingPair, edge: EdgeId },
    SelfCrossing { edge: EdgeId },
    EdgeCrossedTwice { edge: EdgeId },
    CrossingSharesEndpoint { crossing: CrossingPair, vertex: VertexId },
    RotationMissing { vertex: VertexId },
    RotationMismatch { vertex: VertexId },
    CrossingRotationMissing { crossing: CrossingPair },
    CrossingRotationMismatch { crossing: CrossingPair },
    NotInterleaved { crossing: CrossingPair },
    UnusedCrossingRotation { crossing: CrossingPair },
    NotSpherical { component: Vec<VertexId>, euler: i64 },
    AdjacentFalseVertices,
    TooManyFalseVerticesOnFace { face: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::UnknownEdgeInCrossing { crossing, edge } => {
                write!(f, "crossing {crossing} names unknown edge {edge}")
            }
            Violation::SelfCrossing { edge } => write!(f, "edge {edge} crosses itself"),
            Violation::EdgeCrossedTwice { edge } => write!(f, "edge {edge} crossed twice"),
            Violation::CrossingSharesEndpoint { crossing, vertex } => {
                write!(f, "crossing {crossing}: edges share endpoint {vertex}")
            }
            Violation::RotationMissing { vertex } => write!(f, "no rotation at vertex {vertex}"),
            Violation::RotationMismatch { vertex } => {
                write!(f, "rotation at vertex {vertex} does not list its edges exactly once")
            }
            Violation::CrossingRotationMissing { crossing } => {
                write!(f, "no rotation at crossing {crossing}")
            }
            Violation::CrossingRotationMismatch { crossing } => {
                write!(f, "rotation at crossing {crossing} does not list its four halves")
            }
            Violation::NotInterleaved { crossing } => {
                write!(f, "rotation at crossing {crossing} does not alternate the two edges")
            }
            Violation::UnusedCrossingRotation { crossing } => {
                write!(f, "rotation given for {crossing}, which is not a crossing")
            }
            Violation::NotSpherical { component, euler } => write!(
                f,
                "component containing {} has V-E+F = {euler}, not 2",
                component.first().map_or("?".into(), |v| v.to_string())
            ),
            Violation::AdjacentFalseVertices => write!(f, "two false vertices are adjacent"),
            Violation::TooManyFalseVerticesOnFace { face } => {
                write!(f, "face {face} has more than half of its walk on false vertices")
            }
        }
    }
}

/// A 1-plane drawing as a rotation system. See the module docs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OnePlaneDrawing {
    graph: Graph,
    edges: BTreeMap<EdgeId, (VertexId, VertexId)>,
    by_ends: BTreeMap<(VertexId, VertexId), EdgeId>,
    crossings: Vec<CrossingPair>,
    rotations: BTreeMap<VertexId, Vec<EdgeId>>,
    crossing_rotations: BTreeMap<CrossingPair, Vec<HalfEdge>>,
}

fn ends_key(u: VertexId, v: VertexId) -> (VertexId, VertexId) {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Collects the parts of a drawing. Rotations of vertices of degree at most
/// two and rotations of crossings may be left out; they are filled in by
/// [`DrawingBuilder::build`].
#[derive(Clone, Debug, Default)]
pub struct DrawingBuilder {
    vertices: BTreeSet<VertexId>,
    edges: Vec<(EdgeId, VertexId, VertexId)>,
    crossings: Vec<CrossingPair>,
    rotations: BTreeMap<VertexId, Vec<EdgeId>>,
    crossing_rotations: BTreeMap<CrossingPair, Vec<HalfEdge>>,
}

impl DrawingBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn vertex(&mut self, v: VertexId) -> &mut Self {
        self.vertices.insert(v);
        self
    }

    pub fn edge(&mut self, id: EdgeId, u: VertexId, v: VertexId) -> &mut Self {
        self.vertices.insert(u);
        self.vertices.insert(v);
        self.edges.push((id, u, v));
        self
    }

    pub fn crossing(&mut self, a: EdgeId, b: EdgeId) -> &mut Self {
        self.crossings.push(CrossingPair::new(a, b));
        self
    }

    pub fn rotation(&mut self, v: VertexId, order: Vec<EdgeId>) -> &mut Self {
        self.rotations.insert(v, order);
        self
    }

    pub fn crossing_rotation(&mut self, c: CrossingPair, order: Vec<HalfEdge>) -> &mut Self {
        self.crossing_rotations.insert(c, order);
        self
    }

    /// Assembles the drawing. Fails only on defects that make the parts
    /// meaningless (loops, parallel edges, reused edge ids); everything else
    /// is left to [`OnePlaneDrawing::validate`].
    pub fn build(&self) -> Result<OnePlaneDrawing, DrawingError> {
        let mut graph = Graph::new();
        for &v in &self.vertices {
            graph.insert_vertex(v);
        }
        let mut edges = BTreeMap::new();
        let mut by_ends = BTreeMap::new();
        for &(id, u, v) in &self.edges {
            if edges.insert(id, (u, v)).is_some() {
                return Err(DrawingError::Invalid(format!("edge id {id} used twice")));
            }
            if !graph.insert_edge(u, v)? {
                return Err(DrawingError::Invalid(format!("parallel edge {u}-{v}")));
            }
            by_ends.insert(ends_key(u, v), id);
        }
        let mut crossings = self.crossings.clone();
        crossings.sort();
        let mut d = OnePlaneDrawing {
            graph,
            edges,
            by_ends,
            crossings,
            rotations: self.rotations.clone(),
            crossing_rotations: self.crossing_rotations.clone(),
        };
        d.fill_trivial_rotations();
        d.resolve_crossing_rotations();
        Ok(d)
    }
}

impl OnePlaneDrawing {
    /// Crossing-free drawing of a graph whose vertices have degree at most 2,
    /// or of any graph given explicit rotations later. Edge ids follow the
    /// lexicographic edge order.
    pub fn from_graph_trivial(g: &Graph) -> Result<Self, DrawingError> {
        let mut b = DrawingBuilder::new();
        for v in g.vertices() {
            b.vertex(v);
        }
        for (k, (u, v)) in g.edges().enumerate() {
            b.edge(EdgeId(k as u32), u, v);
        }
        b.build()
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn edges(&self) -> impl Iterator<Item = (EdgeId, VertexId, VertexId)> + '_ {
        self.edges.iter().map(|(e, (u, v))| (*e, *u, *v))
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge_ends(&self, e: EdgeId) -> Option<(VertexId, VertexId)> {
        self.edges.get(&e).copied()
    }

    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        self.by_ends.get(&ends_key(u, v)).copied()
    }

    pub fn next_edge_id(&self) -> EdgeId {
        EdgeId(self.edges.keys().next_back().map_or(0, |e| e.0 + 1))
    }

    pub fn crossings(&self) -> &[CrossingPair] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    /// The crossing on `e`, if any (the first one for invalid drawings).
    pub fn crossing_of(&self, e: EdgeId) -> Option<CrossingPair> {
        self.crossings.iter().copied().find(|c| c.contains(e))
    }

    pub fn rotation(&self, v: VertexId) -> Option<&[EdgeId]> {
        self.rotations.get(&v).map(Vec::as_slice)
    }

    pub fn rotations(&self) -> impl Iterator<Item = (VertexId, &[EdgeId])> + '_ {
        self.rotations.iter().map(|(v, r)| (*v, r.as_slice()))
    }

    pub fn crossing_rotation(&self, c: CrossingPair) -> Option<&[HalfEdge]> {
        self.crossing_rotations.get(&c).map(Vec::as_slice)
    }

    pub fn crossing_rotations(&self) -> impl Iterator<Item = (CrossingPair, &[HalfEdge])> + '_ {
        self.crossing_rotations.iter().map(|(c, r)| (*c, r.as_slice()))
    }

    /// `|V| + |E|` of the underlying graph.
    pub fn measure(&self) -> usize {
        self.graph.measure()
    }

    fn incident_edges(&self, v: VertexId) -> BTreeSet<EdgeId> {
        self.graph
            .neighbors(v)
            .iter()
            .map(|&w| self.by_ends[&ends_key(v, w)])
            .collect()
    }

    fn fill_trivial_rotations(&mut self) {
        let verts: Vec<VertexId> = self.graph.vertices().collect();
        for v in verts {
            if !self.rotations.contains_key(&v) && self.graph.degree(v).unwrap() <= 2 {
                let order = self.incident_edges(v).into_iter().collect();
                self.rotations.insert(v, order);
            }
        }
    }

    /// The two cyclic orders at a crossing that alternate its edges.
    fn interleavings(&self, c: CrossingPair) -> Option<[Vec<HalfEdge>; 2]> {
        let (a, b) = self.edge_ends(c.first())?;
        let (p, q) = self.edge_ends(c.second())?;
        let h = |edge, end| HalfEdge { edge, end };
        Some([
            vec![h(c.first(), a), h(c.second(), p), h(c.first(), b), h(c.second(), q)],
            vec![h(c.first(), a), h(c.second(), q), h(c.first(), b), h(c.second(), p)],
        ])
    }

    /// Picks interleavings for crossings given without a rotation so that
    /// the result is spherical, if one exists. Small counts are searched
    /// exhaustively; larger ones by repeated single flips.
    fn resolve_crossing_rotations(&mut self) {
        let missing: Vec<CrossingPair> = self
            .crossings
            .iter()
            .copied()
            .filter(|c| !self.crossing_rotations.contains_key(c))
            .collect();
        if missing.is_empty()
            || self
                .structural_violations()
                .iter()
                .any(|v| !matches!(v, Violation::CrossingRotationMissing { .. }))
        {
            return;
        }
        let options: Vec<[Vec<HalfEdge>; 2]> = match missing
            .iter()
            .map(|&c| self.interleavings(c))
            .collect::<Option<Vec<_>>>()
        {
            Some(o) => o,
            None => return,
        };
        let apply = |d: &mut OnePlaneDrawing, choice: &[usize]| {
            for (k, &c) in missing.iter().enumerate() {
                d.crossing_rotations.insert(c, options[k][choice[k]].clone());
            }
        };
        let mut choice = vec![0usize; missing.len()];
        if missing.len() <= 12 {
            for mask in 0u32..(1 << missing.len()) {
                for (k, slot) in choice.iter_mut().enumerate() {
                    *slot = ((mask >> k) & 1) as usize;
                }
                apply(self, &choice);
                if self.euler_deficit() == Some(0) {
                    return;
                }
            }
            choice.iter_mut().for_each(|c| *c = 0);
            apply(self, &choice);
            return;
        }
        apply(self, &choice);
        let mut best = self.euler_deficit().unwrap_or(i64::MAX);
        let mut improved = true;
        while improved && best > 0 {
            improved = false;
            for k in 0..missing.len() {
                choice[k] ^= 1;
                apply(self, &choice);
                let score = self.euler_deficit().unwrap_or(i64::MAX);
                if score < best {
                    best = score;
                    improved = true;
                } else {
                    choice[k] ^= 1;
                    apply(self, &choice);
                }
            }
        }
    }

    /// Sum over components of `2 - (V - E + F)`; zero exactly when every
    /// component is spherical. `None` when faces cannot be traced.
    fn euler_deficit(&self) -> Option<i64> {
        let plane = AssociatedPlaneGraph::trace(self).ok()?;
        Some(plane.component_euler().iter().map(|(_, chi)| 2 - chi).sum())
    }

    /// Structural checks that must pass before faces can be traced.
    fn structural_violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let mut seen: BTreeMap<EdgeId, usize> = BTreeMap::new();
        for &c in &self.crossings {
            for e in [c.first(), c.second()] {
                if !self.edges.contains_key(&e) {
                    out.push(Violation::UnknownEdgeInCrossing { crossing: c, edge: e });
                }
            }
            if c.first() == c.second() {
                out.push(Violation::SelfCrossing { edge: c.first() });
                continue;
            }
            for e in [c.first(), c.second()] {
                *seen.entry(e).or_default() += 1;
            }
            if let (Some((a, b)), Some((p, q))) = (self.edge_ends(c.first()), self.edge_ends(c.second())) {
                if let Some(&v) = [a, b].iter().find(|x| **x == p || **x == q) {
                    out.push(Violation::CrossingSharesEndpoint { crossing: c, vertex: v });
                }
            }
        }
        for (e, n) in seen {
            if n > 1 {
                out.push(Violation::EdgeCrossedTwice { edge: e });
            }
        }
        for v in self.graph.vertices() {
            match self.rotations.get(&v) {
                None => out.push(Violation::RotationMissing { vertex: v }),
                Some(r) => {
                    let listed: BTreeSet<EdgeId> = r.iter().copied().collect();
                    if listed.len() != r.len() || listed != self.incident_edges(v) {
                        out.push(Violation::RotationMismatch { vertex: v });
                    }
                }
            }
        }
        for &c in &self.crossings {
            let Some(opts) = self.interleavings(c) else { continue };
            match self.crossing_rotations.get(&c) {
                None => out.push(Violation::CrossingRotationMissing { crossing: c }),
                Some(r) => {
                    let got: BTreeSet<HalfEdge> = r.iter().copied().collect();
                    let want: BTreeSet<HalfEdge> = opts[0].iter().copied().collect();
                    if r.len() != 4 || got != want {
                        out.push(Violation::CrossingRotationMismatch { crossing: c });
                    } else if r[0].edge == r[1].edge
                        || r[1].edge == r[2].edge
                        || r[2].edge == r[3].edge
                        || r[3].edge == r[0].edge
                    {
                        out.push(Violation::NotInterleaved { crossing: c });
                    }
                }
            }
        }
        let real: BTreeSet<CrossingPair> = self.crossings.iter().copied().collect();
        for c in self.crossing_rotations.keys() {
            if !real.contains(c) {
                out.push(Violation::UnusedCrossingRotation { crossing: *c });
            }
        }
        out
    }

    /// All violations of the drawing invariants; empty means valid.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = self.structural_violations();
        if !out.is_empty() {
            return out;
        }
        let plane = match AssociatedPlaneGraph::trace(self) {
            Ok(p) => p,
            Err(_) => return out,
        };
        for (component, chi) in plane.component_euler() {
            if chi != 2 {
                let component = component
                    .iter()
                    .filter_map(|x| match x {
                        PlaneVertex::True(v) => Some(*v),
                        PlaneVertex::False(_) => None,
                    })
                    .collect();
                out.push(Violation::NotSpherical { component, euler: chi });
            }
        }
        if plane.has_adjacent_false_vertices() {
            out.push(Violation::AdjacentFalseVertices);
        }
        for (fid, face) in plane.faces() {
            let falses = face.walk().iter().filter(|&&d| plane.tail(d).is_false()).count();
            if 2 * falses > face.degree() {
                out.push(Violation::TooManyFalseVerticesOnFace { face: fid.0 });
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// `self` if valid, otherwise the violations joined into an error.
    pub fn validated(self) -> Result<Self, DrawingError> {
        let v = self.validate();
        if v.is_empty() {
            Ok(self)
        } else {
            Err(DrawingError::Invalid(
                v.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "),
            ))
        }
    }

    /// Builds `G^x`. The drawing must be valid.
    pub fn associated_plane_graph(&self) -> Result<AssociatedPlaneGraph, DrawingError> {
        let v = self.validate();
        if !v.is_empty() {
            return Err(DrawingError::Invalid(
                v.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "),
            ));
        }
        AssociatedPlaneGraph::trace(self)
    }

    /// Renames vertices and keeps everything else.
    pub fn relabel(&self, map: &BTreeMap<VertexId, VertexId>) -> Result<Self, DrawingError> {
        let mut b = DrawingBuilder::new();
        for v in self.graph.vertices() {
            b.vertex(*map.get(&v).ok_or(DrawingError::UnknownVertex(v))?);
        }
        for (e, u, v) in self.edges() {
            b.edge(e, map[&u], map[&v]);
        }
        for &c in &self.crossings {
            b.crossing(c.first(), c.second());
        }
        for (v, r) in &self.rotations {
            b.rotation(map[v], r.clone());
        }
        for (c, r) in &self.crossing_rotations {
            let r = r
                .iter()
                .map(|h| HalfEdge {
                    edge: h.edge,
                    end: map[&h.end],
                })
                .collect();
            b.crossing_rotation(*c, r);
        }
        b.build()
    }

    /// Builder pre-filled with this drawing.
    pub fn to_builder(&self) -> DrawingBuilder {
        DrawingBuilder {
            vertices: self.graph.vertices().collect(),
            edges: self.edges().collect(),
            crossings: self.crossings.clone(),
            rotations: self.rotations.clone(),
            crossing_rotations: self.crossing_rotations.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vid(v: u32) -> VertexId {
        VertexId(v)
    }

    /// Edges 0 = a-c and 1 = b-d crossing, drawn as an X.
    pub(crate) fn cross_star() -> OnePlaneDrawing {
        let mut b = DrawingBuilder::new();
        b.edge(EdgeId(0), vid(0), vid(2))
            .edge(EdgeId(1), vid(1), vid(3))
            .crossing(EdgeId(0), EdgeId(1));
        b.build().unwrap()
    }

    #[test]
    fn missing_crossing_rotation_is_resolved() {
        let d = cross_star();
        assert!(d.is_valid(), "{:?}", d.validate());
        assert_eq!(
            d.crossing_rotation(CrossingPair::new(EdgeId(0), EdgeId(1)))
                .unwrap()
                .len(),
            4
        );
    }

    #[test]
    fn edge_crossed_twice_is_reported() {
        let mut b = DrawingBuilder::new();
        b.edge(EdgeId(0), vid(0), vid(1))
            .edge(EdgeId(1), vid(2), vid(3))
            .edge(EdgeId(2), vid(4), vid(5))
            .crossing(EdgeId(0), EdgeId(1))
            .crossing(EdgeId(0), EdgeId(2));
        let v = b.build().unwrap().validate();
        assert!(v.contains(&Violation::EdgeCrossedTwice { edge: EdgeId(0) }), "{v:?}");
    }

    #[test]
    fn crossing_edges_sharing_endpoint_is_reported() {
        let mut b = DrawingBuilder::new();
        b.edge(EdgeId(0), vid(0), vid(1))
            .edge(EdgeId(1), vid(0), vid(2))
            .crossing(EdgeId(0), EdgeId(1));
        let v = b.build().unwrap().validate();
        assert!(v
            .iter()
            .any(|x| matches!(x, Violation::CrossingSharesEndpoint { vertex, .. } if *vertex == vid(0))));
    }

    #[test]
    fn non_interleaved_rotation_is_reported() {
        let mut b = DrawingBuilder::new();
        let c = CrossingPair::new(EdgeId(0), EdgeId(1));
        let h = |e, v| HalfEdge {
            edge: EdgeId(e),
            end: vid(v),
        };
        b.edge(EdgeId(0), vid(0), vid(2))
            .edge(EdgeId(1), vid(1), vid(3))
            .crossing(EdgeId(0), EdgeId(1))
            .crossing_rotation(c, vec![h(0, 0), h(0, 2), h(1, 1), h(1, 3)]);
        let v = b.build().unwrap().validate();
        assert!(v.contains(&Violation::NotInterleaved { crossing: c }), "{v:?}");
    }

    #[test]
    fn builder_rejects_parallel_edges() {
        let mut b = DrawingBuilder::new();
        b.edge(EdgeId(0), vid(0), vid(1)).edge(EdgeId(1), vid(1), vid(0));
        assert!(b.build().is_err());
    }

    #[test]
    fn bad_rotation_gives_non_spherical_component() {
        // K4 with a rotation system of genus one
        let mut b = DrawingBuilder::new();
        let e = |k| EdgeId(k);
        b.edge(e(0), vid(0), vid(1))
            .edge(e(1), vid(0), vid(2))
            .edge(e(2), vid(0), vid(3))
            .edge(e(3), vid(1), vid(2))
            .edge(e(4), vid(1), vid(3))
            .edge(e(5), vid(2), vid(3))
            .rotation(vid(0), vec![e(0), e(1), e(2)])
            .rotation(vid(1), vec![e(0), e(3), e(4)])
            .rotation(vid(2), vec![e(1), e(3), e(5)])
            .rotation(vid(3), vec![e(2), e(4), e(5)]);
        let v = b.build().unwrap().validate();
        assert!(v.iter().any(|x| matches!(x, Violation::NotSpherical { .. })), "{v:?}");
    }
}
