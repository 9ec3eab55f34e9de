//! Simple undirected graphs, colorings and list assignments.
//!
//! Graphs are plain values: every structural operation that the reduction
//! machinery uses returns a new graph and leaves its input untouched, so a
//! parent graph stays available while a coloring of a smaller graph is being
//! extended back onto it. Vertex identifiers are never renumbered.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;

/// Stable vertex identifier.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(pub u32);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<u32> for VertexId {
    fn from(v: u32) -> Self {
        VertexId(v)
    }
}

/// Colors are positive integers.
pub type Color = u32;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Graph {
    adj: BTreeMap<VertexId, BTreeSet<VertexId>>,
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Graph on vertices `0..n` with the given edges.
    pub fn from_edges(n: u32, edges: &[(u32, u32)]) -> Result<Self, GraphError> {
        let mut g = Graph::new();
        for v in 0..n {
            g.insert_vertex(VertexId(v));
        }
        for &(a, b) in edges {
            g.insert_edge(VertexId(a), VertexId(b))?;
        }
        Ok(g)
    }

    /// Adds `v` if absent. Returns whether it was new.
    pub fn insert_vertex(&mut self, v: VertexId) -> bool {
        if self.adj.contains_key(&v) {
            return false;
        }
        self.adj.insert(v, BTreeSet::new());
        true
    }

    /// In-place edge insertion used by builders and parsers. Returns whether
    /// the edge was new.
    pub fn insert_edge(&mut self, u: VertexId, v: VertexId) -> Result<bool, GraphError> {
        if u == v {
            return Err(GraphError::Loop(u));
        }
        for x in [u, v] {
            if !self.adj.contains_key(&x) {
                return Err(GraphError::UnknownVertex(x));
            }
        }
        let fresh = self.adj.get_mut(&u).unwrap().insert(v);
        self.adj.get_mut(&v).unwrap().insert(u);
        Ok(fresh)
    }

    /// In-place edge removal; returns whether the edge existed.
    pub fn delete_edge(&mut self, u: VertexId, v: VertexId) -> bool {
        let hit = self.adj.get_mut(&u).is_some_and(|s| s.remove(&v));
        if hit {
            self.adj.get_mut(&v).unwrap().remove(&u);
        }
        hit
    }

    /// Returns a copy with the edge `uv` present (idempotent).
    pub fn add_edge(&self, u: VertexId, v: VertexId) -> Result<Graph, GraphError> {
        let mut g = self.clone();
        g.insert_edge(u, v)?;
        Ok(g)
    }

    /// Induced subgraph on `V(G) \ removed`.
    pub fn remove_vertices(&self, removed: &[VertexId]) -> Result<Graph, GraphError> {
        if let Some(&bad) = removed.iter().find(|v| !self.contains(**v)) {
            return Err(GraphError::UnknownVertex(bad));
        }
        let gone: BTreeSet<VertexId> = removed.iter().copied().collect();
        let adj = self
            .adj
            .iter()
            .filter(|(v, _)| !gone.contains(v))
            .map(|(v, ns)| (*v, ns.difference(&gone).copied().collect()))
            .collect();
        Ok(Graph { adj })
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.adj.contains_key(&v)
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj.get(&u).is_some_and(|s| s.contains(&v))
    }

    pub fn degree(&self, v: VertexId) -> Result<usize, GraphError> {
        self.adj.get(&v).map(BTreeSet::len).ok_or(GraphError::UnknownVertex(v))
    }

    /// Neighbor set of `v`.
    ///
    /// Panics if `v` is not a vertex; use [`Graph::try_neighbors`] for
    /// unchecked input.
    pub fn neighbors(&self, v: VertexId) -> &BTreeSet<VertexId> {
        self.adj
            .get(&v)
            .unwrap_or_else(|| panic!("vertex {v} is not in the graph"))
    }

    pub fn try_neighbors(&self, v: VertexId) -> Result<&BTreeSet<VertexId>, GraphError> {
        self.adj.get(&v).ok_or(GraphError::UnknownVertex(v))
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.adj.keys().copied()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adj.iter().flat_map(|(&u, ns)| ns.range(u..).map(move |&v| (u, v)))
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.values().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn max_degree(&self) -> usize {
        self.adj.values().map(BTreeSet::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.values().map(BTreeSet::len).min().unwrap_or(0)
    }

    /// Smallest identifier strictly above every present vertex.
    pub fn next_vertex_id(&self) -> VertexId {
        VertexId(self.adj.keys().next_back().map_or(0, |v| v.0 + 1))
    }

    /// `|V| + |E|`, the size measure reductions must decrease.
    pub fn measure(&self) -> usize {
        self.vertex_count() + self.edge_count()
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for start in self.vertices() {
            if !seen.insert(start) {
                continue;
            }
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &w in self.neighbors(v) {
                    if seen.insert(w) {
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Applies a vertex renaming. Every vertex must be mapped, injectively.
    pub fn relabel(&self, map: &BTreeMap<VertexId, VertexId>) -> Result<Graph, GraphError> {
        let mut g = Graph::new();
        for v in self.vertices() {
            let img = *map.get(&v).ok_or(GraphError::UnknownVertex(v))?;
            if !g.insert_vertex(img) {
                return Err(GraphError::DuplicateVertex(img));
            }
        }
        for (u, v) in self.edges() {
            g.insert_edge(map[&u], map[&v])?;
        }
        Ok(g)
    }

    /// The 2-subdivision: every edge receives a new middle vertex of degree
    /// two. Original vertices keep their identifiers; the midpoint of the
    /// `k`-th edge (lexicographic order) gets `next_vertex_id() + k`.
    pub fn two_subdivision(&self) -> Subdivision {
        let base = self.next_vertex_id().0;
        let mut graph = Graph::new();
        let mut embedding = BTreeMap::new();
        for v in self.vertices() {
            graph.insert_vertex(v);
            embedding.insert(v, v);
        }
        let mut midpoints = BTreeMap::new();
        for (k, (u, v)) in self.edges().enumerate() {
            let s = VertexId(base + k as u32);
            graph.insert_vertex(s);
            graph.insert_edge(u, s).expect("fresh midpoint");
            graph.insert_edge(s, v).expect("fresh midpoint");
            midpoints.insert(s, (u, v));
        }
        Subdivision {
            graph,
            embedding,
            midpoints,
        }
    }

    /// Necessary condition for 2-planarity: `|E| <= 5|V| - 10`.
    pub fn two_planar_edge_bound_check(&self) -> Result<bool, GraphError> {
        let n = self.vertex_count();
        if n < 3 {
            return Err(GraphError::TooFewVertices { needed: 3, found: n });
        }
        Ok(self.edge_count() + 10 <= 5 * n)
    }
}

/// Result of [`Graph::two_subdivision`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subdivision {
    pub graph: Graph,
    /// Original vertex to its copy in the subdivided graph.
    pub embedding: BTreeMap<VertexId, VertexId>,
    /// New degree-two vertices with the original edge they split.
    pub midpoints: BTreeMap<VertexId, (VertexId, VertexId)>,
}

impl Subdivision {
    pub fn subdivision_vertices(&self) -> BTreeSet<VertexId> {
        self.midpoints.keys().copied().collect()
    }
}

/// Vertex coloring; may be partial while a coloring is being extended.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Coloring(BTreeMap<VertexId, Color>);

impl Coloring {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, v: VertexId) -> Option<Color> {
        self.0.get(&v).copied()
    }

    pub fn set(&mut self, v: VertexId, c: Color) -> Option<Color> {
        self.0.insert(v, c)
    }

    pub fn remove(&mut self, v: VertexId) -> Option<Color> {
        self.0.remove(&v)
    }

    pub fn iter(&self) -> impl Iterator<Item = (VertexId, Color)> + '_ {
        self.0.iter().map(|(v, c)| (*v, *c))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// First vertex of `g` without a color, if any.
    pub fn first_uncolored(&self, g: &Graph) -> Option<VertexId> {
        g.vertices().find(|v| !self.0.contains_key(v))
    }

    pub fn distinct_colors(&self) -> BTreeSet<Color> {
        self.0.values().copied().collect()
    }

    /// Restriction to the vertices of `g`.
    pub fn restricted_to(&self, g: &Graph) -> Coloring {
        Coloring(
            self.0
                .iter()
                .filter(|(v, _)| g.contains(**v))
                .map(|(v, c)| (*v, *c))
                .collect(),
        )
    }

    /// Applies a color renaming; colors missing from `perm` are kept.
    pub fn recolored(&self, perm: &BTreeMap<Color, Color>) -> Coloring {
        Coloring(self.0.iter().map(|(v, c)| (*v, *perm.get(c).unwrap_or(c))).collect())
    }
}

impl FromIterator<(VertexId, Color)> for Coloring {
    fn from_iter<I: IntoIterator<Item = (VertexId, Color)>>(iter: I) -> Self {
        Coloring(iter.into_iter().collect())
    }
}

/// Candidate color sets per vertex.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ListAssignment(BTreeMap<VertexId, BTreeSet<Color>>);

impl ListAssignment {
    pub fn new() -> Self {
        Self::default()
    }

    /// Every vertex of `g` gets `{1, ..., size}`.
    pub fn uniform(g: &Graph, size: u32) -> Self {
        let list: BTreeSet<Color> = (1..=size).collect();
        ListAssignment(g.vertices().map(|v| (v, list.clone())).collect())
    }

    pub fn set(&mut self, v: VertexId, colors: impl IntoIterator<Item = Color>) {
        self.0.insert(v, colors.into_iter().collect());
    }

    pub fn get(&self, v: VertexId) -> Option<&BTreeSet<Color>> {
        self.0.get(&v)
    }

    pub fn iter(&self) -> impl Iterator<Item = (VertexId, &BTreeSet<Color>)> + '_ {
        self.0.iter().map(|(v, l)| (*v, l))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Smallest list size over the vertices of `g` (0 when a vertex has no list).
    pub fn min_size_on(&self, g: &Graph) -> usize {
        g.vertices()
            .map(|v| self.0.get(&v).map_or(0, BTreeSet::len))
            .min()
            .unwrap_or(usize::MAX)
    }

    /// True when every vertex of `g` has a non-empty list.
    pub fn covers(&self, g: &Graph) -> bool {
        g.vertices().all(|v| self.0.get(&v).is_some_and(|l| !l.is_empty()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn vid(v: u32) -> VertexId {
        VertexId(v)
    }

    #[test]
    fn degrees_of_standard_families() {
        let k4 = families::complete(4);
        assert!(k4.vertices().all(|v| k4.degree(v).unwrap() == 3));
        let c6 = families::cycle(6);
        assert!(c6.vertices().all(|v| c6.degree(v).unwrap() == 2));
        let mut g = Graph::new();
        g.insert_vertex(vid(7));
        assert_eq!(g.degree(vid(7)).unwrap(), 0);
        assert_eq!(g.degree(vid(8)), Err(GraphError::UnknownVertex(vid(8))));
    }

    #[test]
    fn remove_vertices_examples() {
        let c5 = families::cycle(5);
        let p4 = c5.remove_vertices(&[vid(0)]).unwrap();
        assert_eq!(p4.vertex_count(), 4);
        assert_eq!(p4.edge_count(), 3);
        assert_eq!(p4.max_degree(), 2);
        assert!(p4.is_connected());

        let k3 = families::complete(3);
        let k1 = k3.remove_vertices(&[vid(0), vid(2)]).unwrap();
        assert_eq!(k1.vertices().collect::<Vec<_>>(), vec![vid(1)]);
        assert_eq!(k1.edge_count(), 0);

        assert_eq!(c5.remove_vertices(&[]).unwrap(), c5);
        assert_eq!(c5.remove_vertices(&[vid(9)]), Err(GraphError::UnknownVertex(vid(9))));
        // the input is untouched
        assert_eq!(c5.vertex_count(), 5);
    }

    #[test]
    fn add_edge_examples() {
        let p3 = families::path(3);
        let c3 = p3.add_edge(vid(0), vid(2)).unwrap();
        assert_eq!(c3, families::cycle(3));
        assert_eq!(c3.add_edge(vid(0), vid(1)).unwrap(), c3);
        let two = Graph::from_edges(2, &[]).unwrap();
        assert_eq!(two.add_edge(vid(0), vid(1)).unwrap(), families::complete(2));
        assert_eq!(two.add_edge(vid(1), vid(1)), Err(GraphError::Loop(vid(1))));
    }

    #[test]
    fn subdivision_examples() {
        for n in 3..9 {
            let s = families::cycle(n).two_subdivision();
            assert_eq!(s.graph.vertex_count(), 2 * n as usize);
            assert!(s.graph.vertices().all(|v| s.graph.degree(v).unwrap() == 2));
            assert!(s.graph.is_connected());
        }
        let k7 = families::complete(7).two_subdivision();
        assert_eq!(k7.graph.vertex_count(), 28);
        assert_eq!(k7.graph.edge_count(), 42);
        assert!(k7
            .subdivision_vertices()
            .iter()
            .all(|&s| k7.graph.degree(s).unwrap() == 2));
    }

    #[test]
    fn edge_bound_examples() {
        assert!(families::complete(7).two_planar_edge_bound_check().unwrap());
        assert!(!families::complete(9).two_planar_edge_bound_check().unwrap());
        assert!(families::cycle(5).two_planar_edge_bound_check().unwrap());
        assert!(matches!(
            families::complete(2).two_planar_edge_bound_check(),
            Err(GraphError::TooFewVertices { .. })
        ));
    }

    #[test]
    fn insert_edge_rejects_loops_and_unknowns() {
        let mut g = Graph::from_edges(2, &[]).unwrap();
        assert_eq!(g.insert_edge(vid(0), vid(0)), Err(GraphError::Loop(vid(0))));
        assert_eq!(g.insert_edge(vid(0), vid(5)), Err(GraphError::UnknownVertex(vid(5))));
        assert_eq!(g.insert_edge(vid(0), vid(1)), Ok(true));
        assert_eq!(g.insert_edge(vid(1), vid(0)), Ok(false));
    }
}
