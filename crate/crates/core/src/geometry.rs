//! Straight-line drawings with integer coordinates.
//!
//! Used to build fixtures and random inputs: crossings are found exactly,
//! and rotations come from sorting directions by angle.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::drawing::{CrossingPair, DrawingBuilder, EdgeId, HalfEdge, OnePlaneDrawing};
use crate::error::DrawingError;
use crate::graph::VertexId;

pub type Point = (i64, i64);

fn cross(o: Point, a: Point, b: Point) -> i64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

/// Strictly inside segment `ab` (not at an endpoint), collinear.
fn on_open_segment(p: Point, a: Point, b: Point) -> bool {
    cross(a, b, p) == 0
        && p != a
        && p != b
        && p.0 >= a.0.min(b.0)
        && p.0 <= a.0.max(b.0)
        && p.1 >= a.1.min(b.1)
        && p.1 <= a.1.max(b.1)
}

/// How two segments without common endpoint meet.
#[derive(Debug, PartialEq, Eq)]
enum Meet {
    Apart,
    Proper,
    Degenerate,
}

fn meet(a: Point, b: Point, c: Point, d: Point) -> Meet {
    let d1 = cross(a, b, c).signum();
    let d2 = cross(a, b, d).signum();
    let d3 = cross(c, d, a).signum();
    let d4 = cross(c, d, b).signum();
    if d1 * d2 < 0 && d3 * d4 < 0 {
        return Meet::Proper;
    }
    if on_open_segment(c, a, b)
        || on_open_segment(d, a, b)
        || on_open_segment(a, c, d)
        || on_open_segment(b, c, d)
        || (d1 == 0 && d2 == 0 && d3 == 0 && d4 == 0 && {
            // collinear overlap
            let (lo1, hi1) = (a.min(b), a.max(b));
            let (lo2, hi2) = (c.min(d), c.max(d));
            lo1 < hi2 && lo2 < hi1
        })
    {
        return Meet::Degenerate;
    }
    Meet::Apart
}

/// Counter-clockwise angular order starting from the positive x-axis.
fn angle_cmp(a: Point, b: Point) -> Ordering {
    let half = |p: Point| if p.1 > 0 || (p.1 == 0 && p.0 > 0) { 0 } else { 1 };
    half(a).cmp(&half(b)).then_with(|| 0.cmp(&(a.0 * b.1 - a.1 * b.0)))
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct StraightLineDrawing {
    pub points: BTreeMap<VertexId, Point>,
    pub edges: Vec<(VertexId, VertexId)>,
}

impl StraightLineDrawing {
    pub fn new(points: &[Point], edges: &[(u32, u32)]) -> Self {
        StraightLineDrawing {
            points: points
                .iter()
                .enumerate()
                .map(|(i, p)| (VertexId(i as u32), *p))
                .collect(),
            edges: edges.iter().map(|&(a, b)| (VertexId(a), VertexId(b))).collect(),
        }
    }

    /// Pairs of edge indices that cross properly. Errors on touching,
    /// overlapping or vertex-on-edge configurations.
    pub fn crossings(&self) -> Result<Vec<(usize, usize)>, DrawingError> {
        let mut out = Vec::new();
        for i in 0..self.edges.len() {
            for j in i + 1..self.edges.len() {
                let (a, b) = self.edges[i];
                let (c, d) = self.edges[j];
                let shared = a == c || a == d || b == c || b == d;
                let (pa, pb, pc, pd) = (self.points[&a], self.points[&b], self.points[&c], self.points[&d]);
                if shared {
                    let other = if a == c || b == c { pd } else { pc };
                    let common = if a == c || a == d { pa } else { pb };
                    let far = if common == pa { pb } else { pa };
                    // two edges at a common vertex overlap only if collinear
                    // and pointing the same way
                    if cross(common, far, other) == 0
                        && (far.0 - common.0) * (other.0 - common.0) + (far.1 - common.1) * (other.1 - common.1) > 0
                    {
                        return Err(DrawingError::Invalid(format!("edges {a}-{b} and {c}-{d} overlap")));
                    }
                    continue;
                }
                match meet(pa, pb, pc, pd) {
                    Meet::Apart => {}
                    Meet::Proper => out.push((i, j)),
                    Meet::Degenerate => return Err(DrawingError::Invalid(format!("edges {a}-{b} and {c}-{d} touch"))),
                }
            }
        }
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            for (&v, &p) in &self.points {
                if v != a && v != b && on_open_segment(p, self.points[&a], self.points[&b]) {
                    return Err(DrawingError::Invalid(format!("vertex {v} lies on edge {i} ({a}-{b})")));
                }
            }
        }
        Ok(out)
    }

    /// Converts to a rotation system. Edge `i` gets id `i`. The result is
    /// not validated; an edge with two crossings yields an invalid drawing.
    pub fn to_drawing(&self) -> Result<OnePlaneDrawing, DrawingError> {
        let crossings = self.crossings()?;
        let mut b = DrawingBuilder::new();
        for &v in self.points.keys() {
            b.vertex(v);
        }
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            b.edge(EdgeId(i as u32), u, v);
        }
        let mut around: BTreeMap<VertexId, Vec<(Point, EdgeId)>> =
            self.points.keys().map(|v| (*v, Vec::new())).collect();
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            let (pu, pv) = (self.points[&u], self.points[&v]);
            let e = EdgeId(i as u32);
            around.get_mut(&u).unwrap().push(((pv.0 - pu.0, pv.1 - pu.1), e));
            around.get_mut(&v).unwrap().push(((pu.0 - pv.0, pu.1 - pv.1), e));
        }
        for (v, mut dirs) in around {
            dirs.sort_by(|a, b| angle_cmp(a.0, b.0));
            b.rotation(v, dirs.into_iter().map(|(_, e)| e).collect());
        }
        for (i, j) in crossings {
            let (ei, ej) = (EdgeId(i as u32), EdgeId(j as u32));
            b.crossing(ei, ej);
            let mut halves = Vec::new();
            for (e, (a, bb)) in [(ei, self.edges[i]), (ej, self.edges[j])] {
                let (pa, pb) = (self.points[&a], self.points[&bb]);
                halves.push(((pa.0 - pb.0, pa.1 - pb.1), HalfEdge { edge: e, end: a }));
                halves.push(((pb.0 - pa.0, pb.1 - pa.1), HalfEdge { edge: e, end: bb }));
            }
            halves.sort_by(|a, b| angle_cmp(a.0, b.0));
            b.crossing_rotation(CrossingPair::new(ei, ej), halves.into_iter().map(|(_, h)| h).collect());
        }
        b.build()
    }

    /// Number of crossings on each edge index.
    pub fn crossings_per_edge(&self) -> Result<Vec<usize>, DrawingError> {
        let mut count = vec![0; self.edges.len()];
        for (i, j) in self.crossings()? {
            count[i] += 1;
            count[j] += 1;
        }
        Ok(count)
    }
}

/// Parameters of the random drawing generators.
#[derive(Clone, Copy, Debug)]
pub struct RandomDrawingParams {
    pub vertices: usize,
    /// Side of the square the points are drawn from.
    pub extent: i64,
    /// Probability of keeping each admissible edge.
    pub keep: f64,
    /// Whether an edge may cross one other edge.
    pub one_plane: bool,
}

fn random_points(rng: &mut ChaCha8Rng, n: usize, extent: i64) -> Vec<Point> {
    let mut pts: Vec<Point> = Vec::with_capacity(n);
    let mut seen = BTreeSet::new();
    while pts.len() < n {
        let p = (rng.gen_range(0..extent), rng.gen_range(0..extent));
        if !seen.insert(p) {
            continue;
        }
        // avoid collinear triples so that edges never run through vertices
        let collinear = pts
            .iter()
            .enumerate()
            .any(|(i, &a)| pts[i + 1..].iter().any(|&b| cross(a, b, p) == 0));
        if !collinear {
            pts.push(p);
        } else {
            seen.remove(&p);
        }
    }
    pts
}

/// Greedy random straight-line drawing: candidate edges in order of length
/// are kept when they respect planarity (or 1-planarity) and a coin flip.
pub fn random_drawing(params: RandomDrawingParams, seed: u64) -> StraightLineDrawing {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = params.vertices;
    let pts = random_points(&mut rng, n, params.extent);
    let mut cand: Vec<(i64, usize, usize)> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let (a, b) = (pts[i], pts[j]);
            let len = (a.0 - b.0).pow(2) + (a.1 - b.1).pow(2);
            cand.push((len, i, j));
        }
    }
    cand.shuffle(&mut rng);
    cand.sort_by_key(|c| c.0);
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut crossed: Vec<bool> = Vec::new();
    for (_, i, j) in cand {
        if rng.gen::<f64>() > params.keep {
            continue;
        }
        let mut hits = Vec::new();
        for (k, &(a, b)) in edges.iter().enumerate() {
            if a == i || a == j || b == i || b == j {
                continue;
            }
            if meet(pts[i], pts[j], pts[a], pts[b]) == Meet::Proper {
                hits.push(k);
            }
        }
        let ok = match hits.as_slice() {
            [] => true,
            [k] => params.one_plane && !crossed[*k],
            _ => false,
        };
        if ok {
            for &k in &hits {
                crossed[k] = true;
            }
            edges.push((i, j));
            crossed.push(!hits.is_empty());
        }
    }
    StraightLineDrawing::new(
        &pts,
        &edges.iter().map(|&(a, b)| (a as u32, b as u32)).collect::<Vec<_>>(),
    )
}
