//! Small graph catalogs and hand-placed drawing fixtures.

use std::collections::{BTreeMap, BTreeSet};

use crate::drawing::OnePlaneDrawing;
use crate::geometry::{Point, StraightLineDrawing};
use crate::graph::{Graph, VertexId};

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Every graph on exactly `n` vertices up to isomorphism (`n <= 6`), as
/// edge bitmasks over `pairs(n)`.
fn canonical_masks(n: usize) -> Vec<u32> {
    assert!(n <= 6, "enumeration is limited to 6 vertices");
    let ps = pairs(n);
    let index = |a: usize, b: usize| ps.iter().position(|&p| p == (a.min(b), a.max(b))).unwrap();
    let perms = permutations(n);
    let maps: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| ps.iter().map(|&(a, b)| index(p[a], p[b])).collect())
        .collect();
    let mut seen = BTreeSet::new();
    for mask in 0u32..(1 << ps.len()) {
        let canon = maps
            .iter()
            .map(|m| {
                let mut out = 0u32;
                for (k, &to) in m.iter().enumerate() {
                    if mask >> k & 1 == 1 {
                        out |= 1 << to;
                    }
                }
                out
            })
            .min()
            .unwrap();
        seen.insert(canon);
    }
    seen.into_iter().collect()
}

fn from_mask(n: usize, mask: u32) -> Graph {
    let edges: Vec<(u32, u32)> = pairs(n)
        .into_iter()
        .enumerate()
        .filter(|(k, _)| mask >> k & 1 == 1)
        .map(|(_, (a, b))| (a as u32, b as u32))
        .collect();
    Graph::from_edges(n as u32, &edges).expect("valid edges")
}

/// All graphs with 1 to `max_n` vertices, one per isomorphism class.
pub fn all_graphs(max_n: usize) -> Vec<Graph> {
    (1..=max_n)
        .flat_map(|n| canonical_masks(n).into_iter().map(move |m| from_mask(n, m)))
        .collect()
}

fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let ids: Vec<_> = g.vertices().collect();
    let n = ids.len();
    let mut a = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            a[i][j] = g.has_edge(ids[i], ids[j]);
        }
    }
    a
}

fn has_k5(a: &[Vec<bool>], verts: &[usize]) -> bool {
    verts.len() == 5 && pairs(5).iter().all(|&(i, j)| a[verts[i]][verts[j]])
}

/// Planarity for graphs with at most six vertices: no `K5` minor (at most
/// one contraction is possible) and no `K3,3` subgraph.
pub fn is_planar_small(g: &Graph) -> bool {
    let n = g.vertex_count();
    assert!(n <= 6, "small planarity test is limited to 6 vertices");
    if n <= 4 {
        return true;
    }
    if g.edge_count() > 3 * n - 6 {
        return false;
    }
    // five vertices: only K5 exceeds the edge bound
    let a = adjacency(g);
    if n == 6 {
        for skip in 0..6 {
            let rest: Vec<usize> = (0..6).filter(|&x| x != skip).collect();
            if has_k5(&a, &rest) {
                return false;
            }
        }
        for (x, y) in pairs(6) {
            if !a[x][y] {
                continue;
            }
            // contract y into x
            let mut b = a.to_vec();
            for z in 0..6 {
                if a[y][z] && z != x {
                    b[x][z] = true;
                    b[z][x] = true;
                }
            }
            let rest: Vec<usize> = (0..6).filter(|&z| z != y).collect();
            if has_k5(&b, &rest) {
                return false;
            }
        }
        for mask in 0u32..64 {
            if mask.count_ones() != 3 || mask & 1 == 0 {
                continue;
            }
            let side: Vec<usize> = (0..6).filter(|&i| mask >> i & 1 == 1).collect();
            let other: Vec<usize> = (0..6).filter(|&i| mask >> i & 1 == 0).collect();
            if side.iter().all(|&i| other.iter().all(|&j| a[i][j])) {
                return false;
            }
        }
    }
    true
}

/// Connected planar graphs with 1 to `max_n <= 6` vertices, one per
/// isomorphism class.
pub fn planar_graphs(max_n: usize) -> Vec<Graph> {
    all_graphs(max_n)
        .into_iter()
        .filter(|g| g.is_connected() && is_planar_small(g))
        .collect()
}

/// A named drawing given by coordinates.
#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: &'static str,
    pub description: &'static str,
    pub geometry: StraightLineDrawing,
    pub drawing: OnePlaneDrawing,
}

fn fixture_from(name: &'static str, description: &'static str, pts: &[Point], edges: &[(u32, u32)]) -> Fixture {
    let geometry = StraightLineDrawing::new(pts, edges);
    let drawing = geometry.to_drawing().unwrap_or_else(|e| panic!("fixture {name}: {e}"));
    Fixture {
        name,
        description,
        geometry,
        drawing,
    }
}

fn cycle_edges(n: u32) -> Vec<(u32, u32)> {
    (0..n).map(|i| (i, (i + 1) % n)).collect()
}

fn with_leaves(pts: &mut Vec<Point>, edges: &mut Vec<(u32, u32)>, center: u32, leaves: &[Point]) {
    for &p in leaves {
        pts.push(p);
        edges.push((center, pts.len() as u32 - 1));
    }
}

const K6_POINTS: [Point; 6] = [(24, 22), (18, 21), (28, 15), (40, 39), (33, 9), (3, 21)];

const K7_STAR_POINTS: [Point; 28] = [
    (72, 7),
    (59, 15),
    (18, 35),
    (14, 60),
    (80, 69),
    (33, 30),
    (3, 10),
    (62, 17),
    (16, 12),
    (79, 64),
    (73, 15),
    (61, 39),
    (22, 4),
    (23, 19),
    (48, 55),
    (73, 31),
    (52, 29),
    (38, 7),
    (29, 24),
    (6, 77),
    (22, 41),
    (16, 19),
    (29, 75),
    (36, 49),
    (6, 63),
    (40, 57),
    (74, 0),
    (27, 18),
];

fn k7_star() -> Fixture {
    let mut edges = Vec::new();
    for (k, (i, j)) in pairs(7).into_iter().enumerate() {
        let s = 7 + k as u32;
        edges.push((i as u32, s));
        edges.push((s, j as u32));
    }
    fixture_from("k7-star", "2-subdivision of K7, 1-plane", &K7_STAR_POINTS, &edges)
}

fn six_face() -> Fixture {
    // u, v, w special 2-vertices; u', v', w' big
    let mut pts: Vec<Point> = vec![(0, 30), (-26, -15), (26, -15), (0, 10), (-9, -5), (9, -5)];
    let (u1, v1, w1, u, v, w) = (0, 1, 2, 3, 4, 5);
    let mut edges = vec![
        (u, v1),
        (u, w1),
        (v, u1),
        (v, w1),
        (w, u1),
        (w, v1),
        (u1, v1),
        (v1, w1),
        (w1, u1),
    ];
    let top: Vec<Point> = (-4..=4).map(|x| (x, 40)).collect();
    let left: Vec<Point> = (-19..=-11).map(|y| (-36, y)).collect();
    let right: Vec<Point> = (-19..=-11).map(|y| (36, y)).collect();
    with_leaves(&mut pts, &mut edges, u1, &top);
    with_leaves(&mut pts, &mut edges, v1, &left);
    with_leaves(&mut pts, &mut edges, w1, &right);
    fixture_from(
        "six-face",
        "6-face alternating three special 2-vertices and three crossings",
        &pts,
        &edges,
    )
}

fn special_four_face() -> Fixture {
    let mut pts: Vec<Point> = vec![(0, 10), (0, 0), (-6, -2), (-6, 12), (6, -2), (6, 12)];
    let mut edges = vec![(0, 2), (1, 3), (0, 4), (1, 5)];
    let leaves: Vec<Point> = (-4..=4).map(|x| (x, 20)).collect();
    with_leaves(&mut pts, &mut edges, 0, &leaves);
    fixture_from(
        "special-4-face",
        "big vertex and a 2-vertex on a 4-face between two crossings",
        &pts,
        &edges,
    )
}

fn big_triangle() -> Fixture {
    let mut pts: Vec<Point> = vec![(0, 0), (40, 0), (20, 34)];
    let mut edges = vec![(0, 1), (1, 2), (2, 0)];
    let a: Vec<Point> = (1..=9).map(|k| (-10, -k)).collect();
    let b: Vec<Point> = (1..=9).map(|k| (50, -k)).collect();
    let c: Vec<Point> = (16..=24).map(|x| (x, 44)).collect();
    with_leaves(&mut pts, &mut edges, 0, &a);
    with_leaves(&mut pts, &mut edges, 1, &b);
    with_leaves(&mut pts, &mut edges, 2, &c);
    fixture_from("big-triangle", "triangle of three 11-vertices", &pts, &edges)
}

/// Every fixture, in a fixed order.
pub fn fixtures() -> Vec<Fixture> {
    let square: [Point; 4] = [(0, 0), (10, 0), (10, 10), (0, 10)];
    let hexagon: [Point; 6] = [(10, 0), (20, 0), (25, 9), (20, 18), (10, 18), (5, 9)];
    vec![
        fixture_from("cross-star", "two crossing edges", &square, &[(0, 2), (1, 3)]),
        fixture_from("c4", "plane 4-cycle", &square, &cycle_edges(4)),
        fixture_from(
            "k4-crossed",
            "K4 with crossing diagonals",
            &square,
            &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)],
        ),
        fixture_from("c6", "plane 6-cycle", &hexagon, &cycle_edges(6)),
        fixture_from(
            "octahedron",
            "plane triangulation on six vertices",
            &[(0, 0), (40, 0), (20, 40), (20, 8), (26, 20), (14, 20)],
            &[
                (0, 1),
                (1, 2),
                (2, 0),
                (3, 4),
                (4, 5),
                (5, 3),
                (0, 3),
                (1, 3),
                (1, 4),
                (2, 4),
                (2, 5),
                (0, 5),
            ],
        ),
        fixture_from(
            "k6",
            "1-plane K6",
            &K6_POINTS,
            &pairs(6)
                .into_iter()
                .map(|(a, b)| (a as u32, b as u32))
                .collect::<Vec<_>>(),
        ),
        k7_star(),
        six_face(),
        fixture_from(
            "false-3-face",
            "two crossing edges and one side",
            &square,
            &[(0, 2), (1, 3), (0, 1)],
        ),
        special_four_face(),
        big_triangle(),
        fixture_from(
            "p3",
            "path on three vertices",
            &[(0, 0), (10, 0), (20, 5)],
            &[(0, 1), (1, 2)],
        ),
        fixture_from(
            "disconnected",
            "triangle, an edge and an isolated vertex",
            &[(0, 0), (10, 0), (5, 8), (20, 0), (30, 3), (40, 10)],
            &[(0, 1), (1, 2), (2, 0), (3, 4)],
        ),
    ]
}

pub fn fixture(name: &str) -> Option<Fixture> {
    fixtures().into_iter().find(|f| f.name == name)
}

pub fn fixture_names() -> Vec<&'static str> {
    fixtures().iter().map(|f| f.name).collect()
}

/// 1-plane drawing of `K_n` for `n <= 6`, cut from the K6 fixture. `K_7`
/// and larger have none.
pub fn complete_drawing(n: u32) -> Option<OnePlaneDrawing> {
    if n > 6 {
        return None;
    }
    let removed: Vec<VertexId> = (n..6).map(VertexId).collect();
    fixture("k6")?.drawing.delete_vertices(&removed).ok()
}

/// 1-plane drawing of the 2-subdivision of `K_n` for `n <= 7`, with the
/// midpoint of the `k`-th edge numbered `n + k`.
pub fn complete_subdivision_drawing(n: u32) -> Option<OnePlaneDrawing> {
    if n > 7 {
        return None;
    }
    let d = fixture("k7-star")?.drawing;
    let mut removed: Vec<VertexId> = (n..7).map(VertexId).collect();
    let mut map = BTreeMap::new();
    let mut kept = 0;
    for (k, (_, j)) in pairs(7).into_iter().enumerate() {
        let mid = VertexId(7 + k as u32);
        if (j as u32) < n {
            map.insert(mid, VertexId(n + kept));
            kept += 1;
        } else {
            removed.push(mid);
        }
    }
    for v in 0..n {
        map.insert(VertexId(v), VertexId(v));
    }
    d.delete_vertices(&removed).ok()?.relabel(&map).ok()
}

#[cfg(test)]
mod tests {
    #[test]
    fn generated_complete_drawings() {
        for n in 1..=6 {
            let d = complete_drawing(n).unwrap();
            assert!(d.is_valid());
            assert_eq!(d.graph(), &crate::families::complete(n));
        }
        assert!(complete_drawing(7).is_none());
        for n in 2..=7 {
            let d = complete_subdivision_drawing(n).unwrap();
            assert!(d.is_valid());
            assert_eq!(d.graph(), &crate::families::complete(n).two_subdivision().graph);
        }
        assert_eq!(
            complete_subdivision_drawing(7).unwrap(),
            fixture("k7-star").unwrap().drawing
        );
    }

    use super::*;
    use crate::families;

    #[test]
    fn graph_counts_match_known_sequence() {
        let counts: Vec<usize> = (1..=5).map(|n| canonical_masks(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34]);
    }

    #[test]
    fn connected_planar_counts() {
        let mut by_n = [0usize; 7];
        for g in planar_graphs(6) {
            by_n[g.vertex_count()] += 1;
        }
        assert_eq!(&by_n[1..], &[1, 1, 2, 6, 20, 99]);
    }

    #[test]
    fn kuratowski_graphs_are_not_planar() {
        assert!(!is_planar_small(&families::complete(5)));
        let k33 = Graph::from_edges(
            6,
            &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)],
        )
        .unwrap();
        assert!(!is_planar_small(&k33));
        assert!(is_planar_small(
            &k33.remove_vertices(&[crate::graph::VertexId(0)]).unwrap()
        ));
        assert!(is_planar_small(&families::cycle(6)));
    }

    #[test]
    fn fixtures_are_valid_one_plane_drawings() {
        for f in fixtures() {
            assert!(f.drawing.is_valid(), "{}: {:?}", f.name, f.drawing.validate());
            for c in f.geometry.crossings_per_edge().unwrap() {
                assert!(c <= 1, "{}", f.name);
            }
        }
        assert!(fixtures().len() >= 10);
    }

    #[test]
    fn fixture_shapes() {
        let k6 = fixture("k6").unwrap().drawing;
        assert_eq!(k6.graph(), &families::complete(6));
        let k7 = fixture("k7-star").unwrap().drawing;
        assert_eq!(k7.graph().vertex_count(), 28);
        assert_eq!(k7.graph().edge_count(), 42);
        let six = fixture("six-face").unwrap().drawing;
        assert_eq!(six.crossing_count(), 3);
        let p = six.associated_plane_graph().unwrap();
        assert_eq!(p.special_4_faces(11).len(), 3);
    }
}
