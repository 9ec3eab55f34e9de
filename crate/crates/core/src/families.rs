//! Standard graph families on vertices `0..n`.

use crate::graph::{Graph, VertexId};

pub fn empty(n: u32) -> Graph {
    Graph::from_edges(n, &[]).expect("no edges")
}

pub fn path(n: u32) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges).expect("valid path")
}

/// Cycle on `n >= 3` vertices.
pub fn cycle(n: u32) -> Graph {
    assert!(n >= 3, "a cycle needs at least 3 vertices");
    let mut g = path(n);
    g.insert_edge(VertexId(n - 1), VertexId(0)).unwrap();
    g
}

pub fn complete(n: u32) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            edges.push((i, j));
        }
    }
    Graph::from_edges(n, &edges).expect("valid clique")
}

pub fn star(leaves: u32) -> Graph {
    let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
    Graph::from_edges(leaves + 1, &edges).expect("valid star")
}
