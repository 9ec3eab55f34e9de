//! Backtracking core shared by the exact solvers.

use std::collections::BTreeMap;

use crate::graph::{Color, Coloring, Graph, VertexId};

/// Graph with vertices renumbered `0..n`.
pub(crate) struct Dense {
    pub ids: Vec<VertexId>,
    pub adj: Vec<Vec<usize>>,
}

impl Dense {
    pub fn new(g: &Graph) -> Self {
        let ids: Vec<VertexId> = g.vertices().collect();
        let index: BTreeMap<VertexId, usize> = ids.iter().enumerate().map(|(i, v)| (*v, i)).collect();
        let adj = ids
            .iter()
            .map(|v| g.neighbors(*v).iter().map(|w| index[w]).collect())
            .collect();
        Dense { ids, adj }
    }

    pub fn to_coloring(&self, colors: &[Color]) -> Coloring {
        self.ids.iter().copied().zip(colors.iter().copied()).collect()
    }

    /// Highest degree first, then repeatedly the vertex with most ordered
    /// neighbors (ties: higher degree, lower index). Keeps neighborhoods
    /// closing early so the dynamic condition prunes soon.
    pub fn order(&self) -> Vec<usize> {
        let n = self.ids.len();
        let mut placed = vec![false; n];
        let mut weight = vec![0usize; n];
        let mut out = Vec::with_capacity(n);
        while out.len() < n {
            let next = (0..n)
                .filter(|&v| !placed[v])
                .max_by(|&a, &b| {
                    (weight[a], self.adj[a].len(), std::cmp::Reverse(a)).cmp(&(
                        weight[b],
                        self.adj[b].len(),
                        std::cmp::Reverse(b),
                    ))
                })
                .unwrap();
            placed[next] = true;
            out.push(next);
            for &w in &self.adj[next] {
                weight[w] += 1;
            }
        }
        out
    }
}

pub(crate) struct Search<'a> {
    g: &'a Dense,
    lists: Vec<Vec<Color>>,
    dynamic: bool,
    /// Colors are interchangeable: a vertex may only open the next unused one.
    symmetric: bool,
    budget: Option<u64>,
    order: Vec<usize>,
    color: Vec<Color>,
    open: Vec<usize>,
    pub nodes: u64,
}

impl<'a> Search<'a> {
    pub fn new(g: &'a Dense, mut lists: Vec<Vec<Color>>, dynamic: bool, symmetric: bool, budget: Option<u64>) -> Self {
        for l in &mut lists {
            l.sort_unstable();
            l.dedup();
        }
        let n = g.ids.len();
        Search {
            g,
            lists,
            dynamic,
            symmetric,
            budget,
            order: g.order(),
            color: vec![0; n],
            open: g.adj.iter().map(Vec::len).collect(),
            nodes: 0,
        }
    }

    /// `Ok(Some(colors))` on success, `Ok(None)` if none exists, `Err(())`
    /// when the node budget runs out.
    pub fn run(&mut self) -> Result<Option<Vec<Color>>, ()> {
        let mut found = None;
        self.dfs(0, 0, &mut |c| {
            found = Some(c.to_vec());
            true
        })?;
        Ok(found)
    }

    pub fn enumerate_all(&mut self) -> Vec<Vec<Color>> {
        let mut all = Vec::new();
        self.dfs(0, 0, &mut |c| {
            all.push(c.to_vec());
            false
        })
        .expect("unbounded");
        all
    }

    fn neighborhood_ok(&self, w: usize) -> bool {
        let ns = &self.g.adj[w];
        if ns.len() < 2 {
            return true;
        }
        let first = self.color[ns[0]];
        ns.iter().any(|&x| self.color[x] != first)
    }

    fn dfs(&mut self, depth: usize, max_used: Color, sink: &mut dyn FnMut(&[Color]) -> bool) -> Result<bool, ()> {
        if depth == self.order.len() {
            return Ok(sink(&self.color));
        }
        let v = self.order[depth];
        let candidates = self.lists[v].clone();
        for c in candidates {
            if self.symmetric && c > max_used + 1 {
                break;
            }
            self.nodes += 1;
            if self.budget.is_some_and(|b| self.nodes > b) {
                return Err(());
            }
            if self.g.adj[v].iter().any(|&w| self.color[w] == c) {
                continue;
            }
            self.color[v] = c;
            for &w in &self.g.adj[v] {
                self.open[w] -= 1;
            }
            let ok = !self.dynamic
                || ((self.open[v] > 0 || self.neighborhood_ok(v))
                    && self.g.adj[v]
                        .iter()
                        .all(|&w| self.open[w] > 0 || self.neighborhood_ok(w)));
            let done = ok && self.dfs(depth + 1, max_used.max(c), sink)?;
            for &w in &self.g.adj[v] {
                self.open[w] += 1;
            }
            self.color[v] = 0;
            if done {
                return Ok(true);
            }
        }
        Ok(false)
    }
}
