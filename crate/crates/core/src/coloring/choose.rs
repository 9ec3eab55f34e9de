//! Exact (dynamic) choosability for small graphs.
//!
//! Lists are fixed one vertex at a time along a vertex order. After each
//! step the only thing that matters for the future is the set of color
//! tuples on the *frontier* (assigned vertices that still share a
//! constraint with an unassigned one) that extend to a valid partial
//! coloring. A new list can only interact with colors occurring in that set;
//! every other color behaves like a fresh one. So the adversary's choice is
//! a subset of the frontier colors plus fresh colors, and the set itself is
//! compared up to renaming of colors. Frontier states from which every
//! continuation stays colorable are memoized.
//!
//! When the adversary wins, the lists along the winning line are mapped to
//! global colors and re-checked by exhaustive list coloring.

use std::collections::{BTreeSet, HashSet};
use std::time::Duration;

use web_time::Instant;

use serde::Serialize;

use super::polynomial;
use super::search::Dense;
use super::{find_list_coloring, SearchLimits};
use crate::error::ColoringError;
use crate::graph::{Color, Graph, ListAssignment};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChoosabilityReport {
    pub ell: usize,
    pub dynamic: bool,
    pub choosable: bool,
    /// Lists of size exactly `ell` admitting no valid coloring.
    pub counterexample: Option<ListAssignment>,
    pub method: ChooseMethod,
    /// Frontier states expanded by the game search.
    pub states: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

/// How the verdict was reached.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ChooseMethod {
    /// A nonzero coefficient of the constraint polynomial.
    Polynomial,
    /// Exhaustive search over list assignments.
    Game,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    Differ,
    NotAllEqual,
}

struct Scope {
    /// Vertex positions in the processing order.
    vars: Vec<usize>,
    kind: Kind,
}

/// A color tuple on the frontier, one byte per frontier vertex.
type Tuple = u64;

#[inline]
fn at(t: Tuple, i: usize) -> u8 {
    (t >> (8 * i)) as u8
}

fn relabel(t: Tuple, width: usize, perm: &[u8]) -> Tuple {
    (0..width).fold(0, |acc, i| acc | (perm[at(t, i) as usize] as u64) << (8 * i))
}

struct Game {
    n: usize,
    ell: usize,
    /// Frontier width before position `p` is assigned.
    width: Vec<usize>,
    /// Scopes to check when position `p` is assigned, as indices into the
    /// extended tuple (`frontier[p - 1]` followed by `p`).
    checks: Vec<Vec<(Kind, Vec<usize>)>>,
    /// Indices into the extended tuple that survive as `frontier[p]`.
    keep: Vec<Vec<usize>>,
    safe: HashSet<(usize, Vec<Tuple>)>,
    next_global: Color,
    states: u64,
    budget: Option<u64>,
}

pub fn choosable(g: &Graph, ell: usize, dynamic: bool) -> Result<ChoosabilityReport, ColoringError> {
    choosable_with(g, ell, dynamic, &SearchLimits::default())
}

pub fn choosable_with(
    g: &Graph,
    ell: usize,
    dynamic: bool,
    limits: &SearchLimits,
) -> Result<ChoosabilityReport, ColoringError> {
    let n = g.vertex_count();
    if n > limits.choose_max_vertices || ell > limits.choose_max_ell || n > 8 || ell * n > 64 {
        return Err(ColoringError::CapExceeded(format!(
            "choosability is capped at {} vertices and lists of size {}; got {n} and {ell}",
            limits.choose_max_vertices.min(8),
            limits.choose_max_ell
        )));
    }
    if ell == 0 {
        return Err(ColoringError::InvalidArgument("list size must be positive".into()));
    }
    let start = Instant::now();
    let dense = Dense::new(g);
    if !limits.exhaustive_only && polynomial::certificate(&dense, ell, dynamic).is_some() {
        return Ok(ChoosabilityReport {
            ell,
            dynamic,
            choosable: true,
            counterexample: None,
            method: ChooseMethod::Polynomial,
            states: 0,
            elapsed: start.elapsed(),
        });
    }
    let order = frontier_order(&dense, dynamic);
    let mut pos = vec![0; n];
    for (p, &v) in order.iter().enumerate() {
        pos[v] = p;
    }
    let mut scopes: Vec<Scope> = Vec::new();
    for v in 0..n {
        for &w in &dense.adj[v] {
            if v < w {
                scopes.push(Scope {
                    vars: vec![pos[v], pos[w]],
                    kind: Kind::Differ,
                });
            }
        }
        if dynamic && dense.adj[v].len() >= 2 {
            scopes.push(Scope {
                vars: dense.adj[v].iter().map(|&w| pos[w]).collect(),
                kind: Kind::NotAllEqual,
            });
        }
    }
    // frontier[p]: positions <= p sharing a scope with a position > p
    let frontier: Vec<Vec<usize>> = (0..n)
        .map(|p| {
            (0..=p)
                .filter(|&q| {
                    scopes
                        .iter()
                        .any(|s| s.vars.contains(&q) && s.vars.iter().any(|&x| x > p))
                })
                .collect()
        })
        .collect();
    let mut checks = Vec::with_capacity(n);
    let mut keep = Vec::with_capacity(n);
    let mut width = Vec::with_capacity(n);
    for p in 0..n {
        let mut ext: Vec<usize> = if p == 0 { Vec::new() } else { frontier[p - 1].clone() };
        width.push(ext.len());
        ext.push(p);
        let at = |q: usize| ext.iter().position(|&x| x == q).expect("scope var in frontier");
        checks.push(
            scopes
                .iter()
                .filter(|s| s.vars.iter().copied().max() == Some(p))
                .map(|s| (s.kind, s.vars.iter().map(|&q| at(q)).collect()))
                .collect(),
        );
        keep.push(frontier[p].iter().map(|&q| at(q)).collect());
    }
    let mut game = Game {
        n,
        ell,
        width,
        checks,
        keep,
        safe: HashSet::new(),
        next_global: 1,
        states: 0,
        budget: limits.max_nodes,
    };
    let line = game
        .solve(0, vec![0], Vec::new())
        .map_err(|()| ColoringError::CapExceeded(format!("choosability search exceeded {} states", game.states)))?;
    let counterexample = match line {
        None => None,
        Some(mut lists) => {
            // the adversary may win before the last vertex; the rest get
            // unrelated lists
            while lists.len() < n {
                let base = game.next_global;
                game.next_global += ell as Color;
                lists.push((base..base + ell as Color).collect());
            }
            let mut l = ListAssignment::new();
            let used: BTreeSet<Color> = lists.iter().flatten().copied().collect();
            let rank = |c: &Color| used.range(..c).count() as Color + 1;
            for (p, list) in lists.iter().enumerate() {
                l.set(dense.ids[order[p]], list.iter().map(rank));
            }
            debug_assert!(l.iter().all(|(_, s)| s.len() == ell));
            if find_list_coloring(g, &l, dynamic)?.is_some() {
                panic!("choosability search returned a colorable counterexample");
            }
            Some(l)
        }
    };
    Ok(ChoosabilityReport {
        ell,
        dynamic,
        choosable: counterexample.is_none(),
        counterexample,
        method: ChooseMethod::Game,
        states: game.states,
        elapsed: start.elapsed(),
    })
}

/// Greedy order keeping the frontier small: start at the highest degree,
/// then take the vertex sharing the most scopes with placed ones.
fn frontier_order(g: &Dense, dynamic: bool) -> Vec<usize> {
    let n = g.ids.len();
    let mut related = vec![BTreeSet::new(); n];
    for v in 0..n {
        for &w in &g.adj[v] {
            related[v].insert(w);
        }
        if dynamic {
            for &a in &g.adj[v] {
                for &b in &g.adj[v] {
                    if a != b {
                        related[a].insert(b);
                    }
                }
            }
        }
    }
    let mut placed = vec![false; n];
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let score = |v: usize| related[v].iter().filter(|&&w| placed[w]).count();
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by(|&a, &b| {
                (score(a), g.adj[a].len(), std::cmp::Reverse(a)).cmp(&(score(b), g.adj[b].len(), std::cmp::Reverse(b)))
            })
            .unwrap();
        placed[next] = true;
        out.push(next);
    }
    out
}

fn color_count(phi: &[Tuple], width: usize) -> usize {
    phi.iter()
        .flat_map(|&t| (0..width).map(move |i| at(t, i) as usize + 1))
        .max()
        .unwrap_or(0)
}

/// Partition of the colors of a state by iterated refinement: start from
/// occurrence counts per position, then split by the multiset of tuples a
/// color occurs in, read through the current partition.
fn refine(phi: &[Tuple], width: usize, k: usize) -> Vec<u32> {
    let mut cell = vec![0u32; k];
    let mut cells = 1;
    loop {
        let mut sig: Vec<Vec<u64>> = vec![Vec::new(); k];
        for &t in phi {
            let mut shape = 0u64;
            for i in 0..width {
                shape = shape * 64 + cell[at(t, i) as usize] as u64;
            }
            for i in 0..width {
                let c = at(t, i) as usize;
                let mut mask = 0u64;
                for j in 0..width {
                    if at(t, j) as usize == c {
                        mask |= 1 << j;
                    }
                }
                sig[c].push(shape << 8 | mask);
            }
        }
        let mut keyed: Vec<(u32, Vec<u64>, usize)> = (0..k)
            .map(|c| {
                let mut s = std::mem::take(&mut sig[c]);
                s.sort_unstable();
                s.dedup();
                (cell[c], s, c)
            })
            .collect();
        // more frequent colors first
        keyed.sort_by(|a, b| a.0.cmp(&b.0).then(b.1.len().cmp(&a.1.len())).then(b.1.cmp(&a.1)));
        let mut next = vec![0u32; k];
        let mut id = 0u32;
        for i in 0..k {
            if i > 0 && (keyed[i].0 != keyed[i - 1].0 || keyed[i].1 != keyed[i - 1].1) {
                id += 1;
            }
            next[keyed[i].2] = id;
        }
        let count = id as usize + 1;
        cell = next;
        if count == cells {
            return cell;
        }
        cells = count;
    }
}

/// Relabels colors so that states equal up to renaming tend to coincide.
/// Colors are ordered by refined cell, ties by old label. Returns the new
/// state and `perm[old] = new`.
fn canonicalize(phi: Vec<Tuple>, width: usize) -> (Vec<Tuple>, Vec<u8>) {
    let k = color_count(&phi, width);
    let cell = refine(&phi, width, k);
    let mut present = vec![false; k];
    for &t in &phi {
        for i in 0..width {
            present[at(t, i) as usize] = true;
        }
    }
    let mut colors: Vec<usize> = (0..k).filter(|&c| present[c]).collect();
    colors.sort_by_key(|&c| (cell[c], c));
    let mut perm = vec![u8::MAX; k];
    for (new, &old) in colors.iter().enumerate() {
        perm[old] = new as u8;
    }
    let mut out: Vec<Tuple> = phi.iter().map(|&t| relabel(t, width, &perm)).collect();
    out.sort_unstable();
    out.dedup();
    (out, perm)
}

fn swapped_equal(phi: &[Tuple], width: usize, a: u8, b: u8) -> bool {
    let mut perm: Vec<u8> = (0..=255).collect();
    perm[a as usize] = b;
    perm[b as usize] = a;
    let mut img: Vec<Tuple> = phi.iter().map(|&t| relabel(t, width, &perm)).collect();
    img.sort_unstable();
    img == phi
}

/// Classes of colors that can be exchanged pairwise without changing the
/// state; any two choices with the same count per class are equivalent.
fn interchangeable_classes(phi: &[Tuple], width: usize, k: usize) -> Vec<Vec<u8>> {
    let cell = refine(phi, width, k);
    let mut classes: Vec<Vec<u8>> = Vec::new();
    for c in 0..k as u8 {
        let found = classes
            .iter_mut()
            .find(|cl| cell[cl[0] as usize] == cell[c as usize] && swapped_equal(phi, width, cl[0], c));
        match found {
            Some(cl) => cl.push(c),
            None => classes.push(vec![c]),
        }
    }
    classes
}

/// Count vectors with `counts[j] <= sizes[j]` and total at most `ell`,
/// larger totals first.
fn choices(sizes: &[usize], ell: usize) -> Vec<Vec<usize>> {
    fn rec(sizes: &[usize], left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == sizes.len() {
            out.push(cur.clone());
            return;
        }
        let j = cur.len();
        for k in (0..=sizes[j].min(left)).rev() {
            cur.push(k);
            rec(sizes, left - k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(sizes, ell, &mut Vec::new(), &mut out);
    out.sort_by_key(|c| std::cmp::Reverse(c.iter().sum::<usize>()));
    out
}

impl Game {
    fn admits(&self, p: usize, ext: Tuple) -> bool {
        self.checks[p].iter().all(|(kind, idx)| match kind {
            Kind::Differ => at(ext, idx[0]) != at(ext, idx[1]),
            Kind::NotAllEqual => idx.iter().any(|&i| at(ext, i) != at(ext, idx[0])),
        })
    }

    fn transition(&self, p: usize, phi: &[Tuple], list: &[u8]) -> Vec<Tuple> {
        let w = self.width[p];
        let mut out = Vec::with_capacity(phi.len() * list.len());
        for &t in phi {
            for &c in list {
                let ext = t | (c as u64) << (8 * w);
                if self.admits(p, ext) {
                    out.push(
                        self.keep[p]
                            .iter()
                            .enumerate()
                            .fold(0, |acc, (j, &i)| acc | (at(ext, i) as u64) << (8 * j)),
                    );
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Assigns lists from position `p` on. `map[local]` is the global color
    /// of each local label. Returns the adversary's winning lists, if any.
    fn solve(&mut self, p: usize, phi: Vec<Tuple>, map: Vec<Color>) -> Result<Option<Vec<Vec<Color>>>, ()> {
        if phi.is_empty() {
            return Ok(Some(Vec::new()));
        }
        if p == self.n {
            return Ok(None);
        }
        let key = (p, phi);
        if self.safe.contains(&key) {
            return Ok(None);
        }
        let phi = key.1;
        self.states += 1;
        if self.budget.is_some_and(|b| self.states > b) {
            return Err(());
        }
        let w = self.width[p];
        let k = color_count(&phi, w);
        if p + 1 == self.n {
            // last vertex: only colors blocked by every tuple can help the
            // adversary, and fresh colors are never blocked
            let blocked: Vec<u8> = (0..k as u8)
                .filter(|&c| phi.iter().all(|&t| !self.admits(p, t | (c as u64) << (8 * w))))
                .collect();
            if blocked.len() >= self.ell {
                return Ok(Some(vec![blocked[..self.ell]
                    .iter()
                    .map(|&c| map[c as usize])
                    .collect()]));
            }
            self.safe.insert((p, phi));
            return Ok(None);
        }
        let classes = interchangeable_classes(&phi, w, k);
        let sizes: Vec<usize> = classes.iter().map(Vec::len).collect();
        for counts in choices(&sizes, self.ell) {
            let mut list: Vec<u8> = Vec::with_capacity(self.ell);
            for (cl, &c) in classes.iter().zip(&counts) {
                list.extend_from_slice(&cl[..c]);
            }
            let fresh = self.ell - list.len();
            list.extend((0..fresh).map(|i| (k + i) as u8));
            let next = self.transition(p, &phi, &list);
            let (next, perm) = canonicalize(next, self.keep[p].len());
            let base = self.next_global;
            let global = |local: u8| -> Color {
                let l = local as usize;
                if l < k {
                    map[l]
                } else {
                    base + (l - k) as Color
                }
            };
            let mut next_map = vec![0; perm.iter().filter(|&&x| x != u8::MAX).count()];
            for (old, &new) in perm.iter().enumerate() {
                if new != u8::MAX {
                    next_map[new as usize] = global(old as u8);
                }
            }
            self.next_global += fresh as Color;
            if let Some(mut rest) = self.solve(p + 1, next, next_map)? {
                rest.insert(0, list.iter().map(|&c| global(c)).collect());
                return Ok(Some(rest));
            }
        }
        self.safe.insert((p, phi));
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn trivial_cases() {
        assert!(choosable(&families::complete(1), 1, true).unwrap().choosable);
        assert!(choosable(&families::complete(1), 1, false).unwrap().choosable);
        assert!(!choosable(&families::complete(2), 1, false).unwrap().choosable);
        assert!(choosable(&families::complete(2), 2, false).unwrap().choosable);
    }

    #[test]
    fn even_cycles_are_two_choosable_but_not_dynamically() {
        let c4 = families::cycle(4);
        assert!(choosable(&c4, 2, false).unwrap().choosable);
        let r = choosable(&c4, 3, true).unwrap();
        assert!(!r.choosable);
        let l = r.counterexample.unwrap();
        assert!(l.iter().all(|(_, s)| s.len() == 3));
    }

    #[test]
    fn odd_cycle_not_two_choosable() {
        let r = choosable(&families::cycle(5), 2, false).unwrap();
        assert!(!r.choosable);
    }

    #[test]
    fn theta_and_k_2_4() {
        // K_{2,3} is a theta graph and still 2-choosable; K_{2,4} is not.
        let k23 = Graph::from_edges(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        assert!(choosable(&k23, 2, false).unwrap().choosable);
        let k24 = Graph::from_edges(6, &[(0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 3), (1, 4), (1, 5)]).unwrap();
        let r = choosable(&k24, 2, false).unwrap();
        assert!(!r.choosable);
        assert!(choosable(&k24, 3, false).unwrap().choosable);
    }

    fn search_only() -> SearchLimits {
        SearchLimits {
            exhaustive_only: true,
            ..SearchLimits::default()
        }
    }

    #[test]
    fn search_agrees_with_certificate_on_small_cycles() {
        let cases = (3..=6).flat_map(|n| [(n, 2), (n, 3)]).chain([(4, 4), (5, 4)]);
        for (n, ell) in cases {
            {
                let g = families::cycle(n);
                let fast = choosable(&g, ell, true).unwrap();
                let slow = choosable_with(&g, ell, true, &search_only()).unwrap();
                assert_eq!(fast.choosable, slow.choosable, "C{n} ell={ell}");
                assert_eq!(slow.method, ChooseMethod::Game);
            }
        }
    }

    #[test]
    fn state_budget_is_an_error() {
        let limits = SearchLimits {
            max_nodes: Some(2),
            ..search_only()
        };
        assert!(matches!(
            choosable_with(&families::cycle(6), 3, true, &limits),
            Err(ColoringError::CapExceeded(_))
        ));
    }

    #[test]
    fn caps_are_enforced() {
        assert!(matches!(
            choosable(&families::cycle(9), 3, true),
            Err(ColoringError::CapExceeded(_))
        ));
    }
}
