//! Static soundness check of a reduction plan.
//!
//! Given only that the reduced graph carries a dynamic coloring, the plan
//! must make every edge at a removed vertex proper and every neighborhood
//! that changed see two colors. Facts available: edges of the reduced
//! graph, pairs separated by a step's forbidden set, neighborhoods of
//! reduced-graph vertices of degree at least two, and the branch facts.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use super::{BranchFacts, Plan, Step};
use crate::graph::{Graph, VertexId};

struct Knowledge<'a> {
    rep: BTreeMap<VertexId, VertexId>,
    distinct: HashSet<(VertexId, VertexId)>,
    diverse: Vec<&'a [VertexId]>,
}

impl<'a> Knowledge<'a> {
    fn rep(&self, v: VertexId) -> VertexId {
        self.rep.get(&v).copied().unwrap_or(v)
    }

    fn separate(&mut self, a: VertexId, b: VertexId) {
        let (a, b) = (self.rep(a), self.rep(b));
        self.distinct.insert((a.min(b), a.max(b)));
    }

    fn differ(&self, a: VertexId, b: VertexId) -> bool {
        let (a, b) = (self.rep(a), self.rep(b));
        self.distinct.contains(&(a.min(b), a.max(b)))
    }

    fn is_diverse(&self, set: &BTreeSet<VertexId>) -> bool {
        let v: Vec<VertexId> = set.iter().copied().collect();
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if self.differ(v[i], v[j]) {
                    return true;
                }
            }
        }
        self.diverse
            .iter()
            .any(|s| s.len() >= 2 && s.iter().all(|x| set.contains(x)))
    }
}

/// Checks every branch of `plan`. `reduced` is `g` minus `removed` plus
/// any added edge.
pub(crate) fn check(g: &Graph, reduced: &Graph, removed: &[VertexId], plan: &Plan, ell: usize) -> Result<(), String> {
    for (facts, steps) in plan.branches() {
        check_branch(g, reduced, removed, &facts, &steps, ell)?;
    }
    Ok(())
}

fn check_branch(
    g: &Graph,
    reduced: &Graph,
    removed: &[VertexId],
    facts: &BranchFacts,
    steps: &[Step],
    ell: usize,
) -> Result<(), String> {
    let removed_set: BTreeSet<VertexId> = removed.iter().copied().collect();
    let neighborhoods: Vec<Vec<VertexId>> = reduced
        .vertices()
        .filter(|&a| reduced.neighbors(a).len() >= 2)
        .map(|a| reduced.neighbors(a).iter().copied().collect())
        .collect();
    let mut k = Knowledge {
        rep: BTreeMap::new(),
        distinct: HashSet::new(),
        diverse: facts.diverse.iter().map(Vec::as_slice).collect(),
    };
    k.diverse.extend(neighborhoods.iter().map(Vec::as_slice));
    for class in &facts.equal {
        if let Some(&first) = class.first() {
            for &x in class {
                k.rep.insert(x, first);
            }
        }
    }
    for (a, b) in reduced.edges() {
        k.separate(a, b);
    }

    let mut colored: BTreeSet<VertexId> = BTreeSet::new();
    for step in steps {
        if !removed_set.contains(&step.vertex) || !colored.insert(step.vertex) {
            return Err(format!("step {} is not a fresh removed vertex", step.vertex));
        }
        let refs: BTreeSet<VertexId> = step.forbidden.iter().copied().collect();
        if refs.len() + 1 > ell {
            return Err(format!(
                "forbidden set of {} has {} members, more than {}",
                step.vertex,
                refs.len(),
                ell - 1
            ));
        }
        for &f in &refs {
            if f == step.vertex {
                return Err(format!("step {} forbids itself", step.vertex));
            }
            let known = (reduced.contains(f) && !removed_set.contains(&f)) || colored.contains(&f);
            if !known || (removed_set.contains(&f) && !colored.contains(&f)) {
                return Err(format!("step {} reads {f} before it is colored", step.vertex));
            }
            k.separate(step.vertex, f);
        }
    }
    if colored != removed_set {
        return Err("steps do not cover the removed vertices".into());
    }

    let mut touched: BTreeSet<VertexId> = removed_set.clone();
    for &r in removed {
        touched.extend(g.neighbors(r).iter().copied());
    }
    for (a, b) in reduced.edges() {
        if !g.has_edge(a, b) {
            touched.insert(a);
            touched.insert(b);
        }
    }
    for &r in removed {
        for &w in g.neighbors(r) {
            if !k.differ(r, w) {
                return Err(format!("edge {r}-{w} may be monochromatic"));
            }
        }
    }
    for &x in &touched {
        let ns = g.neighbors(x);
        if ns.len() >= 2 && !k.is_diverse(ns) {
            return Err(format!("neighborhood of {x} may be monochromatic"));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn vid(v: u32) -> VertexId {
        VertexId(v)
    }

    #[test]
    fn pendant_vertex_needs_the_second_reference() {
        let g = families::path(3);
        let reduced = g.remove_vertices(&[vid(0)]).unwrap();
        let good = Plan::Sequence(vec![Step {
            vertex: vid(0),
            forbidden: vec![vid(1), vid(2)],
        }]);
        assert!(check(&g, &reduced, &[vid(0)], &good, 11).is_ok());
        let bad = Plan::Sequence(vec![Step {
            vertex: vid(0),
            forbidden: vec![vid(1)],
        }]);
        let err = check(&g, &reduced, &[vid(0)], &bad, 11).unwrap_err();
        assert!(err.contains("neighborhood of 1"), "{err}");
    }

    #[test]
    fn list_size_bound() {
        let g = families::star(4).add_edge(vid(1), vid(2)).unwrap();
        let reduced = g.remove_vertices(&[vid(0)]).unwrap();
        let plan = Plan::Sequence(vec![Step {
            vertex: vid(0),
            forbidden: vec![vid(1), vid(2), vid(3), vid(4)],
        }]);
        assert!(check(&g, &reduced, &[vid(0)], &plan, 5).is_ok());
        assert!(check(&g, &reduced, &[vid(0)], &plan, 4).is_err());
    }

    #[test]
    fn order_of_steps_matters() {
        let g = families::path(3);
        let reduced = g.remove_vertices(&[vid(1), vid(2)]).unwrap();
        let plan = Plan::Sequence(vec![
            Step {
                vertex: vid(1),
                forbidden: vec![vid(0), vid(2)],
            },
            Step {
                vertex: vid(2),
                forbidden: vec![vid(1), vid(0)],
            },
        ]);
        let err = check(&g, &reduced, &[vid(1), vid(2)], &plan, 11).unwrap_err();
        assert!(err.contains("before it is colored"));
    }
}
