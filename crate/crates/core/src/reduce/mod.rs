//! Reducible configurations of minimal counterexamples, the reductions they
//! allow, the matching coloring extensions, and the constructive colorer
//! for 1-plane drawings with lists of size 11.
//!
//! Every candidate configuration is checked by a static soundness guard
//! before it is offered: given any dynamic coloring of the reduced graph,
//! the recipe must provably produce a dynamic coloring of the original
//! graph. Candidates that fail the guard are skipped.

mod colorer;
mod detect;
mod guard;
mod redraw;

use std::collections::hash_map::DefaultHasher;
use std::collections::BTreeSet;
use std::fmt;
use std::hash::{Hash, Hasher};

use serde::Serialize;

use crate::coloring::{is_dynamic, list_violation};
use crate::drawing::{EdgeId, OnePlaneDrawing};
use crate::error::{ColoringError, ReduceError};
use crate::graph::{Color, Coloring, Graph, ListAssignment, VertexId};

/// Lists of this size always suffice for 1-planar graphs.
pub const LIST_SIZE: usize = 11;
/// Degree from which a vertex counts as big.
pub const BIG_DEGREE: usize = 11;

pub use colorer::{color_1planar, color_1planar_with, ColorOptions, ColorRun, TraceEntry, TraceEvent};
pub use detect::{find_all_configurations, find_reducible_configuration};
pub use redraw::{find_6face_pattern, improve_drawing_6face, SixFacePattern};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum ConfigKind {
    MinDeg1,
    AdjacentTwos,
    SmallEdge2,
    SmallEdgeGeneral,
    TriangleSmall,
    FalseTriangleTrueSmall,
    BigFaceSmall,
}

impl ConfigKind {
    /// Detection order.
    pub const ALL: [ConfigKind; 7] = [
        ConfigKind::MinDeg1,
        ConfigKind::AdjacentTwos,
        ConfigKind::SmallEdge2,
        ConfigKind::SmallEdgeGeneral,
        ConfigKind::TriangleSmall,
        ConfigKind::FalseTriangleTrueSmall,
        ConfigKind::BigFaceSmall,
    ];
}

impl fmt::Display for ConfigKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A named participant of a configuration (`u`, `x_1`, `v'`, ...).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Role {
    pub name: String,
    pub vertex: VertexId,
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}={}", self.name, self.vertex)
    }
}

/// Edge added by a reduction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum AddedEdge {
    /// Drawn without crossings.
    Plain { u: VertexId, v: VertexId },
    /// Drawn crossing exactly the given edge.
    Crossing { u: VertexId, v: VertexId, crosses: EdgeId },
}

impl AddedEdge {
    pub fn ends(&self) -> (VertexId, VertexId) {
        match *self {
            AddedEdge::Plain { u, v } | AddedEdge::Crossing { u, v, .. } => (u, v),
        }
    }
}

/// Color `vertex` avoiding the colors of `forbidden`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Step {
    pub vertex: VertexId,
    pub forbidden: Vec<VertexId>,
}

/// How the removed vertices get their colors back.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Plan {
    Sequence(Vec<Step>),
    /// Edge `uv` with both ends small. Sort the colors of `v_others`; if
    /// they are not all equal color `v` then `u`, otherwise `u` then `v`.
    Split {
        u: VertexId,
        v: VertexId,
        u_others: Vec<VertexId>,
        v_others: Vec<VertexId>,
    },
}

/// Facts about the reduced coloring that hold in one branch of a plan.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub(crate) struct BranchFacts {
    /// Sets known to carry at least two colors.
    pub diverse: Vec<Vec<VertexId>>,
    /// Sets known to be monochromatic.
    pub equal: Vec<Vec<VertexId>>,
}

impl Plan {
    /// Every branch with the facts it may assume and its steps.
    pub(crate) fn branches(&self) -> Vec<(BranchFacts, Vec<Step>)> {
        match self {
            Plan::Sequence(steps) => vec![(BranchFacts::default(), steps.clone())],
            Plan::Split {
                u,
                v,
                u_others,
                v_others,
            } => {
                let mut out = Vec::new();
                if v_others.len() >= 2 {
                    out.push((
                        BranchFacts {
                            diverse: vec![v_others.clone()],
                            equal: Vec::new(),
                        },
                        split_spread(*u, *v, u_others, v_others),
                    ));
                }
                out.push((
                    BranchFacts {
                        diverse: Vec::new(),
                        equal: vec![v_others.clone()],
                    },
                    split_uniform(*u, *v, u_others, v_others),
                ));
                out
            }
        }
    }

    /// Steps to run against coloring `c` of the reduced graph.
    pub fn resolve(&self, c: &Coloring) -> Result<Vec<Step>, ReduceError> {
        match self {
            Plan::Sequence(steps) => Ok(steps.clone()),
            Plan::Split {
                u,
                v,
                u_others,
                v_others,
            } => {
                let mut colors = Vec::with_capacity(v_others.len());
                for x in v_others {
                    colors.push(c.get(*x).ok_or(ColoringError::Uncolored(*x))?);
                }
                colors.sort_unstable();
                let spread = colors.first() != colors.last();
                Ok(if spread {
                    split_spread(*u, *v, u_others, v_others)
                } else {
                    split_uniform(*u, *v, u_others, v_others)
                })
            }
        }
    }
}

fn dedup(mut v: Vec<VertexId>) -> Vec<VertexId> {
    let mut seen = BTreeSet::new();
    v.retain(|x| seen.insert(*x));
    v
}

fn split_spread(u: VertexId, v: VertexId, u_others: &[VertexId], v_others: &[VertexId]) -> Vec<Step> {
    let mut fv = v_others.to_vec();
    fv.extend(u_others.first());
    let mut fu = u_others.to_vec();
    fu.push(v);
    vec![
        Step {
            vertex: v,
            forbidden: dedup(fv),
        },
        Step {
            vertex: u,
            forbidden: dedup(fu),
        },
    ]
}

fn split_uniform(u: VertexId, v: VertexId, u_others: &[VertexId], v_others: &[VertexId]) -> Vec<Step> {
    let mut fu = u_others.to_vec();
    fu.extend(v_others.first());
    let mut fv: Vec<VertexId> = v_others.first().copied().into_iter().collect();
    fv.push(u);
    fv.extend(u_others.first());
    vec![
        Step {
            vertex: u,
            forbidden: dedup(fu),
        },
        Step {
            vertex: v,
            forbidden: dedup(fv),
        },
    ]
}

/// A configuration found in a drawing, with the reduction it licenses.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReducibleConfig {
    pub kind: ConfigKind,
    pub roles: Vec<Role>,
    pub removed: Vec<VertexId>,
    pub added: Option<AddedEdge>,
    pub plan: Plan,
    /// Fingerprint of the drawing the configuration was found in.
    pub fingerprint: u64,
}

impl ReducibleConfig {
    pub fn role(&self, name: &str) -> Option<VertexId> {
        self.roles.iter().find(|r| r.name == name).map(|r| r.vertex)
    }

    pub fn vertices(&self) -> BTreeSet<VertexId> {
        self.roles.iter().map(|r| r.vertex).collect()
    }
}

impl fmt::Display for ReducibleConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind)?;
        for r in &self.roles {
            write!(f, " {r}")?;
        }
        Ok(())
    }
}

/// What `extend_coloring` needs: the graph before the reduction and the plan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionRecipe {
    pub kind: ConfigKind,
    pub graph: Graph,
    pub plan: Plan,
}

pub(crate) fn fingerprint(d: &OnePlaneDrawing) -> u64 {
    let mut h = DefaultHasher::new();
    crate::text::write_drawing(d).hash(&mut h);
    h.finish()
}

/// Performs the reduction of `cfg` on `d`.
pub fn reduce(d: &OnePlaneDrawing, cfg: &ReducibleConfig) -> Result<(OnePlaneDrawing, ExtensionRecipe), ReduceError> {
    if fingerprint(d) != cfg.fingerprint {
        return Err(ReduceError::Stale(format!("{cfg} was detected in a different drawing")));
    }
    let reduced = detect::apply(d, &cfg.removed, cfg.added.as_ref())
        .ok_or_else(|| ReduceError::Stale(format!("{cfg} no longer applies")))?;
    if reduced.measure() >= d.measure() {
        return Err(ReduceError::Unsound(format!(
            "{cfg} does not decrease |V|+|E| ({} -> {})",
            d.measure(),
            reduced.measure()
        )));
    }
    Ok((
        reduced,
        ExtensionRecipe {
            kind: cfg.kind,
            graph: d.graph().clone(),
            plan: cfg.plan.clone(),
        },
    ))
}

/// Colors the removed vertices of `recipe` on top of `reduced`, a dynamic
/// `lists`-coloring of the reduced graph, taking the least admissible color
/// at every step. The result is re-verified.
pub fn extend_coloring(
    reduced: &Coloring,
    recipe: &ExtensionRecipe,
    lists: &ListAssignment,
) -> Result<Coloring, ReduceError> {
    let steps = recipe.plan.resolve(reduced)?;
    let mut c = reduced.clone();
    for step in &steps {
        let mut forbidden = BTreeSet::new();
        for f in &step.forbidden {
            let col = c
                .get(*f)
                .ok_or_else(|| ReduceError::Unsound(format!("step {} reads uncolored {f}", step.vertex)))?;
            forbidden.insert(col);
        }
        let list = lists.get(step.vertex).ok_or(ColoringError::MissingList(step.vertex))?;
        let pick: Option<Color> = list.iter().copied().find(|x| !forbidden.contains(x));
        match pick {
            Some(col) => {
                c.set(step.vertex, col);
            }
            None => {
                return Err(ReduceError::EmptyCandidates {
                    vertex: step.vertex,
                    forbidden: forbidden.into_iter().collect(),
                })
            }
        }
    }
    for (v, col) in reduced.iter() {
        if c.get(v) != Some(col) {
            return Err(ReduceError::Unsound(format!("vertex {v} was recolored")));
        }
    }
    if !is_dynamic(&recipe.graph, &c)? {
        let why = crate::coloring::first_violation(&recipe.graph, &c, true)?
            .map(|v| v.to_string())
            .unwrap_or_default();
        return Err(ReduceError::Unsound(format!("{} extension: {why}", recipe.kind)));
    }
    if let Some(v) = list_violation(&recipe.graph, &c, lists)? {
        return Err(ReduceError::Unsound(v.to_string()));
    }
    Ok(c)
}

/// Uniform lists `{1..=size}` on every vertex of `g`.
pub fn uniform_lists(g: &Graph, size: u32) -> ListAssignment {
    ListAssignment::uniform(g, size)
}

pub(crate) fn roles(pairs: impl IntoIterator<Item = (String, VertexId)>) -> Vec<Role> {
    pairs.into_iter().map(|(name, vertex)| Role { name, vertex }).collect()
}

pub(crate) fn indexed(prefix: &str, vs: &[VertexId]) -> Vec<(String, VertexId)> {
    vs.iter()
        .enumerate()
        .map(|(i, v)| (format!("{prefix}_{}", i + 1), *v))
        .collect()
}

#[cfg(test)]
mod tests;
