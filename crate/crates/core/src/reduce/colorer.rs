//! The reduce / redraw / extend loop.

use std::fmt;

use serde::Serialize;

use super::{extend_coloring, find_reducible_configuration, improve_drawing_6face, reduce, ReducibleConfig};
use super::{ExtensionRecipe, LIST_SIZE};
use crate::coloring::{find_list_coloring_limited, is_dynamic, respects_lists};
use crate::drawing::OnePlaneDrawing;
use crate::error::ReduceError;
use crate::graph::{Coloring, ListAssignment};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorOptions {
    /// Graphs with at most this many vertices are solved exactly.
    pub base_cap: usize,
    /// Node budget of the exact search used when nothing else applies.
    pub fallback_max_nodes: Option<u64>,
}

impl Default for ColorOptions {
    fn default() -> Self {
        ColorOptions {
            base_cap: 9,
            fallback_max_nodes: Some(2_000_000),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "event", rename_all = "snake_case")]
pub enum TraceEvent {
    Reduce {
        config: ReducibleConfig,
    },
    Redraw {
        crossings_before: usize,
        crossings_after: usize,
    },
    Base {
        vertices: usize,
    },
    /// No configuration and no redrawing applied.
    Fallback {
        vertices: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceEntry {
    #[serde(flatten)]
    pub event: TraceEvent,
    pub measure_before: usize,
    pub measure_after: usize,
}

impl fmt::Display for TraceEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.event {
            TraceEvent::Reduce { config } => write!(f, "reduce {config}")?,
            TraceEvent::Redraw {
                crossings_before,
                crossings_after,
            } => write!(f, "redraw crossings {crossings_before} -> {crossings_after}")?,
            TraceEvent::Base { vertices } => write!(f, "base exact n={vertices}")?,
            TraceEvent::Fallback { vertices } => write!(f, "fallback exact n={vertices}")?,
        }
        write!(f, " measure {} -> {}", self.measure_before, self.measure_after)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColorRun {
    pub coloring: Coloring,
    pub trace: Vec<TraceEntry>,
    /// Whether the exact fallback was used.
    pub fallback: bool,
    pub redraws: usize,
}

pub fn color_1planar(d: &OnePlaneDrawing, lists: &ListAssignment) -> Result<ColorRun, ReduceError> {
    color_1planar_with(d, lists, &ColorOptions::default())
}

/// A dynamic `lists`-coloring of the graph of `d`, built by repeatedly
/// reducing configurations (or redrawing), solving the small remainder
/// exactly and extending back. Lists need at least eleven colors.
pub fn color_1planar_with(
    d: &OnePlaneDrawing,
    lists: &ListAssignment,
    opts: &ColorOptions,
) -> Result<ColorRun, ReduceError> {
    let g = d.graph();
    for v in g.vertices() {
        let size = lists.get(v).map_or(0, |l| l.len());
        if size < LIST_SIZE {
            return Err(ReduceError::Precondition(format!(
                "vertex {v} has a list of {size} colors, needs {LIST_SIZE}"
            )));
        }
    }
    if let Some(v) = d.validate().first() {
        return Err(ReduceError::Precondition(format!("drawing is invalid: {v}")));
    }

    let mut trace = Vec::new();
    let mut stack: Vec<ExtensionRecipe> = Vec::new();
    let mut cur = d.clone();
    let mut redraws = 0;
    let mut fallback = false;
    let base = loop {
        let n = cur.graph().vertex_count();
        let m = cur.measure();
        if n <= opts.base_cap {
            trace.push(TraceEntry {
                event: TraceEvent::Base { vertices: n },
                measure_before: m,
                measure_after: m,
            });
            break find_list_coloring_limited(cur.graph(), lists, true, None)?;
        }
        if let Some(cfg) = find_reducible_configuration(&cur, LIST_SIZE) {
            let (next, recipe) = reduce(&cur, &cfg)?;
            trace.push(TraceEntry {
                measure_before: m,
                measure_after: next.measure(),
                event: TraceEvent::Reduce { config: cfg },
            });
            stack.push(recipe);
            cur = next;
            continue;
        }
        if let Some(next) = improve_drawing_6face(&cur) {
            trace.push(TraceEntry {
                event: TraceEvent::Redraw {
                    crossings_before: cur.crossing_count(),
                    crossings_after: next.crossing_count(),
                },
                measure_before: m,
                measure_after: next.measure(),
            });
            redraws += 1;
            cur = next;
            continue;
        }
        fallback = true;
        trace.push(TraceEntry {
            event: TraceEvent::Fallback { vertices: n },
            measure_before: m,
            measure_after: m,
        });
        break find_list_coloring_limited(cur.graph(), lists, true, opts.fallback_max_nodes)?;
    };
    let mut c = base.ok_or_else(|| ReduceError::Unsound("the remaining graph has no dynamic list coloring".into()))?;
    while let Some(recipe) = stack.pop() {
        c = extend_coloring(&c, &recipe, lists)?;
    }
    if !is_dynamic(g, &c)? || !respects_lists(g, &c, lists)? {
        return Err(ReduceError::Unsound("final coloring failed verification".into()));
    }
    Ok(ColorRun {
        coloring: c,
        trace,
        fallback,
        redraws,
    })
}
